// Command-line front end: validate and inspect structure files, compute
// globalizations and tensor comparisons, and run the enumeration oracles.
//
// Exit codes: 0 success, 1 validation failure, 2 syntax error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sgpd/builders.hpp"
#include "sgpd/globalization.hpp"
#include "sgpd/io.hpp"
#include "sgpd/oracle.hpp"
#include "sgpd/partial_action.hpp"
#include "sgpd/specializations.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitSyntax = 2;

struct CliError {
  int code;
  std::string message;
};

std::string dirname_of(const std::string& path) {
  std::size_t at = path.find_last_of('/');
  return at == std::string::npos ? std::string(".") : path.substr(0, at);
}

sgpd::ParsedDocument load_document(const std::string& path) {
  std::string text = sgpd::io_detail::read_file(path);
  auto doc = sgpd::parse_document(text, dirname_of(path));
  if (!doc.ok()) {
    throw CliError{kExitInvalid, doc.violation().message()};
  }
  if (doc.value().semigroupoid.has_value() && doc.value().semigroupoid->size() == 0) {
    throw CliError{kExitInvalid, "empty semigroupoid (no elements)"};
  }
  return doc.value();
}

sgpd::PartialAction load_action(const std::string& path) {
  sgpd::ParsedDocument doc = load_document(path);
  if (!doc.action.has_value()) {
    throw CliError{kExitInvalid, "file holds no action block: " + path};
  }
  return *doc.action;
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw CliError{kExitInvalid, "cannot write file: " + out_path};
  }
  out << text;
}

std::vector<std::string> split_list(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t at = text.find(sep, pos);
    if (at == std::string::npos) {
      out.push_back(text.substr(pos));
      break;
    }
    out.push_back(text.substr(pos, at - pos));
    pos = at + 1;
  }
  return out;
}

int cmd_validate(const std::string& path) {
  sgpd::ParsedDocument doc = load_document(path);
  if (doc.action.has_value()) {
    std::cout << "valid action: " << doc.action->carrier_size() << " points over "
              << doc.action->structure().size() << " elements\n";
  } else {
    std::cout << "valid semigroupoid: " << doc.semigroupoid->size() << " elements, "
              << doc.semigroupoid->composable_pairs().size() << " composable pairs\n";
  }
  return kExitOk;
}

int cmd_info(const std::string& path) {
  sgpd::ParsedDocument doc = load_document(path);
  const sgpd::Semigroupoid& s =
      doc.action.has_value() ? doc.action->structure() : *doc.semigroupoid;
  std::cout << "semigroupoid: " << s.size() << " elements, " << s.composable_pairs().size()
            << " composable pairs\n";
  std::cout << "categorical: " << (s.is_categorical() ? "yes" : "no") << '\n';
  std::cout << "identities:";
  for (int e : s.identity_elements()) {
    std::cout << ' ' << s.name(e);
  }
  std::cout << '\n';
  sgpd::Partition classes = sgpd::source_classes(s);
  std::cout << "source-classes:";
  for (const auto& cls : classes.classes()) {
    std::cout << " {";
    for (std::size_t i = 0; i < cls.size(); ++i) {
      std::cout << (i == 0 ? "" : " ") << s.name(cls[i]);
    }
    std::cout << '}';
  }
  std::cout << '\n';
  if (doc.action.has_value()) {
    const sgpd::PartialAction& act = *doc.action;
    std::cout << "action: " << act.carrier_size() << " points\n";
    sgpd::GlobalityReport report = sgpd::globality(act);
    if (report.global) {
      std::cout << "global: yes\n";
    } else {
      const auto& w = report.witnesses.front();
      std::cout << "global: no (" << w.rule << " at (" << s.name(w.s) << "," << s.name(w.t)
                << "))\n";
    }
    sgpd::DegeneracySplit split = sgpd::degeneracy_split(act);
    std::cout << "nondegenerate-part:";
    for (int x : split.active) {
      std::cout << ' ' << act.point_name(x);
    }
    std::cout << '\n';
    std::cout << "degenerate-part:";
    for (int x : split.inert) {
      std::cout << ' ' << act.point_name(x);
    }
    std::cout << '\n';
  }
  return kExitOk;
}

int cmd_globalize(const std::string& path, const std::string& out_path,
                  const std::string& dot_path) {
  sgpd::PartialAction act = load_action(path);
  sgpd::Globalization g = sgpd::globalize(act);
  write_output(sgpd::serialize(g), out_path);
  if (!dot_path.empty()) {
    std::ofstream dot(dot_path, std::ios::binary);
    if (!dot) {
      throw CliError{kExitInvalid, "cannot write file: " + dot_path};
    }
    dot << sgpd::to_dot(g);
  }
  return kExitOk;
}

int cmd_restrict(const std::string& path, const std::string& subset_list,
                 const std::string& out_path) {
  sgpd::PartialAction act = load_action(path);
  if (!sgpd::is_global(act)) {
    throw CliError{kExitInvalid, "restrict needs a global action"};
  }
  sgpd::sets::Set subset;
  for (const std::string& name : split_list(subset_list, ',')) {
    if (name.empty()) {
      continue;
    }
    int x = act.point_index(name);
    if (x < 0) {
      throw CliError{kExitInvalid, "unknown point in --subset: " + name};
    }
    subset.push_back(x);
  }
  write_output(sgpd::serialize(sgpd::restrict_to(act, subset)), out_path);
  return kExitOk;
}

int cmd_tensor(const std::string& path, const std::string& out_path) {
  sgpd::PartialAction act = load_action(path);
  if (!act.structure().is_semigroup()) {
    throw CliError{kExitInvalid, "tensor needs an action of a semigroup"};
  }
  write_output(sgpd::serialize(sgpd::tensor_globalize(act)), out_path);
  return kExitOk;
}

int cmd_compare(const std::string& path) {
  sgpd::PartialAction act = load_action(path);
  if (!act.structure().is_semigroup()) {
    throw CliError{kExitInvalid, "compare needs an action of a semigroup"};
  }
  std::cout << sgpd::format_comparison(sgpd::compare_globalizations(act));
  return kExitOk;
}

int cmd_markov(const std::string& alphabet_list, const std::string& edge_list,
               const std::string& out_path) {
  std::vector<std::string> alphabet = split_list(alphabet_list, ',');
  alphabet.erase(std::remove(alphabet.begin(), alphabet.end(), std::string()), alphabet.end());
  const int k = static_cast<int>(alphabet.size());
  std::vector<std::vector<int>> matrix(k, std::vector<int>(k, 0));
  if (!edge_list.empty()) {
    for (const std::string& edge : split_list(edge_list, ',')) {
      if (edge.empty()) {
        continue;
      }
      std::size_t at = edge.find(':');
      if (at == std::string::npos) {
        throw CliError{kExitSyntax, "expected --edges entries of the form from:to, got " + edge};
      }
      std::string from = edge.substr(0, at), to = edge.substr(at + 1);
      int i = -1, j = -1;
      for (int a = 0; a < k; ++a) {
        if (alphabet[a] == from) {
          i = a;
        }
        if (alphabet[a] == to) {
          j = a;
        }
      }
      if (i < 0 || j < 0) {
        throw CliError{kExitInvalid, "edge uses a letter outside the alphabet: " + edge};
      }
      matrix[i][j] = 1;
    }
  }
  auto s = sgpd::markov_from_matrix(alphabet, matrix);
  if (!s.ok()) {
    throw CliError{kExitInvalid, s.violation().message()};
  }
  write_output(sgpd::serialize(s.value()), out_path);
  return kExitOk;
}

int cmd_oracle(int order, int carrier) {
  sgpd::EnumerationBudget budget = sgpd::EnumerationBudget::from_env();
  std::vector<sgpd::Semigroupoid> structures = sgpd::enumerate_semigroupoids(order, budget);
  std::cout << "semigroupoids order=" << order << ": " << structures.size() << '\n';
  long long actions = 0;
  for (const sgpd::Semigroupoid& s : structures) {
    actions += sgpd::count_partial_actions(s, carrier, budget);
  }
  std::cout << "partial-actions carrier=" << carrier << ": " << actions << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite semigroupoids, partial actions, and globalization"};
  app.require_subcommand(1);

  std::string path, out_path, dot_path, subset_list, alphabet_list, edge_list;
  int order = 2, carrier = 2;

  auto* validate = app.add_subcommand("validate", "check a structure or action file");
  validate->add_option("file", path)->required();

  auto* info = app.add_subcommand("info", "summarize a structure or action file");
  info->add_option("file", path)->required();

  auto* globalize = app.add_subcommand("globalize", "compute the universal globalization");
  globalize->add_option("file", path)->required();
  globalize->add_option("-o,--output", out_path, "write the report here instead of stdout");
  globalize->add_option("--dot", dot_path, "also write a DOT rendering");

  auto* restrict_cmd = app.add_subcommand("restrict", "restrict a global action to a subset");
  restrict_cmd->add_option("file", path)->required();
  restrict_cmd->add_option("--subset", subset_list, "comma-separated carrier points")->required();
  restrict_cmd->add_option("-o,--output", out_path);

  auto* tensor = app.add_subcommand("tensor", "tensor-product globalization of a semigroup action");
  tensor->add_option("file", path)->required();
  tensor->add_option("-o,--output", out_path);

  auto* compare = app.add_subcommand("compare", "compare universal and tensor globalizations");
  compare->add_option("file", path)->required();

  auto* markov = app.add_subcommand("markov", "build the semigroupoid of admissible words");
  markov->add_option("--alphabet", alphabet_list, "comma-separated letters")->required();
  markov->add_option("--edges", edge_list, "comma-separated from:to transitions");
  markov->add_option("-o,--output", out_path);

  auto* oracle = app.add_subcommand("oracle", "enumeration counts at desk scale");
  oracle->add_option("--order", order, "semigroupoid order");
  oracle->add_option("--carrier", carrier, "carrier size");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) {
      return cmd_validate(path);
    }
    if (info->parsed()) {
      return cmd_info(path);
    }
    if (globalize->parsed()) {
      return cmd_globalize(path, out_path, dot_path);
    }
    if (restrict_cmd->parsed()) {
      return cmd_restrict(path, subset_list, out_path);
    }
    if (tensor->parsed()) {
      return cmd_tensor(path, out_path);
    }
    if (compare->parsed()) {
      return cmd_compare(path);
    }
    if (markov->parsed()) {
      return cmd_markov(alphabet_list, edge_list, out_path);
    }
    if (oracle->parsed()) {
      return cmd_oracle(order, carrier);
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.code;
  } catch (const sgpd::SyntaxError& e) {
    std::cerr << "syntax error: " << e.what() << '\n';
    return kExitSyntax;
  } catch (const sgpd::budget_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitOk;
}
