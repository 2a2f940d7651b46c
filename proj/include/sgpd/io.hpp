#ifndef SGPD_IO_HPP_
#define SGPD_IO_HPP_

#include <array>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sgpd/globalization.hpp"
#include "sgpd/partial_action.hpp"
#include "sgpd/result.hpp"
#include "sgpd/semigroupoid.hpp"
#include "sgpd/specializations.hpp"

namespace sgpd {

// Position-carrying error for malformed input text. Semantic problems in
// well-formed text are reported as Violations instead.
struct SyntaxError : std::runtime_error {
  int line;
  int column;

  SyntaxError(int line_, int column_, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_) + ", column " +
                           std::to_string(column_) + ": " + what),
        line(line_),
        column(column_) {}
};

namespace io_detail {

inline bool token_char(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' ||
         c == '!';
}

struct Token {
  std::string text;
  int column;  // 1-based
};

struct Line {
  int number = 0;  // 1-based
  std::vector<Token> tokens;
  std::string raw;  // comment-stripped
};

inline std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    std::string_view raw =
        text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    ++number;
    std::size_t hash = raw.find('#');
    if (hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    Line line;
    line.number = number;
    line.raw = std::string(raw);
    std::size_t i = 0;
    while (i < raw.size()) {
      if (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r') {
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') {
        ++i;
      }
      line.tokens.push_back({std::string(raw.substr(start, i - start)), static_cast<int>(start) + 1});
    }
    if (!line.tokens.empty()) {
      out.push_back(std::move(line));
    }
    if (end == std::string_view::npos) {
      break;
    }
    pos = end + 1;
  }
  return out;
}

inline void check_name(const Token& tok, int line) {
  for (char c : tok.text) {
    if (!token_char(c)) {
      throw SyntaxError(line, tok.column, "invalid character in identifier '" + tok.text + "'");
    }
  }
}

// Splits "a->b" into its two identifiers.
inline std::pair<std::string, std::string> split_arrow(const Token& tok, int line) {
  std::size_t at = tok.text.find("->");
  if (at == std::string::npos || at == 0 || at + 2 >= tok.text.size()) {
    throw SyntaxError(line, tok.column, "expected a 'from->to' entry, got '" + tok.text + "'");
  }
  Token from{tok.text.substr(0, at), tok.column};
  Token to{tok.text.substr(at + 2), tok.column + static_cast<int>(at) + 2};
  check_name(from, line);
  check_name(to, line);
  return {from.text, to.text};
}

struct SemigroupoidBlock {
  std::vector<std::string> elements;
  std::vector<std::array<std::string, 3>> products;
};

struct ActionBlock {
  int line = 0;
  std::string over;  // path, possibly empty
  std::vector<std::string> points;
  std::vector<std::pair<std::string, std::vector<std::string>>> doms;
  std::vector<PointMap> maps;
};

struct Document {
  std::optional<SemigroupoidBlock> sgpd;
  std::optional<ActionBlock> action;
};

inline std::string keyword_name(const Line& line, std::size_t at, const char* what) {
  // "dom s:" and "map s:" carry the element in the second token
  if (at >= line.tokens.size()) {
    throw SyntaxError(line.number, static_cast<int>(line.raw.size()) + 1,
                      std::string("expected an element after '") + what + "'");
  }
  const Token& tok = line.tokens[at];
  if (tok.text.size() < 2 || tok.text.back() != ':') {
    throw SyntaxError(line.number, tok.column, std::string("expected '<element>:' after '") + what + "'");
  }
  Token name{tok.text.substr(0, tok.text.size() - 1), tok.column};
  check_name(name, line.number);
  return name.text;
}

inline Document parse_blocks(std::string_view text) {
  Document doc;
  enum class Mode { none, sgpd, action };
  Mode mode = Mode::none;
  for (const Line& line : split_lines(text)) {
    const Token& head = line.tokens.front();
    if (head.text == "semigroupoid") {
      if (line.tokens.size() != 1) {
        throw SyntaxError(line.number, line.tokens[1].column, "unexpected token after header");
      }
      if (doc.sgpd.has_value()) {
        throw SyntaxError(line.number, head.column, "second semigroupoid block");
      }
      doc.sgpd.emplace();
      mode = Mode::sgpd;
      continue;
    }
    if (head.text == "action") {
      if (line.tokens.size() != 1) {
        throw SyntaxError(line.number, line.tokens[1].column, "unexpected token after header");
      }
      if (doc.action.has_value()) {
        throw SyntaxError(line.number, head.column, "second action block");
      }
      doc.action.emplace();
      doc.action->line = line.number;
      mode = Mode::action;
      continue;
    }
    if (mode == Mode::sgpd) {
      if (head.text == "elements:") {
        for (std::size_t i = 1; i < line.tokens.size(); ++i) {
          check_name(line.tokens[i], line.number);
          doc.sgpd->elements.push_back(line.tokens[i].text);
        }
        continue;
      }
      if (head.text == "compose:") {
        if (line.tokens.size() != 5 || line.tokens[3].text != "->") {
          int col = line.tokens.size() > 1 ? line.tokens.back().column : head.column;
          throw SyntaxError(line.number, col, "expected 'compose: a b -> c'");
        }
        for (std::size_t i : {std::size_t{1}, std::size_t{2}, std::size_t{4}}) {
          check_name(line.tokens[i], line.number);
        }
        doc.sgpd->products.push_back(
            {line.tokens[1].text, line.tokens[2].text, line.tokens[4].text});
        continue;
      }
      throw SyntaxError(line.number, head.column, "unexpected keyword '" + head.text + "'");
    }
    if (mode == Mode::action) {
      if (head.text == "over:") {
        std::size_t at = line.raw.find("over:");
        std::string rest = line.raw.substr(at + 5);
        std::size_t lo = rest.find_first_not_of(" \t\r");
        std::size_t hi = rest.find_last_not_of(" \t\r");
        if (lo == std::string::npos) {
          throw SyntaxError(line.number, head.column, "expected a path after 'over:'");
        }
        doc.action->over = rest.substr(lo, hi - lo + 1);
        continue;
      }
      if (head.text == "set:") {
        for (std::size_t i = 1; i < line.tokens.size(); ++i) {
          check_name(line.tokens[i], line.number);
          doc.action->points.push_back(line.tokens[i].text);
        }
        continue;
      }
      if (head.text == "dom") {
        std::string element = keyword_name(line, 1, "dom");
        std::vector<std::string> points;
        for (std::size_t i = 2; i < line.tokens.size(); ++i) {
          check_name(line.tokens[i], line.number);
          points.push_back(line.tokens[i].text);
        }
        doc.action->doms.emplace_back(std::move(element), std::move(points));
        continue;
      }
      if (head.text == "map") {
        PointMap pm;
        pm.element = keyword_name(line, 1, "map");
        for (std::size_t i = 2; i < line.tokens.size(); ++i) {
          pm.entries.push_back(split_arrow(line.tokens[i], line.number));
        }
        doc.action->maps.push_back(std::move(pm));
        continue;
      }
      throw SyntaxError(line.number, head.column, "unexpected keyword '" + head.text + "'");
    }
    throw SyntaxError(line.number, head.column,
                      "expected a 'semigroupoid' or 'action' header first");
  }
  return doc;
}

inline Validated<Semigroupoid> build_semigroupoid(const SemigroupoidBlock& block) {
  return Semigroupoid::validate(block.elements, block.products);
}

inline Validated<PartialAction> build_action(const ActionBlock& block, const Semigroupoid& sgpd) {
  // merge dom and map lines: a dom line fixes the expected domain of its
  // element, a map line provides the values; they must agree
  std::vector<PointMap> maps = block.maps;
  for (const auto& [element, points] : block.doms) {
    std::vector<std::string> keys;
    for (const PointMap& pm : maps) {
      if (pm.element == element) {
        for (const auto& [from, to] : pm.entries) {
          keys.push_back(from);
        }
      }
    }
    auto sorted = [](std::vector<std::string> v) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
      return v;
    };
    if (sorted(keys) != sorted(points)) {
      return Violation{"action", "dom and map entries disagree for element " + element};
    }
  }
  // a map line without a dom line is fine; its keys fix the domain
  return PartialAction::validate(sgpd, block.points, maps);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot read file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace io_detail

// Parses a document holding a single semigroupoid block.
inline Validated<Semigroupoid> parse_semigroupoid(std::string_view text) {
  io_detail::Document doc = io_detail::parse_blocks(text);
  if (!doc.sgpd.has_value()) {
    throw SyntaxError(1, 1, "no semigroupoid block in document");
  }
  return io_detail::build_semigroupoid(*doc.sgpd);
}

// Parses an action block against an already-loaded structure.
inline Validated<PartialAction> parse_action(std::string_view text, const Semigroupoid& sgpd) {
  io_detail::Document doc = io_detail::parse_blocks(text);
  if (!doc.action.has_value()) {
    throw SyntaxError(1, 1, "no action block in document");
  }
  return io_detail::build_action(*doc.action, sgpd);
}

// A full document: either a semigroupoid, or an action with its structure
// taken from a preceding block or an 'over:' file reference.
struct ParsedDocument {
  std::optional<Semigroupoid> semigroupoid;
  std::optional<PartialAction> action;
};

inline Validated<ParsedDocument> parse_document(std::string_view text,
                                                const std::string& base_dir = ".",
                                                int depth = 0) {
  if (depth > 8) {
    throw std::runtime_error("over: references nest too deeply");
  }
  io_detail::Document doc = io_detail::parse_blocks(text);
  ParsedDocument out;
  if (doc.sgpd.has_value()) {
    auto sgpd = io_detail::build_semigroupoid(*doc.sgpd);
    if (!sgpd.ok()) {
      return sgpd.violation();
    }
    out.semigroupoid = std::move(sgpd).value();
  }
  if (doc.action.has_value()) {
    if (!doc.action->over.empty()) {
      std::string path = doc.action->over;
      if (!path.empty() && path.front() != '/') {
        path = base_dir + "/" + path;
      }
      auto referenced = parse_document(io_detail::read_file(path), base_dir, depth + 1);
      if (!referenced.ok()) {
        return referenced.violation();
      }
      if (!referenced.value().semigroupoid.has_value()) {
        return Violation{"action", "referenced file holds no semigroupoid: " + path};
      }
      out.semigroupoid = referenced.value().semigroupoid;
    }
    if (!out.semigroupoid.has_value()) {
      throw SyntaxError(doc.action->line, 1,
                        "action block needs a preceding semigroupoid block or an 'over:' line");
    }
    auto action = io_detail::build_action(*doc.action, *out.semigroupoid);
    if (!action.ok()) {
      return action.violation();
    }
    out.action = std::move(action).value();
  }
  if (!out.semigroupoid.has_value() && !out.action.has_value()) {
    throw SyntaxError(1, 1, "empty document");
  }
  return out;
}

// --------------------------------------------------------------------------
// Serialization. All output is canonical: fixed line order, no trailing
// spaces, one trailing newline. Parsing a serialized value reproduces it.

inline std::string serialize(const Semigroupoid& s) {
  std::ostringstream out;
  out << "semigroupoid\n";
  out << "elements:";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out << ' ' << s.name(static_cast<int>(i));
  }
  out << '\n';
  for (const auto& [a, b] : s.composable_pairs()) {
    out << "compose: " << s.name(a) << ' ' << s.name(b) << " -> " << s.name(s.product(a, b))
        << '\n';
  }
  return out.str();
}

inline std::string serialize(const PartialAction& act) {
  std::ostringstream out;
  out << serialize(act.structure()) << '\n';
  out << "action\n";
  out << "set:";
  for (std::size_t x = 0; x < act.carrier_size(); ++x) {
    out << ' ' << act.point_name(static_cast<int>(x));
  }
  out << '\n';
  for (int s = 0; s < static_cast<int>(act.structure().size()); ++s) {
    if (act.domain(s).empty()) {
      continue;
    }
    out << "dom " << act.structure().name(s) << ':';
    for (int x : act.domain(s)) {
      out << ' ' << act.point_name(x);
    }
    out << '\n';
    out << "map " << act.structure().name(s) << ':';
    for (int x : act.domain(s)) {
      out << ' ' << act.point_name(x) << "->" << act.point_name(act.apply(s, x));
    }
    out << '\n';
  }
  return out.str();
}

inline std::string tagged_point_name(const Globalization& g, TaggedPoint p) {
  const std::string tag =
      p.tag == kOriginTag ? "δ" : g.base().structure().name(p.tag);
  return "(" + tag + "," + g.base().point_name(p.point) + ")";
}

// Full report of a computed globalization: the classes with their members,
// the induced domains and maps, the embedding, and the degeneracy split.
inline std::string serialize(const Globalization& g) {
  std::ostringstream out;
  const PartialAction& base = g.base();
  const PartialAction& global = g.global_action();
  out << "globalization\n";
  out << "set:";
  for (std::size_t x = 0; x < base.carrier_size(); ++x) {
    out << ' ' << base.point_name(static_cast<int>(x));
  }
  out << '\n';
  out << "classes: " << g.class_count() << '\n';
  for (int c = 0; c < g.class_count(); ++c) {
    out << "class " << g.class_name(c) << ':';
    for (const TaggedPoint& p : g.class_members(c)) {
      out << ' ' << tagged_point_name(g, p);
    }
    out << '\n';
  }
  for (int s = 0; s < static_cast<int>(base.structure().size()); ++s) {
    out << "dom " << base.structure().name(s) << ':';
    for (int c : global.domain(s)) {
      out << ' ' << g.class_name(c);
    }
    out << '\n';
    out << "map " << base.structure().name(s) << ':';
    for (int c : global.domain(s)) {
      out << ' ' << g.class_name(c) << "->" << g.class_name(g.beta(s, c));
    }
    out << '\n';
  }
  out << "delta:";
  for (std::size_t x = 0; x < base.carrier_size(); ++x) {
    out << ' ' << base.point_name(static_cast<int>(x)) << "->"
        << g.class_name(g.delta(static_cast<int>(x)));
  }
  out << '\n';
  DegeneracySplit split = degeneracy_split(global);
  out << "nondegenerate-part:";
  for (int c : split.active) {
    out << ' ' << g.class_name(c);
  }
  out << '\n';
  out << "degenerate-part:";
  for (int c : split.inert) {
    out << ' ' << g.class_name(c);
  }
  out << '\n';
  return out.str();
}

inline std::string serialize(const TensorGlobalization& t) {
  std::ostringstream out;
  const PartialAction& base = t.base;
  const int m = static_cast<int>(base.carrier_size());
  out << "tensor\n";
  out << "set:";
  for (int x = 0; x < m; ++x) {
    out << ' ' << base.point_name(x);
  }
  out << '\n';
  out << "classes: " << t.classes.class_count() << '\n';
  for (std::size_t c = 0; c < t.classes.class_count(); ++c) {
    out << "class " << t.action.point_name(static_cast<int>(c)) << ':';
    for (int i : t.classes.members(static_cast<int>(c))) {
      out << " (" << t.extended_names[i / std::max(m, 1)] << ','
          << base.point_name(i % std::max(m, 1)) << ')';
    }
    out << '\n';
  }
  for (int s = 0; s < static_cast<int>(base.structure().size()); ++s) {
    out << "gamma " << base.structure().name(s) << ':';
    for (std::size_t c = 0; c < t.action.carrier_size(); ++c) {
      out << ' ' << t.action.point_name(static_cast<int>(c)) << "->"
          << t.action.point_name(t.action.apply(s, static_cast<int>(c)));
    }
    out << '\n';
  }
  out << "unit:";
  for (int x = 0; x < m; ++x) {
    out << ' ' << base.point_name(x) << "->" << t.action.point_name(t.unit_classes[x]);
  }
  out << '\n';
  return out.str();
}

inline std::string format_comparison(const TensorComparison& cmp) {
  std::ostringstream out;
  out << "compare\n";
  out << "nondegenerate: " << (cmp.nondegenerate ? "yes" : "no") << '\n';
  out << "universal-classes: " << cmp.universal.class_count() << '\n';
  out << "tensor-classes: " << cmp.tensor.action.carrier_size() << '\n';
  out << "phi:";
  for (int c = 0; c < cmp.universal.class_count(); ++c) {
    out << ' ' << cmp.universal.class_name(c) << "->"
        << cmp.tensor.action.point_name(cmp.canonical[c]);
  }
  out << '\n';
  out << "bijective: " << (cmp.bijective ? "yes" : "no") << '\n';
  out << "inverse-morphism: "
      << (cmp.inverse_is_morphism.has_value() ? (*cmp.inverse_is_morphism ? "yes" : "no") : "n/a")
      << '\n';
  out << "verdict: " << to_string(cmp.verdict) << '\n';
  return out.str();
}

// --------------------------------------------------------------------------
// DOT rendering: one node per element (or class), one labeled edge per
// defined composition (or per domain class and element).

inline std::string to_dot(const Semigroupoid& s) {
  if (s.size() == 0) {
    return "digraph { }\n";
  }
  std::ostringstream out;
  out << "digraph {\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out << "  \"" << s.name(static_cast<int>(i)) << "\";\n";
  }
  for (const auto& [a, b] : s.composable_pairs()) {
    out << "  \"" << s.name(a) << "\" -> \"" << s.name(s.product(a, b)) << "\" [label=\""
        << s.name(b) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

inline std::string to_dot(const Globalization& g) {
  if (g.class_count() == 0) {
    return "digraph { }\n";
  }
  std::ostringstream out;
  out << "digraph {\n";
  for (int c = 0; c < g.class_count(); ++c) {
    out << "  \"" << g.class_name(c) << "\";\n";
  }
  for (int s = 0; s < static_cast<int>(g.base().structure().size()); ++s) {
    for (int c : g.domain_of(s)) {
      out << "  \"" << g.class_name(c) << "\" -> \"" << g.class_name(g.beta(s, c))
          << "\" [label=\"" << g.base().structure().name(s) << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace sgpd

#endif  // SGPD_IO_HPP_
