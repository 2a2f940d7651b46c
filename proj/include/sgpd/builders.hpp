#ifndef SGPD_BUILDERS_HPP_
#define SGPD_BUILDERS_HPP_

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sgpd/result.hpp"
#include "sgpd/semigroupoid.hpp"

namespace sgpd {

// Builds the totally composable structure from a multiplication table.
// table[i][j] names the product of elements[i] and elements[j].
inline Validated<Semigroupoid> from_semigroup(const std::vector<std::string>& elements,
                                              const std::vector<std::vector<std::string>>& table) {
  const int n = static_cast<int>(elements.size());
  if (n == 0) {
    return Violation{"semigroup", "a semigroup must be non-empty"};
  }
  if (static_cast<int>(table.size()) != n) {
    return Violation{"semigroup", "multiplication table must be total"};
  }
  std::vector<std::array<std::string, 3>> products;
  products.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n) {
      return Violation{"semigroup", "multiplication table must be total"};
    }
    for (int j = 0; j < n; ++j) {
      products.push_back({elements[i], elements[j], table[i][j]});
    }
  }
  auto out = Semigroupoid::validate(elements, products);
  if (out.ok()) {
    detail::require(out.value().is_categorical(), "semigroup produced a non-categorical structure");
  }
  return out;
}

// A finite category presented by objects, morphisms (identities included),
// endpoint maps, and a composition table on the composable pairs.
struct CategoryData {
  std::vector<std::string> objects;
  std::vector<std::string> morphisms;
  std::map<std::string, std::string> dom;
  std::map<std::string, std::string> ran;
  std::map<std::pair<std::string, std::string>, std::string> compose;
};

// Category as a semigroupoid: morphisms compose exactly when source and
// target objects meet. Each object must own an identity morphism.
inline Validated<Semigroupoid> from_category(const CategoryData& cat) {
  const int n = static_cast<int>(cat.morphisms.size());
  auto endpoint = [&](const std::map<std::string, std::string>& m,
                      const std::string& f) -> const std::string* {
    auto it = m.find(f);
    return it == m.end() ? nullptr : &it->second;
  };
  for (const auto& f : cat.morphisms) {
    const std::string* d = endpoint(cat.dom, f);
    const std::string* r = endpoint(cat.ran, f);
    if (d == nullptr || r == nullptr) {
      return Violation{"category", "morphism " + f + " lacks dom or ran"};
    }
    for (const auto& o : {*d, *r}) {
      if (std::find(cat.objects.begin(), cat.objects.end(), o) == cat.objects.end()) {
        return Violation{"category", "morphism " + f + " uses unknown object " + o};
      }
    }
  }

  std::vector<std::array<std::string, 3>> products;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const std::string &f = cat.morphisms[i], &g = cat.morphisms[j];
      bool matched = cat.dom.at(f) == cat.ran.at(g);
      auto it = cat.compose.find({f, g});
      if (!matched) {
        if (it != cat.compose.end()) {
          return Violation{"category", "composition " + f + "*" + g + " given but dom(" + f +
                                           ") != ran(" + g + ")"};
        }
        continue;
      }
      if (it == cat.compose.end()) {
        return Violation{"category", "missing composition " + f + "*" + g};
      }
      const std::string& fg = it->second;
      const std::string* d = endpoint(cat.dom, fg);
      const std::string* r = endpoint(cat.ran, fg);
      if (d == nullptr || r == nullptr) {
        return Violation{"category", "composite " + fg + " is not a listed morphism"};
      }
      if (*d != cat.dom.at(g) || *r != cat.ran.at(f)) {
        return Violation{"category", "composite " + f + "*" + g + " = " + fg +
                                         " breaks dom/ran compatibility"};
      }
      products.push_back({f, g, fg});
    }
  }

  auto out = Semigroupoid::validate(cat.morphisms, products);
  if (!out.ok()) {
    return out;
  }
  const Semigroupoid& s = out.value();
  std::vector<int> ids = s.identity_elements();
  for (const auto& o : cat.objects) {
    bool found = false;
    for (int e : ids) {
      if (cat.dom.at(s.name(e)) == o && cat.ran.at(s.name(e)) == o) {
        found = true;
        break;
      }
    }
    if (!found) {
      return Violation{"category", "missing identity for object " + o};
    }
  }
  detail::require(ids.size() == cat.objects.size(), "extra identity morphisms");
  detail::require(s.is_categorical(), "category produced a non-categorical structure");
  return out;
}

// A directed graph on which a compatible product is to be declared.
struct GraphStructure {
  std::vector<std::string> vertices;
  std::vector<std::string> edges;
  std::map<std::string, std::string> dom;
  std::map<std::string, std::string> ran;
};

// Graphed structure: edges g, h compose exactly when dom(g) = ran(h), and
// the product must connect ran(g) back to dom(h).
inline Validated<Semigroupoid> from_graph(const GraphStructure& graph,
                                          const std::map<std::pair<std::string, std::string>,
                                                         std::string>& products) {
  for (const auto& g : graph.edges) {
    if (graph.dom.find(g) == graph.dom.end() || graph.ran.find(g) == graph.ran.end()) {
      return Violation{"graph", "edge " + g + " lacks dom or ran"};
    }
  }
  std::vector<std::array<std::string, 3>> table;
  for (const auto& g : graph.edges) {
    for (const auto& h : graph.edges) {
      bool matched = graph.dom.at(g) == graph.ran.at(h);
      auto it = products.find({g, h});
      if (!matched) {
        if (it != products.end()) {
          return Violation{"graph", "product " + g + "*" + h + " given but dom(" + g +
                                        ") != ran(" + h + ")"};
        }
        continue;
      }
      if (it == products.end()) {
        return Violation{"graph", "missing product " + g + "*" + h};
      }
      const std::string& gh = it->second;
      auto d = graph.dom.find(gh);
      auto r = graph.ran.find(gh);
      if (d == graph.dom.end() || r == graph.ran.end()) {
        return Violation{"graph", "product " + gh + " is not a listed edge"};
      }
      if (d->second != graph.dom.at(h) || r->second != graph.ran.at(g)) {
        return Violation{"graph", "product " + g + "*" + h + " = " + gh +
                                      " breaks dom/ran compatibility"};
      }
      table.push_back({g, h, gh});
    }
  }
  auto out = Semigroupoid::validate(graph.edges, table);
  if (out.ok()) {
    detail::require(out.value().is_categorical(), "graphed structure is not categorical");
  }
  return out;
}

// Builds the structure of admissible words over an alphabet with allowed
// transitions given by a 0-1 matrix. Words compose by concatenation when
// the junction is an allowed transition. A cycle in the transition graph
// would make the word set infinite, so such matrices are rejected.
inline Validated<Semigroupoid> markov_from_matrix(const std::vector<std::string>& alphabet,
                                                  const std::vector<std::vector<int>>& matrix) {
  const int k = static_cast<int>(alphabet.size());
  if (k == 0) {
    return Violation{"markov", "alphabet is empty"};
  }
  if (static_cast<int>(matrix.size()) != k) {
    return Violation{"markov", "matrix must be square over the alphabet"};
  }
  for (const auto& row : matrix) {
    if (static_cast<int>(row.size()) != k) {
      return Violation{"markov", "matrix must be square over the alphabet"};
    }
    for (int v : row) {
      if (v != 0 && v != 1) {
        return Violation{"markov", "matrix entries must be 0 or 1"};
      }
    }
  }

  // cycle check on the transition graph; a cycle yields infinitely many words
  {
    std::vector<int> state(k, 0);  // 0 unseen, 1 on stack, 2 done
    std::vector<std::pair<int, int>> stack;
    for (int start = 0; start < k; ++start) {
      if (state[start] != 0) {
        continue;
      }
      stack.push_back({start, 0});
      state[start] = 1;
      while (!stack.empty()) {
        auto& [v, next] = stack.back();
        bool advanced = false;
        while (next < k) {
          int w = next++;
          if (matrix[v][w] != 1) {
            continue;
          }
          if (state[w] == 1) {
            return Violation{"markov-infinite",
                             "transition cycle through " + alphabet[w] +
                                 " makes the word set infinite"};
          }
          if (state[w] == 0) {
            state[w] = 1;
            stack.push_back({w, 0});
            advanced = true;
            break;
          }
        }
        if (!advanced && stack.back().second >= k) {
          state[stack.back().first] = 2;
          stack.pop_back();
        }
      }
    }
  }

  // enumerate admissible words by length, then lexicographically
  std::vector<std::vector<int>> words;
  std::vector<std::vector<int>> frontier;
  for (int a = 0; a < k; ++a) {
    frontier.push_back({a});
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& w : frontier) {
      words.push_back(w);
      for (int a = 0; a < k; ++a) {
        if (matrix[w.back()][a] == 1) {
          auto w2 = w;
          w2.push_back(a);
          next.push_back(std::move(w2));
        }
      }
    }
    frontier = std::move(next);
  }

  std::vector<std::string> names;
  names.reserve(words.size());
  for (const auto& w : words) {
    std::string name;
    for (int a : w) {
      name += alphabet[a];
    }
    names.push_back(name);
  }
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = i + 1; j < names.size(); ++j) {
      if (names[i] == names[j]) {
        return Violation{"markov", "word name collision: " + names[i] +
                                       " (rename alphabet letters)"};
      }
    }
  }

  const int n = static_cast<int>(words.size());
  auto find_word = [&](const std::vector<int>& w) -> int {
    for (int i = 0; i < n; ++i) {
      if (words[i] == w) {
        return i;
      }
    }
    return -1;
  };
  std::vector<int> table(static_cast<std::size_t>(n) * n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (matrix[words[i].back()][words[j].front()] == 1) {
        auto cat = words[i];
        cat.insert(cat.end(), words[j].begin(), words[j].end());
        int p = find_word(cat);
        detail::require(p >= 0, "concatenation of admissible words is admissible");
        table[static_cast<std::size_t>(i) * n + j] = p;
      }
    }
  }
  auto out = Semigroupoid::validate_indexed(std::move(names), std::move(table));
  detail::require(out.ok(), "admissible words form a semigroupoid");
  return out;
}

}  // namespace sgpd

#endif  // SGPD_BUILDERS_HPP_
