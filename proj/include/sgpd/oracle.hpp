#ifndef SGPD_ORACLE_HPP_
#define SGPD_ORACLE_HPP_

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "sgpd/budget.hpp"
#include "sgpd/builders.hpp"
#include "sgpd/globalization.hpp"
#include "sgpd/morphism.hpp"
#include "sgpd/partial_action.hpp"
#include "sgpd/result.hpp"
#include "sgpd/semigroupoid.hpp"
#include "sgpd/specializations.hpp"

namespace sgpd {

namespace detail {

inline std::vector<std::string> default_names(int n, const char* prefix) {
  static const char* letters[] = {"a", "b", "c", "d"};
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) {
    if (n <= 4 && prefix == nullptr) {
      out.emplace_back(letters[i]);
    } else {
      out.emplace_back(std::string(prefix == nullptr ? "e" : prefix) + std::to_string(i));
    }
  }
  return out;
}

// Minimal lexicographic encoding of the product table over all element
// permutations; -1 cells encode as 0.
inline std::vector<int> canonical_key(const Semigroupoid& s) {
  const int n = static_cast<int>(s.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best;
  do {
    std::vector<int> inverse(n);
    for (int i = 0; i < n; ++i) {
      inverse[perm[i]] = i;
    }
    std::vector<int> key;
    key.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        int v = s.product(perm[i], perm[j]);
        key.push_back(v < 0 ? 0 : inverse[v] + 1);
      }
    }
    if (best.empty() || key < best) {
      best = std::move(key);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Allocation-free version of the two action laws over a dense map family.
// Must agree with PartialAction::validate_indexed, which re-checks every
// family this accepts.
inline bool family_satisfies_laws(const Semigroupoid& s, const std::vector<std::vector<int>>& map,
                                  int carrier) {
  const int n = static_cast<int>(s.size());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!s.composable(a, b)) {
        continue;
      }
      const int ab = s.product(a, b);
      for (int x = 0; x < carrier; ++x) {
        int y = map[b][x];
        if (y < 0) {
          continue;
        }
        bool through = map[a][y] >= 0;
        bool direct = map[ab][x] >= 0;
        if (through != direct) {
          return false;
        }
        if (direct && map[a][y] != map[ab][x]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace detail

// Every structure on n elements that passes validation, one per renaming
// class, in a deterministic order.
inline std::vector<Semigroupoid> enumerate_semigroupoids(int n,
                                                         const EnumerationBudget& budget = {}) {
  if (n < 0 || n > budget.max_order) {
    throw budget_error("enumerate_semigroupoids: order exceeds the budget");
  }
  std::vector<std::string> names = detail::default_names(n, nullptr);
  if (n == 0) {
    return {Semigroupoid::validate_indexed({}, {}).value()};
  }
  std::vector<Semigroupoid> out;
  std::vector<std::vector<int>> seen_keys;
  const int cells = n * n;
  for (long long mask = 0; mask < (1LL << cells); ++mask) {
    std::vector<int> slots;
    for (int c = 0; c < cells; ++c) {
      if (mask & (1LL << c)) {
        slots.push_back(c);
      }
    }
    std::vector<int> choice(slots.size(), 0);
    while (true) {
      std::vector<int> table(cells, -1);
      for (std::size_t i = 0; i < slots.size(); ++i) {
        table[slots[i]] = choice[i];
      }
      auto candidate = Semigroupoid::validate_indexed(names, std::move(table));
      if (candidate.ok()) {
        std::vector<int> key = detail::canonical_key(candidate.value());
        if (std::find(seen_keys.begin(), seen_keys.end(), key) == seen_keys.end()) {
          seen_keys.push_back(std::move(key));
          out.push_back(std::move(candidate).value());
        }
      }
      std::size_t i = 0;
      for (; i < choice.size(); ++i) {
        if (++choice[i] < n) {
          break;
        }
        choice[i] = 0;
      }
      if (i == choice.size()) {
        break;
      }
    }
  }
  return out;
}

namespace detail {

// Walks every dense map family on m points in a deterministic order and
// hands the law-satisfying ones to the callback.
template <typename Visitor>
void walk_action_families(const Semigroupoid& s, int m, const EnumerationBudget& budget,
                          Visitor&& visit) {
  if (m < 0 || m > budget.max_carrier) {
    throw budget_error("enumerate_partial_actions: carrier exceeds the budget");
  }
  const int n = static_cast<int>(s.size());

  // all partial self-maps of the carrier, as dense rows
  std::vector<std::vector<int>> rows;
  for (int mask = 0; mask < (1 << m); ++mask) {
    std::vector<int> bits;
    for (int x = 0; x < m; ++x) {
      if (mask & (1 << x)) {
        bits.push_back(x);
      }
    }
    std::vector<int> choice(bits.size(), 0);
    while (true) {
      std::vector<int> row(m, -1);
      for (std::size_t i = 0; i < bits.size(); ++i) {
        row[bits[i]] = choice[i];
      }
      rows.push_back(std::move(row));
      std::size_t i = 0;
      for (; i < choice.size(); ++i) {
        if (++choice[i] < m) {
          break;
        }
        choice[i] = 0;
      }
      if (i == choice.size()) {
        break;
      }
    }
  }

  std::vector<std::size_t> pick(n, 0);
  std::vector<std::vector<int>> map(n);
  while (true) {
    for (int e = 0; e < n; ++e) {
      map[e] = rows[pick[e]];
    }
    if (family_satisfies_laws(s, map, m)) {
      visit(map);
    }
    std::size_t i = 0;
    for (; i < pick.size(); ++i) {
      if (++pick[i] < rows.size()) {
        break;
      }
      pick[i] = 0;
    }
    if (i == pick.size()) {
      break;
    }
  }
}

}  // namespace detail

// Every (domain, map) family on a fixed m-point carrier that validates
// over the given structure, in a deterministic order.
inline std::vector<PartialAction> enumerate_partial_actions(const Semigroupoid& s, int m,
                                                            const EnumerationBudget& budget = {}) {
  std::vector<std::string> carrier = detail::default_names(m, "x");
  std::vector<PartialAction> out;
  detail::walk_action_families(s, m, budget, [&](const std::vector<std::vector<int>>& map) {
    auto candidate = PartialAction::validate_indexed(s, carrier, map);
    detail::require(candidate.ok(), "fast law check accepted an invalid family");
    out.push_back(std::move(candidate).value());
  });
  return out;
}

inline long long count_partial_actions(const Semigroupoid& s, int m,
                                       const EnumerationBudget& budget = {}) {
  long long count = 0;
  detail::walk_action_families(s, m, budget,
                               [&](const std::vector<std::vector<int>>&) { ++count; });
  return count;
}

// Exact number of morphisms from the globalized action to phi's target
// that extend phi along the embedding. Must be 1 on every valid input.
inline long long count_commuting_morphisms(const Globalization& g, const ActionMorphism& phi,
                                           const EnumerationBudget& budget = {}) {
  if (phi.source != g.base()) {
    throw std::invalid_argument("count_commuting_morphisms: phi does not start at the base");
  }
  if (!is_global(phi.target)) {
    throw std::invalid_argument("count_commuting_morphisms: target action is not global");
  }
  std::optional<long long> count =
      detail::count_commuting(g, phi.target, phi.func, budget.max_function_space);
  if (!count.has_value()) {
    throw budget_error("count_commuting_morphisms: function space exceeds the budget");
  }
  return *count;
}

// Brute search for an isomorphism between two actions of one structure.
inline std::optional<std::vector<int>> find_isomorphism(const PartialAction& a,
                                                        const PartialAction& b) {
  if (a.structure() != b.structure() || a.carrier_size() != b.carrier_size()) {
    return std::nullopt;
  }
  const int m = static_cast<int>(a.carrier_size());
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (classify_morphism(a, b, perm).level == MorphismLevel::isomorphism) {
      return perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (m == 0) {
    return std::vector<int>{};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Deterministic samplers for property fuzzing. Each recipe produces a valid
// structure by construction; validity is asserted anyway.

namespace detail {

inline Semigroupoid sample_null_product(std::mt19937& rng, int max_order) {
  // two disjoint banks composing into an absorbing element
  std::uniform_int_distribution<int> half(1, std::max(1, (max_order - 1) / 2));
  int ka = half(rng);
  int kb = std::max(1, max_order - 1 - ka - std::uniform_int_distribution<int>(0, 1)(rng));
  std::vector<std::string> names;
  for (int i = 0; i < ka; ++i) {
    names.push_back("l" + std::to_string(i));
  }
  for (int i = 0; i < kb; ++i) {
    names.push_back("r" + std::to_string(i));
  }
  names.push_back("z");
  const int n = ka + kb + 1;
  std::vector<int> table(static_cast<std::size_t>(n) * n, -1);
  for (int i = 0; i < ka; ++i) {
    for (int j = 0; j < kb; ++j) {
      if (std::uniform_int_distribution<int>(0, 1)(rng)) {
        table[static_cast<std::size_t>(i) * n + (ka + j)] = n - 1;
      }
    }
  }
  return Semigroupoid::validate_indexed(std::move(names), std::move(table)).value();
}

inline std::optional<Semigroupoid> sample_markov(std::mt19937& rng, int max_order) {
  std::uniform_int_distribution<int> letters(2, 3);
  int k = letters(rng);
  std::vector<std::string> alphabet;
  for (int i = 0; i < k; ++i) {
    alphabet.push_back(std::string(1, static_cast<char>('p' + i)));
  }
  // edges only from lower to higher index, so the graph is acyclic
  std::vector<std::vector<int>> matrix(k, std::vector<int>(k, 0));
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      matrix[i][j] = std::uniform_int_distribution<int>(0, 1)(rng);
    }
  }
  auto out = markov_from_matrix(alphabet, matrix);
  if (!out.ok() || static_cast<int>(out.value().size()) > max_order) {
    return std::nullopt;
  }
  return std::move(out).value();
}

inline std::optional<Semigroupoid> sample_transformation_semigroup(std::mt19937& rng,
                                                                   int max_order) {
  std::uniform_int_distribution<int> pts(2, 3);
  const int p = pts(rng);
  std::uniform_int_distribution<int> gens(1, 2);
  const int g = gens(rng);
  std::vector<std::vector<int>> elems;
  for (int i = 0; i < g; ++i) {
    std::vector<int> f(p);
    for (int& v : f) {
      v = std::uniform_int_distribution<int>(0, p - 1)(rng);
    }
    if (std::find(elems.begin(), elems.end(), f) == elems.end()) {
      elems.push_back(std::move(f));
    }
  }
  // close under composition
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < elems.size(); ++j) {
      std::vector<int> comp(p);
      for (int x = 0; x < p; ++x) {
        comp[x] = elems[i][elems[j][x]];
      }
      if (std::find(elems.begin(), elems.end(), comp) == elems.end()) {
        elems.push_back(std::move(comp));
        if (static_cast<int>(elems.size()) > max_order) {
          return std::nullopt;
        }
      }
    }
  }
  const int n = static_cast<int>(elems.size());
  std::vector<std::string> names;
  for (const auto& f : elems) {
    std::string name = "m";
    for (int v : f) {
      name += static_cast<char>('0' + v);
    }
    names.push_back(name);
  }
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::vector<int> comp(p);
      for (int x = 0; x < p; ++x) {
        comp[x] = elems[i][elems[j][x]];
      }
      table[static_cast<std::size_t>(i) * n + j] =
          static_cast<int>(std::find(elems.begin(), elems.end(), comp) - elems.begin());
    }
  }
  return Semigroupoid::validate_indexed(std::move(names), std::move(table)).value();
}

inline CategoryData arrow_category() {
  CategoryData cat;
  cat.objects = {"p", "q"};
  cat.morphisms = {"p", "q", "g"};
  cat.dom = {{"p", "p"}, {"q", "q"}, {"g", "p"}};
  cat.ran = {{"p", "p"}, {"q", "q"}, {"g", "q"}};
  cat.compose = {{{"p", "p"}, "p"}, {{"q", "q"}, "q"}, {{"q", "g"}, "g"}, {{"g", "p"}, "g"}};
  return cat;
}

inline CategoryData parallel_pair_category() {
  CategoryData cat;
  cat.objects = {"p", "q"};
  cat.morphisms = {"p", "q", "g", "h"};
  cat.dom = {{"p", "p"}, {"q", "q"}, {"g", "p"}, {"h", "p"}};
  cat.ran = {{"p", "p"}, {"q", "q"}, {"g", "q"}, {"h", "q"}};
  cat.compose = {{{"p", "p"}, "p"}, {{"q", "q"}, "q"}, {{"q", "g"}, "g"},
                 {{"g", "p"}, "g"},  {{"q", "h"}, "h"}, {{"h", "p"}, "h"}};
  return cat;
}

inline CategoryData discrete_category(int k) {
  CategoryData cat;
  for (int i = 0; i < k; ++i) {
    std::string o = "o" + std::to_string(i);
    cat.objects.push_back(o);
    cat.morphisms.push_back(o);
    cat.dom[o] = o;
    cat.ran[o] = o;
    cat.compose[{o, o}] = o;
  }
  return cat;
}

}  // namespace detail

// A random valid structure with at most max_order elements.
inline Semigroupoid sample_semigroupoid(std::mt19937& rng, int max_order = 4) {
  for (int attempt = 0; attempt < 32; ++attempt) {
    switch (std::uniform_int_distribution<int>(0, 4)(rng)) {
      case 0: {
        Semigroupoid s = detail::sample_null_product(rng, max_order);
        if (static_cast<int>(s.size()) <= max_order) {
          return s;
        }
        break;
      }
      case 1: {
        auto s = detail::sample_markov(rng, max_order);
        if (s.has_value()) {
          return *s;
        }
        break;
      }
      case 2: {
        auto s = detail::sample_transformation_semigroup(rng, max_order);
        if (s.has_value()) {
          return *s;
        }
        break;
      }
      case 3: {
        std::uniform_int_distribution<int> kind(0, 2);
        CategoryData cat;
        switch (kind(rng)) {
          case 0: cat = detail::arrow_category(); break;
          case 1: cat = detail::parallel_pair_category(); break;
          default:
            cat = detail::discrete_category(
                std::uniform_int_distribution<int>(1, std::max(1, max_order))(rng));
            break;
        }
        auto s = from_category(cat);
        if (s.ok() && static_cast<int>(s.value().size()) <= max_order) {
          return std::move(s).value();
        }
        break;
      }
      default: {
        static const std::vector<Semigroupoid> small = enumerate_semigroupoids(2);
        return small[std::uniform_int_distribution<std::size_t>(0, small.size() - 1)(rng)];
      }
    }
  }
  return detail::sample_null_product(rng, max_order);
}

// A random valid partial action of s with at most max_carrier points.
inline PartialAction sample_partial_action(std::mt19937& rng, const Semigroupoid& s,
                                           int max_carrier = 4) {
  const int n = static_cast<int>(s.size());
  auto random_subset = [&](int m, int cap) {
    sets::Set subset;
    for (int x = 0; x < m; ++x) {
      if (std::uniform_int_distribution<int>(0, 1)(rng)) {
        subset.push_back(x);
      }
    }
    while (static_cast<int>(subset.size()) > cap) {
      subset.erase(subset.begin() +
                   std::uniform_int_distribution<std::size_t>(0, subset.size() - 1)(rng));
    }
    return subset;
  };

  switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
    case 0: {
      int m = std::uniform_int_distribution<int>(0, max_carrier)(rng);
      std::vector<std::vector<int>> map(n, std::vector<int>(m, -1));
      return PartialAction::validate_indexed(s, detail::default_names(m, "x"), std::move(map))
          .value();
    }
    case 1: {
      if (n <= max_carrier) {
        return restrict_to(left_regular(s), random_subset(n, max_carrier));
      }
      break;
    }
    case 2: {
      // rejection sampling over sparse random maps
      int m = std::uniform_int_distribution<int>(1, max_carrier)(rng);
      for (int attempt = 0; attempt < 60; ++attempt) {
        std::vector<std::vector<int>> map(n, std::vector<int>(m, -1));
        for (int e = 0; e < n; ++e) {
          for (int x = 0; x < m; ++x) {
            if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) {
              map[e][x] = std::uniform_int_distribution<int>(0, m - 1)(rng);
            }
          }
        }
        auto candidate =
            PartialAction::validate_indexed(s, detail::default_names(m, "x"), std::move(map));
        if (candidate.ok()) {
          return std::move(candidate).value();
        }
      }
      break;
    }
    default: {
      PartialAction seed = sample_partial_action(rng, s, std::min(2, max_carrier));
      Globalization g = globalize(seed);
      if (static_cast<int>(g.class_count()) > 0) {
        return restrict_to(g.global_action(), random_subset(g.class_count(), max_carrier));
      }
      return g.global_action();
    }
  }
  int m = std::uniform_int_distribution<int>(0, max_carrier)(rng);
  std::vector<std::vector<int>> map(n, std::vector<int>(m, -1));
  return PartialAction::validate_indexed(s, detail::default_names(m, "x"), std::move(map)).value();
}

// A random category with at most max_morphisms morphisms.
inline Semigroupoid sample_category(std::mt19937& rng, int max_morphisms = 4) {
  for (int attempt = 0; attempt < 16; ++attempt) {
    switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
      case 0: {
        auto s = from_category(detail::arrow_category());
        if (static_cast<int>(s.value().size()) <= max_morphisms) {
          return std::move(s).value();
        }
        break;
      }
      case 1: {
        auto s = from_category(detail::parallel_pair_category());
        if (static_cast<int>(s.value().size()) <= max_morphisms) {
          return std::move(s).value();
        }
        break;
      }
      case 2: {
        int k = std::uniform_int_distribution<int>(1, max_morphisms)(rng);
        return from_category(detail::discrete_category(k)).value();
      }
      default: {
        // one-object category: a transformation monoid including the identity
        auto s = detail::sample_transformation_semigroup(rng, max_morphisms);
        if (s.has_value() && !s->identity_elements().empty() &&
            category_shape(*s).has_value()) {
          return *s;
        }
        break;
      }
    }
  }
  return from_category(detail::discrete_category(1)).value();
}

// A random categorical partial action: a global categorical action is
// generated first and then cut down to a random subset, which preserves
// all the category-action axioms.
inline PartialAction sample_categorical_action(std::mt19937& rng, const Semigroupoid& category,
                                               int max_carrier = 4) {
  std::optional<CategoryShape> shape = category_shape(category);
  detail::require(shape.has_value(), "sample_categorical_action needs a category");
  const int n = static_cast<int>(category.size());

  PartialAction global = left_regular(category);
  if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) {
    // block recipe: partition a carrier among the objects, identities fix
    // their block, every other morphism maps block to block
    int m = std::uniform_int_distribution<int>(0, max_carrier)(rng);
    std::vector<int> block(m);
    const auto& ids = shape->identities;
    for (int x = 0; x < m; ++x) {
      block[x] = ids[std::uniform_int_distribution<std::size_t>(0, ids.size() - 1)(rng)];
    }
    std::vector<std::vector<int>> map(n, std::vector<int>(m, -1));
    bool feasible = true;
    for (int g = 0; g < n && feasible; ++g) {
      sets::Set src_block, tgt_block;
      for (int x = 0; x < m; ++x) {
        if (block[x] == shape->source[g]) {
          src_block.push_back(x);
        }
        if (block[x] == shape->target[g]) {
          tgt_block.push_back(x);
        }
      }
      if (sets::contains(shape->identities, g)) {
        for (int x : src_block) {
          map[g][x] = x;
        }
        continue;
      }
      if (!src_block.empty() && tgt_block.empty()) {
        feasible = false;
        break;
      }
      for (int x : src_block) {
        map[g][x] =
            tgt_block[std::uniform_int_distribution<std::size_t>(0, tgt_block.size() - 1)(rng)];
      }
    }
    if (feasible) {
      auto candidate =
          PartialAction::validate_indexed(category, detail::default_names(m, "x"), std::move(map));
      if (candidate.ok() && check_category_action(candidate.value(), true).ok) {
        global = std::move(candidate).value();
      }
    }
  }

  sets::Set subset;
  for (int x = 0; x < static_cast<int>(global.carrier_size()); ++x) {
    if (std::uniform_int_distribution<int>(0, 2)(rng) != 0) {
      subset.push_back(x);
    }
  }
  while (static_cast<int>(subset.size()) > max_carrier) {
    subset.erase(subset.begin() +
                 std::uniform_int_distribution<std::size_t>(0, subset.size() - 1)(rng));
  }
  PartialAction cut = restrict_to(global, subset);
  detail::require(check_category_action(cut).ok,
                  "restriction of a global categorical action stays categorical");
  return cut;
}

}  // namespace sgpd

#endif  // SGPD_ORACLE_HPP_
