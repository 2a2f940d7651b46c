#ifndef SGPD_SEMIGROUPOID_HPP_
#define SGPD_SEMIGROUPOID_HPP_

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sgpd/result.hpp"
#include "sgpd/sets.hpp"

namespace sgpd {

// A finite set with a partially defined associative product. The
// composability relation and the product table are stored together as a
// dense n*n table where -1 marks a non-composable pair. Instances are
// immutable once validated.
class Semigroupoid {
 public:
  // Full form: the composability relation and the product table are given
  // separately; the table must be defined on exactly the composable pairs.
  static Validated<Semigroupoid> validate(
      std::vector<std::string> elements,
      const std::vector<std::pair<std::string, std::string>>& composable,
      const std::vector<std::array<std::string, 3>>& products);

  // Short form: the composable pairs are the keys of the product table.
  static Validated<Semigroupoid> validate(
      std::vector<std::string> elements,
      const std::vector<std::array<std::string, 3>>& products);

  // Trusted index form used by generated structures; still runs the full
  // associativity check.
  static Validated<Semigroupoid> validate_indexed(std::vector<std::string> elements,
                                                  std::vector<int> table);

  Semigroupoid() = default;

  std::size_t size() const { return names_.size(); }

  const std::string& name(int i) const { return names_[i]; }

  const std::vector<std::string>& names() const { return names_; }

  int index(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == name) {
        return static_cast<int>(i);
      }
    }
    return -1;
  }

  bool composable(int s, int t) const { return cell(s, t) >= 0; }

  // Product of a composable pair, -1 otherwise.
  int product(int s, int t) const { return cell(s, t); }

  // All composable pairs in row-major order.
  std::vector<std::pair<int, int>> composable_pairs() const {
    std::vector<std::pair<int, int>> out;
    const int n = static_cast<int>(size());
    for (int s = 0; s < n; ++s) {
      for (int t = 0; t < n; ++t) {
        if (composable(s, t)) {
          out.emplace_back(s, t);
        }
      }
    }
    return out;
  }

  // The set of elements right composable with s.
  sets::Set right_set(int s) const {
    sets::Set out;
    for (int t = 0; t < static_cast<int>(size()); ++t) {
      if (composable(s, t)) {
        out.push_back(t);
      }
    }
    return out;
  }

  // The set of elements left composable with s.
  sets::Set left_set(int s) const {
    sets::Set out;
    for (int t = 0; t < static_cast<int>(size()); ++t) {
      if (composable(t, s)) {
        out.push_back(t);
      }
    }
    return out;
  }

  // True when right-composability sets are pairwise disjoint or equal. The
  // same check on left sets must agree; that is asserted here.
  bool is_categorical() const {
    bool right = disjoint_or_equal(/*use_right=*/true);
    bool left = disjoint_or_equal(/*use_right=*/false);
    detail::require(right == left, "categoricity differs between right and left sets");
    return right;
  }

  // Elements e with (e,e) composable that act neutrally on both sides
  // wherever composition with them is defined.
  std::vector<int> identity_elements() const {
    std::vector<int> out;
    const int n = static_cast<int>(size());
    for (int e = 0; e < n; ++e) {
      if (!composable(e, e)) {
        continue;
      }
      bool neutral = true;
      for (int s = 0; s < n && neutral; ++s) {
        if (composable(s, e) && product(s, e) != s) {
          neutral = false;
        }
        if (composable(e, s) && product(e, s) != s) {
          neutral = false;
        }
      }
      if (neutral) {
        out.push_back(e);
      }
    }
    // an element has at most one identity it can be right-composed with
    for (int s = 0; s < n; ++s) {
      int found = 0;
      for (int e : out) {
        if (composable(s, e)) {
          ++found;
        }
      }
      detail::require(found <= 1, "element with two right identities");
    }
    return out;
  }

  // Totally composable and non-empty.
  bool is_semigroup() const {
    if (size() == 0) {
      return false;
    }
    for (int s = 0; s < static_cast<int>(size()); ++s) {
      for (int t = 0; t < static_cast<int>(size()); ++t) {
        if (!composable(s, t)) {
          return false;
        }
      }
    }
    return true;
  }

  bool operator==(const Semigroupoid&) const = default;

 private:
  int cell(int s, int t) const { return table_[static_cast<std::size_t>(s) * size() + t]; }

  bool disjoint_or_equal(bool use_right) const {
    const int n = static_cast<int>(size());
    std::vector<sets::Set> fam(n);
    for (int s = 0; s < n; ++s) {
      fam[s] = use_right ? right_set(s) : left_set(s);
    }
    for (int s = 0; s < n; ++s) {
      for (int t = s + 1; t < n; ++t) {
        if (!sets::intersect(fam[s], fam[t]).empty() && fam[s] != fam[t]) {
          return false;
        }
      }
    }
    return true;
  }

  Semigroupoid(std::vector<std::string> names, std::vector<int> table)
      : names_(std::move(names)), table_(std::move(table)) {}

  std::vector<std::string> names_;
  std::vector<int> table_;  // n*n product indices, -1 where not composable
};

inline Validated<Semigroupoid> Semigroupoid::validate_indexed(std::vector<std::string> elements,
                                                              std::vector<int> table) {
  const int n = static_cast<int>(elements.size());
  detail::require(table.size() == static_cast<std::size_t>(n) * n, "product table has wrong shape");
  for (int v : table) {
    detail::require(v >= -1 && v < n, "product table entry out of range");
  }
  Semigroupoid s(std::move(elements), std::move(table));

  auto comp = [&](int a, int b) { return s.composable(a, b); };
  auto prod = [&](int a, int b) { return s.product(a, b); };
  // every triple (s,t,r) is checked against the three trigger conditions
  for (int a = 0; a < n; ++a) {
    for (int t = 0; t < n; ++t) {
      for (int r = 0; r < n; ++r) {
        int cond = 0;
        if (comp(a, t) && comp(t, r)) {
          cond = 1;
        } else if (comp(a, t) && comp(prod(a, t), r)) {
          cond = 2;
        } else if (comp(t, r) && comp(a, prod(t, r))) {
          cond = 3;
        }
        if (cond == 0) {
          continue;
        }
        const std::string names = "(" + s.name(a) + "," + s.name(t) + "," + s.name(r) + ")";
        const std::string rule =
            cond == 1 ? "associativity(i)" : cond == 2 ? "associativity(ii)" : "associativity(iii)";
        if (!comp(a, t)) {
          return Violation{rule, "triple " + names + ": pair (" + s.name(a) + "," + s.name(t) +
                                     ") is not composable"};
        }
        if (!comp(t, r)) {
          return Violation{rule, "triple " + names + ": pair (" + s.name(t) + "," + s.name(r) +
                                     ") is not composable"};
        }
        if (!comp(prod(a, t), r)) {
          return Violation{rule, "triple " + names + ": pair (" + s.name(prod(a, t)) + "," +
                                     s.name(r) + ") is not composable"};
        }
        if (!comp(a, prod(t, r))) {
          return Violation{rule, "triple " + names + ": pair (" + s.name(a) + "," +
                                     s.name(prod(t, r)) + ") is not composable"};
        }
        if (prod(prod(a, t), r) != prod(a, prod(t, r))) {
          return Violation{rule, "triple " + names + ": (" + s.name(a) + s.name(t) + ")" +
                                     s.name(r) + " = " + s.name(prod(prod(a, t), r)) + " but " +
                                     s.name(a) + "(" + s.name(t) + s.name(r) + ") = " +
                                     s.name(prod(a, prod(t, r)))};
        }
      }
    }
  }

  // consequence of associativity, asserted independently as a sanity check
  for (int a = 0; a < n; ++a) {
    for (int t = 0; t < n; ++t) {
      if (!s.composable(a, t)) {
        continue;
      }
      int at = s.product(a, t);
      detail::require(s.right_set(t) == s.right_set(at), "right set changed under composition");
      detail::require(s.left_set(a) == s.left_set(at), "left set changed under composition");
    }
  }
  return s;
}

inline Validated<Semigroupoid> Semigroupoid::validate(
    std::vector<std::string> elements,
    const std::vector<std::pair<std::string, std::string>>& composable,
    const std::vector<std::array<std::string, 3>>& products) {
  const int n = static_cast<int>(elements.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (elements[i] == elements[j]) {
        return Violation{"elements", "duplicate element " + elements[i]};
      }
    }
  }
  auto idx = [&](const std::string& name) -> int {
    for (int i = 0; i < n; ++i) {
      if (elements[i] == name) {
        return i;
      }
    }
    return -1;
  };

  std::vector<int> relation(static_cast<std::size_t>(n) * n, 0);
  for (const auto& [a, b] : composable) {
    int i = idx(a), j = idx(b);
    if (i < 0) {
      return Violation{"elements", "unknown element " + a};
    }
    if (j < 0) {
      return Violation{"elements", "unknown element " + b};
    }
    relation[static_cast<std::size_t>(i) * n + j] = 1;
  }

  std::vector<int> table(static_cast<std::size_t>(n) * n, -1);
  for (const auto& entry : products) {
    int i = idx(entry[0]), j = idx(entry[1]), k = idx(entry[2]);
    if (i < 0) {
      return Violation{"elements", "unknown element " + entry[0]};
    }
    if (j < 0) {
      return Violation{"elements", "unknown element " + entry[1]};
    }
    if (k < 0) {
      return Violation{"elements", "unknown element " + entry[2]};
    }
    if (!relation[static_cast<std::size_t>(i) * n + j]) {
      return Violation{"product-table",
                       "product defined on non-composable pair (" + entry[0] + "," + entry[1] + ")"};
    }
    if (table[static_cast<std::size_t>(i) * n + j] >= 0 &&
        table[static_cast<std::size_t>(i) * n + j] != k) {
      return Violation{"product-table",
                       "conflicting products for pair (" + entry[0] + "," + entry[1] + ")"};
    }
    table[static_cast<std::size_t>(i) * n + j] = k;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (relation[static_cast<std::size_t>(i) * n + j] && table[static_cast<std::size_t>(i) * n + j] < 0) {
        return Violation{"product-table",
                         "no product for composable pair (" + elements[i] + "," + elements[j] + ")"};
      }
    }
  }
  return validate_indexed(std::move(elements), std::move(table));
}

inline Validated<Semigroupoid> Semigroupoid::validate(
    std::vector<std::string> elements, const std::vector<std::array<std::string, 3>>& products) {
  std::vector<std::pair<std::string, std::string>> composable;
  composable.reserve(products.size());
  for (const auto& p : products) {
    composable.emplace_back(p[0], p[1]);
  }
  return validate(std::move(elements), composable, products);
}

}  // namespace sgpd

#endif  // SGPD_SEMIGROUPOID_HPP_
