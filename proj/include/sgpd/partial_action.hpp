#ifndef SGPD_PARTIAL_ACTION_HPP_
#define SGPD_PARTIAL_ACTION_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sgpd/result.hpp"
#include "sgpd/semigroupoid.hpp"
#include "sgpd/sets.hpp"

namespace sgpd {

// One partially defined self-map of the carrier, keyed by element name.
// The entry list fixes both the domain and the values.
struct PointMap {
  std::string element;
  std::vector<std::pair<std::string, std::string>> entries;
};

// A partial action: per element, a subset of the carrier and a map defined
// exactly there. The two compatibility laws relating composition in the
// structure to composition of the maps are checked at construction:
//
//   (P1)  preimage under the inner map of (outer domain ∩ inner image)
//         equals (inner domain ∩ product domain), and
//   (P2)  on that set, applying inner then outer agrees with the product.
//
// Images are always recomputed from the maps, never stored.
class PartialAction {
 public:
  static Validated<PartialAction> validate(Semigroupoid sgpd, std::vector<std::string> carrier,
                                           const std::vector<PointMap>& maps);

  // map[s][x] = y, or -1 when x is outside the domain of s.
  static Validated<PartialAction> validate_indexed(Semigroupoid sgpd,
                                                   std::vector<std::string> carrier,
                                                   std::vector<std::vector<int>> map);

  PartialAction() = default;

  const Semigroupoid& structure() const { return sgpd_; }

  std::size_t carrier_size() const { return points_.size(); }

  const std::string& point_name(int x) const { return points_[x]; }

  const std::vector<std::string>& carrier() const { return points_; }

  int point_index(std::string_view name) const {
    for (std::size_t i = 0; i < points_.size(); ++i) {
      if (points_[i] == name) {
        return static_cast<int>(i);
      }
    }
    return -1;
  }

  const sets::Set& domain(int s) const { return dom_[s]; }

  bool defined(int s, int x) const { return map_[s][x] >= 0; }

  // Value of the map for element s at point x; -1 when undefined.
  int apply(int s, int x) const { return map_[s][x]; }

  // The image of the domain of s, computed on demand.
  sets::Set image(int s) const {
    sets::Set out;
    for (int x : dom_[s]) {
      out.push_back(map_[s][x]);
    }
    return sets::make(std::move(out));
  }

  bool operator==(const PartialAction&) const = default;

 private:
  PartialAction(Semigroupoid sgpd, std::vector<std::string> points,
                std::vector<std::vector<int>> map)
      : sgpd_(std::move(sgpd)), points_(std::move(points)), map_(std::move(map)) {
    dom_.resize(map_.size());
    for (std::size_t s = 0; s < map_.size(); ++s) {
      for (std::size_t x = 0; x < points_.size(); ++x) {
        if (map_[s][x] >= 0) {
          dom_[s].push_back(static_cast<int>(x));
        }
      }
    }
  }

  Semigroupoid sgpd_;
  std::vector<std::string> points_;
  std::vector<std::vector<int>> map_;
  std::vector<sets::Set> dom_;
};

inline Validated<PartialAction> PartialAction::validate_indexed(Semigroupoid sgpd,
                                                                std::vector<std::string> carrier,
                                                                std::vector<std::vector<int>> map) {
  const int n = static_cast<int>(sgpd.size());
  const int m = static_cast<int>(carrier.size());
  detail::require(static_cast<int>(map.size()) == n, "map family has wrong shape");
  for (const auto& row : map) {
    detail::require(static_cast<int>(row.size()) == m, "map row has wrong shape");
    for (int v : row) {
      detail::require(v >= -1 && v < m, "map value out of range");
    }
  }
  PartialAction act(std::move(sgpd), std::move(carrier), std::move(map));
  const Semigroupoid& s = act.structure();

  auto pair_name = [&](int a, int b) {
    return "(" + s.name(a) + "," + s.name(b) + ")";
  };
  for (const auto& [a, b] : s.composable_pairs()) {
    const int ab = s.product(a, b);
    // (P1)
    // the image-side constraint is automatic: y below is always in the
    // image of the inner map
    sets::Set lhs;
    for (int x : act.domain(b)) {
      if (act.defined(a, act.apply(b, x))) {
        lhs.push_back(x);
      }
    }
    lhs = sets::make(std::move(lhs));
    sets::Set rhs = sets::intersect(act.domain(b), act.domain(ab));
    if (lhs != rhs) {
      sets::Set diff = sets::unite(sets::difference(lhs, rhs), sets::difference(rhs, lhs));
      return Violation{"P1", "pair " + pair_name(a, b) + " at point " +
                                 act.point_name(diff.front())};
    }
    // (P2); the inner image lands in the outer domain by (P1)
    for (int x : rhs) {
      int y = act.apply(b, x);
      detail::require(act.defined(a, y), "P1 guarantees the outer map applies");
      if (act.apply(a, y) != act.apply(ab, x)) {
        return Violation{"P2", "pair " + pair_name(a, b) + " at point " + act.point_name(x) +
                                   ": composed maps give " + act.point_name(act.apply(a, y)) +
                                   " but the product map gives " +
                                   act.point_name(act.apply(ab, x))};
      }
    }
  }
  return act;
}

inline Validated<PartialAction> PartialAction::validate(Semigroupoid sgpd,
                                                        std::vector<std::string> carrier,
                                                        const std::vector<PointMap>& maps) {
  const int m = static_cast<int>(carrier.size());
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (carrier[i] == carrier[j]) {
        return Violation{"carrier", "duplicate point " + carrier[i]};
      }
    }
  }
  auto pidx = [&](const std::string& p) -> int {
    for (int i = 0; i < m; ++i) {
      if (carrier[i] == p) {
        return i;
      }
    }
    return -1;
  };
  std::vector<std::vector<int>> map(sgpd.size(), std::vector<int>(m, -1));
  for (const auto& pm : maps) {
    int s = sgpd.index(pm.element);
    if (s < 0) {
      return Violation{"elements", "unknown element " + pm.element};
    }
    for (const auto& [from, to] : pm.entries) {
      int x = pidx(from);
      if (x < 0) {
        return Violation{"carrier", "unknown point " + from};
      }
      int y = pidx(to);
      if (y < 0) {
        return Violation{"carrier", "unknown point " + to};
      }
      if (map[s][x] >= 0 && map[s][x] != y) {
        return Violation{"carrier", "conflicting values for " + pm.element + " at " + from};
      }
      map[s][x] = y;
    }
  }
  return validate_indexed(std::move(sgpd), std::move(carrier), std::move(map));
}

// One globality failure: which law broke and at which pair of elements.
struct GlobalityWitness {
  std::string rule;  // "G1" or "G2"
  int s;
  int t;
  std::string detail;
};

struct GlobalityReport {
  bool global = true;
  std::vector<GlobalityWitness> witnesses;  // deterministic order, empty iff global
};

// Checks the two globality laws: equal non-empty right sets force equal
// domains, and domains are stable under composition. A second, independent
// characterization (domain stability plus image containment plus exact
// functional equality on the inner domain) is evaluated as well; the two
// routes must agree on every valid action.
inline GlobalityReport globality(const PartialAction& act) {
  const Semigroupoid& s = act.structure();
  const int n = static_cast<int>(s.size());
  GlobalityReport report;

  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      sets::Set ra = s.right_set(a);
      if (!ra.empty() && ra == s.right_set(b) && act.domain(a) != act.domain(b)) {
        report.witnesses.push_back(
            {"G1", a, b, "equal right sets but different domains"});
      }
    }
  }
  for (const auto& [a, b] : s.composable_pairs()) {
    int ab = s.product(a, b);
    if (act.domain(b) != act.domain(ab)) {
      report.witnesses.push_back(
          {"G2", a, b,
           "domain of " + s.name(b) + " differs from domain of " + s.name(ab)});
    }
  }
  report.global = report.witnesses.empty();

  // independent route
  bool alt = true;
  for (int a = 0; a < n && alt; ++a) {
    for (int b = a + 1; b < n && alt; ++b) {
      sets::Set ra = s.right_set(a);
      if (!ra.empty() && ra == s.right_set(b) && act.domain(a) != act.domain(b)) {
        alt = false;
      }
    }
  }
  for (const auto& [a, b] : s.composable_pairs()) {
    if (!alt) {
      break;
    }
    int ab = s.product(a, b);
    if (act.domain(b) != act.domain(ab) || !sets::is_subset(act.image(b), act.domain(a))) {
      alt = false;
      break;
    }
    for (int x : act.domain(b)) {
      if (act.apply(a, act.apply(b, x)) != act.apply(ab, x)) {
        alt = false;
        break;
      }
    }
  }
  detail::require(report.global == alt, "globality routes disagree");
  return report;
}

inline bool is_global(const PartialAction& act) { return globality(act).global; }

// The action of a structure on itself: the domain of s is everything right
// composable with s, and s acts by left multiplication.
inline PartialAction left_regular(const Semigroupoid& s) {
  const int n = static_cast<int>(s.size());
  std::vector<std::vector<int>> map(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a) {
    for (int x = 0; x < n; ++x) {
      if (s.composable(a, x)) {
        map[a][x] = s.product(a, x);
      }
    }
  }
  auto out = PartialAction::validate_indexed(s, s.names(), std::move(map));
  detail::require(out.ok(), "left regular action is a partial action");
  detail::require(is_global(out.value()), "left regular action is global");
  return std::move(out).value();
}

// Cuts a global action down to a subset: a point stays in the domain of s
// only if its value stays inside the subset. The result is always a valid
// partial action; that is asserted here.
inline PartialAction restrict_to(const PartialAction& global, const sets::Set& subset) {
  if (!is_global(global)) {
    throw std::invalid_argument("restrict_to requires a global action");
  }
  const int m = static_cast<int>(global.carrier_size());
  for (int x : subset) {
    if (x < 0 || x >= m) {
      throw std::invalid_argument("restrict_to: subset point out of range");
    }
  }
  sets::Set sub = sets::make(subset);
  std::vector<std::string> carrier;
  std::vector<int> reindex(m, -1);
  for (int x : sub) {
    reindex[x] = static_cast<int>(carrier.size());
    carrier.push_back(global.point_name(x));
  }
  const int n = static_cast<int>(global.structure().size());
  std::vector<std::vector<int>> map(n, std::vector<int>(carrier.size(), -1));
  for (int s = 0; s < n; ++s) {
    for (int x : sub) {
      if (global.defined(s, x)) {
        int y = global.apply(s, x);
        if (sets::contains(sub, y)) {
          map[s][reindex[x]] = reindex[y];
        }
      }
    }
  }
  auto out = PartialAction::validate_indexed(global.structure(), std::move(carrier), std::move(map));
  detail::require(out.ok(), "restriction of a global action is a partial action");
  return std::move(out).value();
}

// The carrier split into the points some map touches and the rest.
struct DegeneracySplit {
  sets::Set active;  // union of all domains and images
  sets::Set inert;   // complement
};

inline DegeneracySplit degeneracy_split(const PartialAction& act) {
  DegeneracySplit split;
  for (int s = 0; s < static_cast<int>(act.structure().size()); ++s) {
    split.active = sets::unite(split.active, act.domain(s));
    split.active = sets::unite(split.active, act.image(s));
  }
  sets::Set all;
  for (int x = 0; x < static_cast<int>(act.carrier_size()); ++x) {
    all.push_back(x);
  }
  split.inert = sets::difference(all, split.active);
  return split;
}

inline bool is_nondegenerate(const PartialAction& act) {
  return degeneracy_split(act).inert.empty();
}

}  // namespace sgpd

#endif  // SGPD_PARTIAL_ACTION_HPP_
