#ifndef SGPD_GLOBALIZATION_HPP_
#define SGPD_GLOBALIZATION_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgpd/budget.hpp"
#include "sgpd/morphism.hpp"
#include "sgpd/partial_action.hpp"
#include "sgpd/partition.hpp"
#include "sgpd/result.hpp"
#include "sgpd/sets.hpp"

namespace sgpd {

// Tag for carrier points embedded into the enlarged universe; actual
// elements use their own indices.
inline constexpr int kOriginTag = -1;

struct TaggedPoint {
  int tag;    // kOriginTag or an element index
  int point;  // carrier index

  auto operator<=>(const TaggedPoint&) const = default;
};

// Groups elements that behave like arrows out of one source: two elements
// are merged when they have the same non-empty right set, and a product is
// merged with its right factor. Every class therefore has one right set,
// which is asserted.
inline Partition source_classes(const Semigroupoid& s) {
  const int n = static_cast<int>(s.size());
  DisjointSets ds(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      sets::Set ra = s.right_set(a);
      if (!ra.empty() && ra == s.right_set(b)) {
        ds.unite(a, b);
      }
    }
  }
  for (const auto& [a, b] : s.composable_pairs()) {
    ds.unite(s.product(a, b), b);
  }
  Partition part(ds);
  for (const auto& cls : part.classes()) {
    for (int x : cls) {
      detail::require(s.right_set(x) == s.right_set(cls.front()),
                      "source class with mixed right sets");
    }
  }
  return part;
}

// All carrier points that s can plausibly act on once the action is made
// global: domains across the source class of s, plus images of everything
// right composable with s. Independent of the class representative, which
// is re-checked for each member.
inline sets::Set extended_domain(const PartialAction& act, const Partition& classes, int s) {
  const Semigroupoid& sg = act.structure();
  auto compute = [&](int rep) {
    sets::Set out;
    for (int t : classes.members(classes.class_of(rep))) {
      out = sets::unite(out, act.domain(t));
    }
    for (int t : sg.right_set(rep)) {
      out = sets::unite(out, act.image(t));
    }
    return out;
  };
  sets::Set result = compute(s);
  for (int t : classes.members(classes.class_of(s))) {
    detail::require(compute(t) == result, "extended domain depends on the representative");
  }
  return result;
}

// The tagged universe: every carrier point under the origin tag, then each
// element paired with the points of its extended domain. Order is fixed:
// origin block first, then element-major.
inline std::vector<TaggedPoint> action_universe(const PartialAction& act,
                                                const Partition& classes) {
  std::vector<TaggedPoint> universe;
  const int m = static_cast<int>(act.carrier_size());
  for (int x = 0; x < m; ++x) {
    universe.push_back({kOriginTag, x});
  }
  for (int s = 0; s < static_cast<int>(act.structure().size()); ++s) {
    for (int x : extended_domain(act, classes, s)) {
      universe.push_back({s, x});
    }
  }
  return universe;
}

namespace detail {

// Dense lookup from tagged point to universe index, -1 when absent.
class UniverseIndex {
 public:
  UniverseIndex(const std::vector<TaggedPoint>& universe, int elements, int carrier)
      : carrier_(carrier), idx_(static_cast<std::size_t>(elements + 1) * carrier, -1) {
    for (std::size_t i = 0; i < universe.size(); ++i) {
      at(universe[i]) = static_cast<int>(i);
    }
  }

  int find(TaggedPoint p) const {
    if (carrier_ == 0) {
      return -1;
    }
    return idx_[static_cast<std::size_t>(p.tag + 1) * carrier_ + p.point];
  }

 private:
  int& at(TaggedPoint p) { return idx_[static_cast<std::size_t>(p.tag + 1) * carrier_ + p.point]; }

  int carrier_;
  std::vector<int> idx_;
};

}  // namespace detail

// Closes the two merge rules over the tagged universe:
//   (1) a point in the domain of s merges, tagged with s, with its value
//       under s tagged with the origin;
//   (2) for a composable pair (t,u), a point of the domain of u tagged
//       with tu merges with its value under u tagged with t.
// Two facts about the closure are asserted on every class: tagged members
// are either all inside their element's domain or all outside, with equal
// values in the first case, and each class holds at most one origin pair.
inline Partition universe_classes(const PartialAction& act,
                                  const std::vector<TaggedPoint>& universe) {
  const Semigroupoid& sg = act.structure();
  detail::UniverseIndex lookup(universe, static_cast<int>(sg.size()),
                               static_cast<int>(act.carrier_size()));
  DisjointSets ds(universe.size());

  for (int s = 0; s < static_cast<int>(sg.size()); ++s) {
    for (int x : act.domain(s)) {
      int from = lookup.find({s, x});
      int to = lookup.find({kOriginTag, act.apply(s, x)});
      detail::require(from >= 0 && to >= 0, "merge rule (1) stays inside the universe");
      ds.unite(from, to);
    }
  }
  for (const auto& [t, u] : sg.composable_pairs()) {
    for (int x : act.domain(u)) {
      int from = lookup.find({sg.product(t, u), x});
      int to = lookup.find({t, act.apply(u, x)});
      detail::require(from >= 0 && to >= 0, "merge rule (2) stays inside the universe");
      ds.unite(from, to);
    }
  }

  Partition part(ds);
  for (const auto& cls : part.classes()) {
    int origin_members = 0;
    int seen_active = -1;  // -1 unknown, else 0/1
    int value = -1;
    for (int i : cls) {
      const TaggedPoint& p = universe[i];
      if (p.tag == kOriginTag) {
        ++origin_members;
        continue;
      }
      bool active = act.defined(p.tag, p.point);
      if (seen_active == -1) {
        seen_active = active ? 1 : 0;
      }
      detail::require((seen_active == 1) == active, "class mixes active and inactive members");
      if (active) {
        if (value == -1) {
          value = act.apply(p.tag, p.point);
        }
        detail::require(value == act.apply(p.tag, p.point), "class members disagree on the value");
      }
    }
    detail::require(origin_members <= 1, "class holds two origin pairs");
  }
  return part;
}

// The computed globalization: the quotient of the tagged universe together
// with the induced global action, and the embedding of the original
// carrier as the origin-tagged classes.
class Globalization {
 public:
  const PartialAction& base() const { return base_; }

  // The quotient action; its carrier points are the classes.
  const PartialAction& global_action() const { return global_; }

  const std::vector<TaggedPoint>& universe() const { return universe_; }

  const Partition& classes() const { return classes_; }

  const Partition& element_classes() const { return element_classes_; }

  int class_count() const { return static_cast<int>(classes_.class_count()); }

  // Class of a universe member.
  int class_of(TaggedPoint p) const {
    int i = lookup_.find(p);
    detail::require(i >= 0, "tagged point outside the universe");
    return classes_.class_of(i);
  }

  bool in_universe(TaggedPoint p) const { return lookup_.find(p) >= 0; }

  std::vector<TaggedPoint> class_members(int c) const {
    std::vector<TaggedPoint> out;
    for (int i : classes_.members(c)) {
      out.push_back(universe_[i]);
    }
    return out;
  }

  int delta(int x) const { return delta_[x]; }

  const std::vector<int>& delta_map() const { return delta_; }

  const sets::Set& domain_of(int s) const { return global_.domain(s); }

  int beta(int s, int c) const { return global_.apply(s, c); }

  const std::string& class_name(int c) const { return global_.point_name(c); }

  // The embedding of the base into the quotient.
  const ActionMorphism& embedding() const { return delta_morphism_; }

  const sets::Set& extended_domain_of(int s) const { return extended_[s]; }

  friend Globalization globalize(const PartialAction& act);

 private:
  Globalization(PartialAction base, PartialAction global, std::vector<TaggedPoint> universe,
                Partition classes, Partition element_classes, std::vector<sets::Set> extended,
                std::vector<int> delta, ActionMorphism delta_morphism)
      : base_(std::move(base)),
        global_(std::move(global)),
        universe_(std::move(universe)),
        classes_(std::move(classes)),
        element_classes_(std::move(element_classes)),
        extended_(std::move(extended)),
        delta_(std::move(delta)),
        delta_morphism_(std::move(delta_morphism)),
        lookup_(universe_, static_cast<int>(base_.structure().size()),
                static_cast<int>(base_.carrier_size())) {}

  PartialAction base_;
  PartialAction global_;
  std::vector<TaggedPoint> universe_;
  Partition classes_;
  Partition element_classes_;
  std::vector<sets::Set> extended_;
  std::vector<int> delta_;
  ActionMorphism delta_morphism_;
  detail::UniverseIndex lookup_;
};

// Builds the universal globalization of a partial action. Everything the
// construction promises is asserted on the result: the quotient action is
// global, the embedding really is an embedding, and the induced maps are
// independent of all representative choices.
inline Globalization globalize(const PartialAction& act) {
  const Semigroupoid& sg = act.structure();
  const int n = static_cast<int>(sg.size());

  Partition element_classes = source_classes(sg);
  // products land in the source class of their right factor
  for (const auto& [a, b] : sg.composable_pairs()) {
    detail::require(element_classes.same(sg.product(a, b), b),
                    "product escapes the source class of its right factor");
  }

  std::vector<sets::Set> extended(n);
  for (int s = 0; s < n; ++s) {
    extended[s] = extended_domain(act, element_classes, s);
  }
  std::vector<TaggedPoint> universe = action_universe(act, element_classes);
  Partition classes = universe_classes(act, universe);
  detail::UniverseIndex lookup(universe, n, static_cast<int>(act.carrier_size()));

  const int class_count = static_cast<int>(classes.class_count());
  auto class_of = [&](TaggedPoint p) {
    int i = lookup.find(p);
    detail::require(i >= 0, "tagged point outside the universe");
    return classes.class_of(i);
  };

  // domain of s: classes holding a pair tagged with something right
  // composable with s, or an origin pair over the extended domain of s
  std::vector<std::vector<int>> map(n, std::vector<int>(class_count, -1));
  for (int s = 0; s < n; ++s) {
    for (int c = 0; c < class_count; ++c) {
      bool member_of_domain = false;
      int value = -1;
      for (int i : classes.members(c)) {
        const TaggedPoint& p = universe[i];
        int candidate = -1;
        if (p.tag == kOriginTag) {
          if (sets::contains(extended[s], p.point)) {
            candidate = class_of({s, p.point});
          }
        } else if (sg.composable(s, p.tag)) {
          candidate = class_of({sg.product(s, p.tag), p.point});
        }
        if (candidate >= 0) {
          member_of_domain = true;
          if (value == -1) {
            value = candidate;
          }
          detail::require(value == candidate,
                          "action on a class depends on the representative");
        }
      }
      if (member_of_domain) {
        map[s][c] = value;
      }
    }
  }

  std::vector<std::string> class_names(class_count);
  for (int c = 0; c < class_count; ++c) {
    const TaggedPoint& rep = universe[classes.members(c).front()];
    const std::string tag = rep.tag == kOriginTag ? "δ" : sg.name(rep.tag);
    class_names[c] = "[" + tag + "," + act.point_name(rep.point) + "]";
  }

  auto quotient = PartialAction::validate_indexed(sg, std::move(class_names), std::move(map));
  detail::require(quotient.ok(), "quotient of the tagged universe is a partial action");
  PartialAction global = std::move(quotient).value();
  detail::require(is_global(global), "quotient action is global");

  std::vector<int> delta(act.carrier_size());
  for (int x = 0; x < static_cast<int>(act.carrier_size()); ++x) {
    delta[x] = class_of({kOriginTag, x});
  }
  auto embedding = make_morphism(act, global, delta);
  detail::require(embedding.ok() && embedding.value().status >= MorphismLevel::embedding,
                  "origin inclusion is an embedding");

  return Globalization(act, std::move(global), std::move(universe), std::move(classes),
                       std::move(element_classes), std::move(extended), std::move(delta),
                       std::move(embedding).value());
}

namespace detail {

inline bool commutes_as_morphism(const PartialAction& src, const PartialAction& tgt,
                                 const std::vector<int>& func) {
  for (int s = 0; s < static_cast<int>(src.structure().size()); ++s) {
    for (int x : src.domain(s)) {
      if (!tgt.defined(s, func[x]) || tgt.apply(s, func[x]) != func[src.apply(s, x)]) {
        return false;
      }
    }
  }
  return true;
}

// Counts morphisms from the quotient action to `target` that extend `phi`
// along the embedding. Values on origin classes are forced by the
// equation; the remaining classes are enumerated. Returns nullopt when the
// remaining function space exceeds `limit`.
inline std::optional<long long> count_commuting(const Globalization& g,
                                                const PartialAction& target,
                                                const std::vector<int>& phi, long long limit) {
  const PartialAction& e_action = g.global_action();
  const int total = g.class_count();
  const int zs = static_cast<int>(target.carrier_size());

  std::vector<int> func(total, -1);
  for (int x = 0; x < static_cast<int>(g.base().carrier_size()); ++x) {
    func[g.delta(x)] = phi[x];
  }
  std::vector<int> free;
  for (int c = 0; c < total; ++c) {
    if (func[c] == -1) {
      free.push_back(c);
    }
  }
  if (zs == 0) {
    return total == 0 ? 1 : 0;
  }
  long long space = 1;
  for (std::size_t i = 0; i < free.size(); ++i) {
    if (space > limit / zs) {
      return std::nullopt;
    }
    space *= zs;
  }
  if (space > limit) {
    return std::nullopt;
  }

  long long count = 0;
  std::vector<int> slot(free.size(), 0);
  while (true) {
    for (std::size_t i = 0; i < free.size(); ++i) {
      func[free[i]] = slot[i];
    }
    if (commutes_as_morphism(e_action, target, func)) {
      ++count;
    }
    std::size_t i = 0;
    for (; i < free.size(); ++i) {
      if (++slot[i] < zs) {
        break;
      }
      slot[i] = 0;
    }
    if (i == free.size()) {
      break;
    }
  }
  return count;
}

}  // namespace detail

// Transports a morphism into a global action through the globalization:
// origin classes go where phi sends their point, and a class tagged with s
// goes to the target's action of s on that image. Agreement across every
// member of every class is asserted, as are the morphism law and the
// factorization through the embedding.
inline ActionMorphism induced_morphism(const Globalization& g, const ActionMorphism& phi) {
  if (phi.source != g.base()) {
    throw std::invalid_argument("induced_morphism: phi does not start at the globalized action");
  }
  if (!is_global(phi.target)) {
    throw std::invalid_argument("induced_morphism: target action is not global");
  }
  const PartialAction& target = phi.target;
  std::vector<int> func(g.class_count(), -1);
  for (int c = 0; c < g.class_count(); ++c) {
    for (const TaggedPoint& p : g.class_members(c)) {
      int value;
      if (p.tag == kOriginTag) {
        value = phi.func[p.point];
      } else {
        detail::require(target.defined(p.tag, phi.func[p.point]),
                        "image point escapes the target domain");
        value = target.apply(p.tag, phi.func[p.point]);
      }
      if (func[c] == -1) {
        func[c] = value;
      }
      detail::require(func[c] == value, "induced map depends on the representative");
    }
  }
  auto out = make_morphism(g.global_action(), target, std::move(func));
  detail::require(out.ok(), "induced map is a morphism");
  for (int x = 0; x < static_cast<int>(g.base().carrier_size()); ++x) {
    detail::require(out.value().func[g.delta(x)] == phi.func[x],
                    "induced map factors through the embedding");
  }
  return std::move(out).value();
}

// Verifies that `induced` is the only morphism from the quotient action to
// phi's target that extends phi. At desk scale every candidate function is
// enumerated; beyond the budget the forcing argument is checked instead:
// each class is either an origin class, whose value the equation pins, or
// the action of its tag on an origin class, whose value the morphism law
// pins.
inline bool verify_universal_property(const Globalization& g, const ActionMorphism& phi,
                                      const ActionMorphism& induced,
                                      const EnumerationBudget& budget = {},
                                      bool structural_fallback = true) {
  ActionMorphism recomputed = induced_morphism(g, phi);
  detail::require(recomputed.func == induced.func, "induced morphism mismatch");

  std::optional<long long> count =
      detail::count_commuting(g, phi.target, phi.func, budget.max_function_space);
  if (count.has_value()) {
    return *count == 1;
  }
  if (!structural_fallback) {
    throw budget_error("function space exceeds the enumeration budget");
  }
  for (int c = 0; c < g.class_count(); ++c) {
    TaggedPoint rep = g.class_members(c).front();
    if (rep.tag == kOriginTag) {
      detail::require(induced.func[c] == phi.func[rep.point], "pinned origin value differs");
      continue;
    }
    int d = g.class_of({kOriginTag, rep.point});
    detail::require(g.beta(rep.tag, d) == c, "class is not reached from its origin class");
    detail::require(phi.target.defined(rep.tag, phi.func[rep.point]),
                    "forced value is undefined in the target");
    detail::require(induced.func[c] == phi.target.apply(rep.tag, phi.func[rep.point]),
                    "forced value differs from the induced map");
  }
  return true;
}

// The untouched part of the carrier corresponds exactly to the untouched
// classes of the quotient.
inline bool degeneracy_preserved(const Globalization& g) {
  DegeneracySplit base_split = degeneracy_split(g.base());
  DegeneracySplit global_split = degeneracy_split(g.global_action());
  sets::Set mapped;
  for (int x : base_split.inert) {
    mapped.push_back(g.delta(x));
  }
  mapped = sets::make(std::move(mapped));
  detail::require(mapped.size() == base_split.inert.size(), "embedding collapsed inert points");
  return mapped == global_split.inert;
}

}  // namespace sgpd

#endif  // SGPD_GLOBALIZATION_HPP_
