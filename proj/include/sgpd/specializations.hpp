#ifndef SGPD_SPECIALIZATIONS_HPP_
#define SGPD_SPECIALIZATIONS_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgpd/globalization.hpp"
#include "sgpd/morphism.hpp"
#include "sgpd/partial_action.hpp"
#include "sgpd/partition.hpp"
#include "sgpd/result.hpp"
#include "sgpd/sets.hpp"

namespace sgpd {

inline constexpr const char* kTensorUnitName = "1!";

// Over a totally composable structure the two compatibility laws collapse
// into one combined condition per pair. This evaluates that condition
// directly and then cross-checks the verdict, witness included, against
// the general validator.
inline Validated<PartialAction> validate_strong_semigroup_action(
    Semigroupoid sgpd, std::vector<std::string> carrier, std::vector<std::vector<int>> map) {
  if (!sgpd.is_semigroup()) {
    throw std::invalid_argument("validate_strong_semigroup_action: structure is not a semigroup");
  }
  const int n = static_cast<int>(sgpd.size());
  const int m = static_cast<int>(carrier.size());

  std::optional<Violation> direct;
  auto dom_of = [&](int s) {
    sets::Set out;
    for (int x = 0; x < m; ++x) {
      if (map[s][x] >= 0) {
        out.push_back(x);
      }
    }
    return out;
  };
  for (int a = 0; a < n && !direct; ++a) {
    for (int b = 0; b < n && !direct; ++b) {
      const int ab = sgpd.product(a, b);
      sets::Set dom_a = dom_of(a), dom_b = dom_of(b), dom_ab = dom_of(ab);
      sets::Set lhs;
      for (int x : dom_b) {
        if (map[a][map[b][x]] >= 0) {
          lhs.push_back(x);
        }
      }
      sets::Set rhs = sets::intersect(dom_b, dom_ab);
      if (lhs != rhs) {
        sets::Set diff = sets::unite(sets::difference(lhs, rhs), sets::difference(rhs, lhs));
        direct = Violation{"P1", "pair (" + sgpd.name(a) + "," + sgpd.name(b) + ") at point " +
                                     carrier[diff.front()]};
        break;
      }
      for (int x : rhs) {
        if (map[a][map[b][x]] != map[ab][x]) {
          direct = Violation{"P2", "pair (" + sgpd.name(a) + "," + sgpd.name(b) + ") at point " +
                                       carrier[x] + ": composed maps give " +
                                       carrier[map[a][map[b][x]]] + " but the product map gives " +
                                       carrier[map[ab][x]]};
          break;
        }
      }
    }
  }

  auto general = PartialAction::validate_indexed(std::move(sgpd), std::move(carrier), std::move(map));
  detail::require(general.ok() == !direct.has_value(), "strong-action routes disagree");
  if (!general.ok()) {
    detail::require(general.violation().rule == direct->rule &&
                        general.violation().detail == direct->detail,
                    "strong-action routes disagree on the witness");
    return *direct;
  }
  return general;
}

inline bool is_strong_semigroup_action(const PartialAction& act) {
  std::vector<std::vector<int>> map;
  for (int s = 0; s < static_cast<int>(act.structure().size()); ++s) {
    std::vector<int> row;
    for (int x = 0; x < static_cast<int>(act.carrier_size()); ++x) {
      row.push_back(act.apply(s, x));
    }
    map.push_back(std::move(row));
  }
  auto check = validate_strong_semigroup_action(act.structure(), act.carrier(), std::move(map));
  detail::require(check.ok(), "validated semigroup action fails the strong condition");
  return check.ok();
}

// The tensor-product globalization of a semigroup action: a fresh unit is
// adjoined, acting as the identity on the whole carrier, and the product
// set (unit + elements) x carrier is quotiented by moving an element's
// right factor onto the point it acts on. The resulting action is total,
// hence global and non-degenerate.
struct TensorGlobalization {
  PartialAction base;
  std::vector<std::string> extended_names;  // unit first, then the elements
  Partition classes;                        // over (unit + elements) x carrier
  PartialAction action;                     // the quotient, acted on totally
  std::vector<int> unit_classes;            // x -> class of (unit, x)
  ActionMorphism embedding;

  int carrier_size() const { return static_cast<int>(base.carrier_size()); }

  // u ranges over 0 = unit, i + 1 = element i.
  int pair_index(int u, int x) const { return u * carrier_size() + x; }

  int class_of(int u, int x) const { return classes.class_of(pair_index(u, x)); }
};

inline TensorGlobalization tensor_globalize(const PartialAction& act) {
  const Semigroupoid& sg = act.structure();
  if (!sg.is_semigroup()) {
    throw std::invalid_argument("tensor_globalize: structure is not a semigroup");
  }
  if (sg.index(kTensorUnitName) >= 0) {
    throw std::invalid_argument(std::string("tensor_globalize: element name ") + kTensorUnitName +
                                " is reserved for the adjoined unit");
  }
  const int n = static_cast<int>(sg.size());
  const int m = static_cast<int>(act.carrier_size());
  const int ext = n + 1;  // index 0 is the adjoined unit

  auto prod1 = [&](int a, int b) {
    if (a == 0) {
      return b;
    }
    if (b == 0) {
      return a;
    }
    return sg.product(a - 1, b - 1) + 1;
  };
  auto dom1 = [&](int u) {
    if (u == 0) {
      sets::Set all;
      for (int x = 0; x < m; ++x) {
        all.push_back(x);
      }
      return all;
    }
    return act.domain(u - 1);
  };
  auto apply1 = [&](int u, int x) { return u == 0 ? x : act.apply(u - 1, x); };

  DisjointSets ds(static_cast<std::size_t>(ext) * m);
  auto pair_index = [&](int u, int x) { return u * m + x; };
  for (int t = 0; t < ext; ++t) {
    for (int u = 0; u < ext; ++u) {
      for (int x : dom1(u)) {
        ds.unite(pair_index(prod1(t, u), x), pair_index(t, apply1(u, x)));
      }
    }
  }
  Partition classes(ds);

  std::vector<std::string> extended_names;
  extended_names.push_back(kTensorUnitName);
  for (int s = 0; s < n; ++s) {
    extended_names.push_back(sg.name(s));
  }

  const int class_count = static_cast<int>(classes.class_count());
  std::vector<std::vector<int>> gamma(n, std::vector<int>(class_count, -1));
  for (int s = 0; s < n; ++s) {
    for (int c = 0; c < class_count; ++c) {
      int value = -1;
      for (int i : classes.members(c)) {
        int u = i / m, x = i % m;
        int candidate = classes.class_of(pair_index(prod1(s + 1, u), x));
        if (value == -1) {
          value = candidate;
        }
        detail::require(value == candidate, "tensor action depends on the representative");
      }
      gamma[s][c] = value;
    }
  }

  std::vector<std::string> class_names(class_count);
  for (int c = 0; c < class_count; ++c) {
    int i = classes.members(c).front();
    class_names[c] = "[" + extended_names[i / m] + "," + act.point_name(i % m) + "]";
  }

  auto quotient = PartialAction::validate_indexed(sg, std::move(class_names), std::move(gamma));
  detail::require(quotient.ok(), "tensor quotient is a partial action");
  PartialAction action = std::move(quotient).value();
  detail::require(is_global(action), "tensor quotient is global");
  detail::require(is_nondegenerate(action), "tensor quotient is non-degenerate");

  std::vector<int> unit_classes(m);
  for (int x = 0; x < m; ++x) {
    unit_classes[x] = classes.class_of(pair_index(0, x));
  }
  auto emb = make_morphism(act, action, unit_classes);
  detail::require(emb.ok() && emb.value().status >= MorphismLevel::embedding,
                  "unit inclusion into the tensor quotient is an embedding");

  return TensorGlobalization{act,
                             std::move(extended_names),
                             std::move(classes),
                             std::move(action),
                             std::move(unit_classes),
                             std::move(emb).value()};
}

enum class ComparisonVerdict { isomorphic, bijective_not_isomorphic, incomparable };

inline const char* to_string(ComparisonVerdict v) {
  switch (v) {
    case ComparisonVerdict::isomorphic: return "isomorphic";
    case ComparisonVerdict::bijective_not_isomorphic: return "bijective-not-isomorphic";
    case ComparisonVerdict::incomparable: return "incomparable";
  }
  return "?";
}

// Side-by-side construction of both globalizations of a semigroup action,
// linked by the canonical morphism out of the universal one.
struct TensorComparison {
  Globalization universal;
  TensorGlobalization tensor;
  std::vector<int> canonical;  // universal class -> tensor class
  bool bijective = false;
  std::optional<bool> inverse_is_morphism;  // set only when bijective
  ComparisonVerdict verdict = ComparisonVerdict::incomparable;
  bool nondegenerate = false;
};

inline TensorComparison compare_globalizations(const PartialAction& act) {
  TensorComparison out{globalize(act), tensor_globalize(act), {}, false, std::nullopt,
                       ComparisonVerdict::incomparable, is_nondegenerate(act)};
  const Globalization& g = out.universal;
  const TensorGlobalization& t = out.tensor;

  out.canonical.assign(g.class_count(), -1);
  for (int c = 0; c < g.class_count(); ++c) {
    for (const TaggedPoint& p : g.class_members(c)) {
      int value = p.tag == kOriginTag ? t.class_of(0, p.point) : t.class_of(p.tag + 1, p.point);
      if (out.canonical[c] == -1) {
        out.canonical[c] = value;
      }
      detail::require(out.canonical[c] == value, "canonical map depends on the representative");
    }
  }
  MorphismReport report = classify_morphism(g.global_action(), t.action, out.canonical);
  detail::require(report.level >= MorphismLevel::morphism, "canonical map is a morphism");
  for (int x = 0; x < static_cast<int>(act.carrier_size()); ++x) {
    detail::require(out.canonical[g.delta(x)] == t.unit_classes[x],
                    "canonical map factors through the embeddings");
  }

  std::vector<int> seen(t.action.carrier_size(), 0);
  bool injective = true;
  for (int v : out.canonical) {
    if (seen[v]++) {
      injective = false;
    }
  }
  out.bijective = injective && g.class_count() == static_cast<int>(t.action.carrier_size());
  if (out.bijective) {
    std::vector<int> inverse(t.action.carrier_size());
    for (int c = 0; c < g.class_count(); ++c) {
      inverse[out.canonical[c]] = c;
    }
    out.inverse_is_morphism =
        classify_morphism(t.action, g.global_action(), inverse).level >= MorphismLevel::morphism;
    out.verdict = *out.inverse_is_morphism ? ComparisonVerdict::isomorphic
                                           : ComparisonVerdict::bijective_not_isomorphic;
  } else {
    out.verdict = ComparisonVerdict::incomparable;
  }
  return out;
}

// Derived endpoint data for a structure that is a category: per element,
// the identities it composes with on either side.
struct CategoryShape {
  std::vector<int> identities;
  std::vector<int> source;  // element -> right identity
  std::vector<int> target;  // element -> left identity
};

inline std::optional<CategoryShape> category_shape(const Semigroupoid& sg) {
  CategoryShape shape;
  shape.identities = sg.identity_elements();
  const int n = static_cast<int>(sg.size());
  shape.source.assign(n, -1);
  shape.target.assign(n, -1);
  for (int s = 0; s < n; ++s) {
    for (int e : shape.identities) {
      if (sg.composable(s, e)) {
        if (shape.source[s] != -1) {
          return std::nullopt;
        }
        shape.source[s] = e;
      }
      if (sg.composable(e, s)) {
        if (shape.target[s] != -1) {
          return std::nullopt;
        }
        shape.target[s] = e;
      }
    }
    if (shape.source[s] == -1 || shape.target[s] == -1) {
      return std::nullopt;
    }
  }
  for (int f = 0; f < n; ++f) {
    for (int g = 0; g < n; ++g) {
      if (sg.composable(f, g) != (shape.source[f] == shape.target[g])) {
        return std::nullopt;
      }
    }
  }
  return shape;
}

// The axioms a partial action of a category has to satisfy to be a
// category action, each reported separately.
struct CategoryActionReport {
  bool ok = false;
  bool cover = false;             // carrier covered by the identity images
  bool identity_maps = false;     // identities act as the identity map
  bool domain_inclusion = false;  // each domain sits inside its source identity's domain
  bool compatibility = true;      // the two action laws; true for validated input
  std::optional<bool> global_domains;  // domains equal their source identity's domain
  std::string witness;
};

// Evaluates the category-action axioms and, independently, the equivalent
// identity-based conditions on top of plain action validity; the two
// routes must agree.
inline CategoryActionReport check_category_action(const PartialAction& act,
                                                  bool check_global = false) {
  std::optional<CategoryShape> shape = category_shape(act.structure());
  if (!shape.has_value()) {
    throw std::invalid_argument("check_category_action: structure is not a category");
  }
  const Semigroupoid& sg = act.structure();
  const int n = static_cast<int>(sg.size());
  CategoryActionReport report;

  sets::Set identity_images;
  for (int e : shape->identities) {
    identity_images = sets::unite(identity_images, act.image(e));
  }
  sets::Set all;
  for (int x = 0; x < static_cast<int>(act.carrier_size()); ++x) {
    all.push_back(x);
  }
  report.cover = identity_images == all;
  if (!report.cover) {
    report.witness = "carrier not covered by identity images";
  }

  report.identity_maps = true;
  for (int e : shape->identities) {
    for (int x : act.domain(e)) {
      if (act.apply(e, x) != x) {
        report.identity_maps = false;
        if (report.witness.empty()) {
          report.witness = "identity " + sg.name(e) + " moves " + act.point_name(x);
        }
      }
    }
  }

  report.domain_inclusion = true;
  for (int g = 0; g < n; ++g) {
    if (!sets::is_subset(act.domain(g), act.domain(shape->source[g]))) {
      report.domain_inclusion = false;
      if (report.witness.empty()) {
        report.witness = "domain of " + sg.name(g) + " escapes the domain of " +
                         sg.name(shape->source[g]);
      }
    }
  }

  report.ok = report.cover && report.identity_maps && report.domain_inclusion;

  // independent route: union of all images covers the carrier, identities
  // act identically, and right-composition with an identity nests domains
  bool full_cover;
  {
    sets::Set imgs;
    for (int s = 0; s < n; ++s) {
      imgs = sets::unite(imgs, act.image(s));
    }
    full_cover = imgs == all;
  }
  bool nested = true;
  for (int e : shape->identities) {
    for (int s = 0; s < n; ++s) {
      if (sg.composable(s, e) && !sets::is_subset(act.domain(s), act.domain(e))) {
        nested = false;
      }
    }
  }
  detail::require(report.ok == (full_cover && report.identity_maps && nested),
                  "category-action routes disagree");

  if (check_global) {
    bool c4 = true;
    for (int g = 0; g < n; ++g) {
      if (act.domain(g) != act.domain(shape->source[g])) {
        c4 = false;
      }
    }
    report.global_domains = c4;
    detail::require((report.ok && c4) == (report.ok && is_global(act)),
                    "category globality routes disagree");
    report.ok = report.ok && c4;
    if (!c4 && report.witness.empty()) {
      report.witness = "domains are not determined by the source identity";
    }
  }
  return report;
}

// The universal globalization of a category action stays a category
// action. A false return here marks a bug, not bad input.
inline bool globalization_is_categorical(const PartialAction& act) {
  if (!check_category_action(act).ok) {
    throw std::invalid_argument("globalization_is_categorical: input is not a category action");
  }
  Globalization g = globalize(act);
  return check_category_action(g.global_action(), /*check_global=*/true).ok;
}

}  // namespace sgpd

#endif  // SGPD_SPECIALIZATIONS_HPP_
