#ifndef SGPD_MORPHISM_HPP_
#define SGPD_MORPHISM_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgpd/partial_action.hpp"
#include "sgpd/result.hpp"
#include "sgpd/sets.hpp"

namespace sgpd {

enum class MorphismLevel { none, morphism, embedding, isomorphism };

inline const char* to_string(MorphismLevel level) {
  switch (level) {
    case MorphismLevel::none: return "not-a-morphism";
    case MorphismLevel::morphism: return "morphism";
    case MorphismLevel::embedding: return "embedding";
    case MorphismLevel::isomorphism: return "isomorphism";
  }
  return "?";
}

struct MorphismReport {
  MorphismLevel level = MorphismLevel::none;
  std::string witness;  // first obstruction to the next level, empty for isomorphisms
};

// Classifies a total map between carriers of two actions of the same
// structure. The levels are cumulative:
//   morphism     domains map into domains and the squares commute;
//   embedding    injective, and each source domain is exactly the set of
//                points whose image is in the target domain and is sent
//                back into the image of the map;
//   isomorphism  a bijective embedding.
inline MorphismReport classify_morphism(const PartialAction& src, const PartialAction& tgt,
                                        const std::vector<int>& func) {
  if (src.structure() != tgt.structure()) {
    throw std::invalid_argument("classify_morphism: actions live over different structures");
  }
  if (func.size() != src.carrier_size()) {
    throw std::invalid_argument("classify_morphism: map is not total on the source carrier");
  }
  for (int v : func) {
    if (v < 0 || v >= static_cast<int>(tgt.carrier_size())) {
      throw std::invalid_argument("classify_morphism: map value outside the target carrier");
    }
  }
  const Semigroupoid& s = src.structure();
  const int n = static_cast<int>(s.size());

  for (int a = 0; a < n; ++a) {
    for (int x : src.domain(a)) {
      if (!tgt.defined(a, func[x])) {
        return {MorphismLevel::none,
                "domain image escapes: (" + s.name(a) + "," + src.point_name(x) + ")"};
      }
      if (tgt.apply(a, func[x]) != func[src.apply(a, x)]) {
        return {MorphismLevel::none,
                "square does not commute at (" + s.name(a) + "," + src.point_name(x) + ")"};
      }
    }
  }

  // injectivity
  for (std::size_t i = 0; i < func.size(); ++i) {
    for (std::size_t j = i + 1; j < func.size(); ++j) {
      if (func[i] == func[j]) {
        return {MorphismLevel::morphism, "not injective: " + src.point_name(static_cast<int>(i)) +
                                             " and " + src.point_name(static_cast<int>(j))};
      }
    }
  }
  sets::Set img;
  for (int v : func) {
    img.push_back(v);
  }
  img = sets::make(std::move(img));
  for (int a = 0; a < n; ++a) {
    sets::Set pulled;
    for (int x = 0; x < static_cast<int>(src.carrier_size()); ++x) {
      if (tgt.defined(a, func[x]) && sets::contains(img, tgt.apply(a, func[x]))) {
        pulled.push_back(x);
      }
    }
    if (pulled != src.domain(a)) {
      sets::Set diff = sets::unite(sets::difference(pulled, src.domain(a)),
                                   sets::difference(src.domain(a), pulled));
      return {MorphismLevel::morphism, "domain of " + s.name(a) +
                                           " is not the pullback, differs at " +
                                           src.point_name(diff.front())};
    }
  }

  if (func.size() != tgt.carrier_size()) {
    return {MorphismLevel::embedding, "not surjective"};
  }
  return {MorphismLevel::isomorphism, ""};
}

// A classified total map between actions of one structure.
struct ActionMorphism {
  PartialAction source;
  PartialAction target;
  std::vector<int> func;
  MorphismLevel status = MorphismLevel::none;

  int operator()(int x) const { return func[x]; }
};

// The classification is recomputed here, never trusted from the caller.
inline Validated<ActionMorphism> make_morphism(PartialAction src, PartialAction tgt,
                                               std::vector<int> func) {
  MorphismReport report = classify_morphism(src, tgt, func);
  if (report.level == MorphismLevel::none) {
    return Violation{"morphism", report.witness};
  }
  return ActionMorphism{std::move(src), std::move(tgt), std::move(func), report.level};
}

inline ActionMorphism identity_morphism(const PartialAction& act) {
  std::vector<int> func(act.carrier_size());
  for (std::size_t i = 0; i < func.size(); ++i) {
    func[i] = static_cast<int>(i);
  }
  auto out = make_morphism(act, act, std::move(func));
  detail::require(out.ok() && out.value().status == MorphismLevel::isomorphism,
                  "identity map must be an isomorphism");
  return std::move(out).value();
}

// Composes two morphisms. Composing two embeddings must again be an
// embedding; that is asserted on the recomputed status.
inline Validated<ActionMorphism> compose(const ActionMorphism& outer, const ActionMorphism& inner) {
  if (inner.target != outer.source) {
    return Violation{"morphism", "composition mismatch: inner target differs from outer source"};
  }
  std::vector<int> func(inner.func.size());
  for (std::size_t x = 0; x < func.size(); ++x) {
    func[x] = outer.func[inner.func[x]];
  }
  auto out = make_morphism(inner.source, outer.target, std::move(func));
  detail::require(out.ok(), "composite of morphisms is a morphism");
  if (inner.status >= MorphismLevel::embedding && outer.status >= MorphismLevel::embedding) {
    detail::require(out.value().status >= MorphismLevel::embedding,
                    "composite of embeddings is an embedding");
  }
  return out;
}

// For a bijective morphism, the inverse map; classified from scratch.
inline std::optional<ActionMorphism> invert(const ActionMorphism& phi) {
  if (phi.func.size() != phi.target.carrier_size()) {
    return std::nullopt;
  }
  std::vector<int> inv(phi.func.size(), -1);
  for (std::size_t x = 0; x < phi.func.size(); ++x) {
    if (inv[phi.func[x]] != -1) {
      return std::nullopt;
    }
    inv[phi.func[x]] = static_cast<int>(x);
  }
  auto out = make_morphism(phi.target, phi.source, std::move(inv));
  if (!out.ok()) {
    return std::nullopt;
  }
  return std::move(out).value();
}

// Decides whether phi exhibits its source as (an isomorphic copy of) a
// restriction of the global target. True exactly when phi is an embedding;
// in that case the source is also explicitly matched against the
// restriction of the target to the image of phi.
inline bool embeds_as_restriction(const ActionMorphism& phi) {
  if (!is_global(phi.target)) {
    throw std::invalid_argument("embeds_as_restriction requires a global target");
  }
  if (phi.status < MorphismLevel::embedding) {
    return false;
  }
  sets::Set img;
  for (int v : phi.func) {
    img.push_back(v);
  }
  img = sets::make(std::move(img));
  PartialAction cut = restrict_to(phi.target, img);
  std::vector<int> into(phi.func.size());
  for (std::size_t x = 0; x < phi.func.size(); ++x) {
    into[x] = cut.point_index(phi.target.point_name(phi.func[x]));
    detail::require(into[x] >= 0, "image point survives the restriction");
  }
  MorphismReport onto = classify_morphism(phi.source, cut, into);
  detail::require(onto.level == MorphismLevel::isomorphism,
                  "an embedding is an isomorphism onto the restriction to its image");
  return true;
}

}  // namespace sgpd

#endif  // SGPD_MORPHISM_HPP_
