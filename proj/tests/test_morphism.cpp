#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fixtures.hpp"
#include "sgpd/globalization.hpp"
#include "sgpd/morphism.hpp"
#include "sgpd/oracle.hpp"

using namespace sgpd;

TEST_CASE("the identity map is an isomorphism") {
  for (const PartialAction& act :
       {fixtures::nm_action(), fixtures::ef_global(), fixtures::ef_restricted()}) {
    ActionMorphism id = identity_morphism(act);
    CHECK(id.status == MorphismLevel::isomorphism);
  }
}

TEST_CASE("inclusions along the fold chain are embeddings") {
  PartialAction small = fixtures::fold_action(1);
  PartialAction mid = fixtures::fold_action(2);
  PartialAction large = fixtures::fold_action(3);

  auto incl12 = make_morphism(small, mid, {0});
  REQUIRE(incl12.ok());
  CHECK(incl12.value().status == MorphismLevel::embedding);

  auto incl23 = make_morphism(mid, large, {0, 1});
  REQUIRE(incl23.ok());
  CHECK(incl23.value().status == MorphismLevel::embedding);

  auto chained = compose(incl23.value(), incl12.value());
  REQUIRE(chained.ok());
  CHECK(chained.value().status == MorphismLevel::embedding);
  CHECK(chained.value().target == large);
}

TEST_CASE("the embedding into the globalization is not an isomorphism here") {
  Globalization g = globalize(fixtures::nm_action());
  const ActionMorphism& delta = g.embedding();
  CHECK(delta.status == MorphismLevel::embedding);
  CHECK(g.class_count() == 8);
  CHECK(g.class_count() > static_cast<int>(fixtures::nm_action().carrier_size()));
}

TEST_CASE("composing with the identity changes nothing") {
  PartialAction act = fixtures::ef_restricted();
  Globalization g = globalize(act);
  auto composed = compose(g.embedding(), identity_morphism(act));
  REQUIRE(composed.ok());
  CHECK(composed.value().func == g.embedding().func);
}

TEST_CASE("composition demands matching endpoints") {
  auto id_a = identity_morphism(fixtures::fold_action(1));
  auto id_b = identity_morphism(fixtures::fold_action(2));
  CHECK_FALSE(compose(id_a, id_b).ok());
}

TEST_CASE("a map out of a different structure is rejected") {
  CHECK_THROWS_AS(
      classify_morphism(fixtures::nm_action(), fixtures::ef_global(), {0, 0, 0, 0}),
      std::invalid_argument);
}

TEST_CASE("the globalization embedding exhibits a restriction") {
  PartialAction act = fixtures::nm_action();
  Globalization g = globalize(act);
  CHECK(embeds_as_restriction(g.embedding()));
}

TEST_CASE("non-injective maps never exhibit restrictions") {
  PartialAction target = fixtures::fold_action(2);
  PartialAction source = fixtures::empty_action(fixtures::s01(), 2);
  auto constant = make_morphism(source, target, {0, 0});
  if (constant.ok()) {
    CHECK_FALSE(embeds_as_restriction(constant.value()));
  }
}

TEST_CASE("the inclusion into the idempotent-loops global action exhibits a restriction") {
  PartialAction cut = fixtures::ef_restricted();
  PartialAction global = fixtures::ef_global();
  // carrier of the restriction is {1,2} inside {0,1,2,3}
  std::vector<int> incl = {global.point_index("1"), global.point_index("2")};
  auto phi = make_morphism(cut, global, incl);
  REQUIRE(phi.ok());
  CHECK(phi.value().status == MorphismLevel::embedding);
  CHECK(embeds_as_restriction(phi.value()));

  // the twisted inclusion sending 2 to 3 is an embedding as well
  std::vector<int> twisted = {global.point_index("1"), global.point_index("3")};
  auto psi = make_morphism(cut, global, twisted);
  REQUIRE(psi.ok());
  CHECK(psi.value().status == MorphismLevel::embedding);
}

TEST_CASE("a bijective morphism is an isomorphism exactly when its inverse is a morphism") {
  // identity carrier map between nested domains: a morphism one way only
  auto one = Semigroupoid::validate({"e"}, {{{"e", "e", "e"}}}).value();
  PartialAction narrow =
      PartialAction::validate(one, {"a", "b"}, {{"e", {{"a", "a"}}}}).value();
  PartialAction wide =
      PartialAction::validate(one, {"a", "b"}, {{"e", {{"a", "a"}, {"b", "b"}}}}).value();
  auto up = make_morphism(narrow, wide, {0, 1});
  REQUIRE(up.ok());
  CHECK(up.value().status == MorphismLevel::morphism);  // bijective but not an embedding
  CHECK_FALSE(invert(up.value()).has_value());

  // on enumerated small instances the equivalence holds in both directions
  for (const Semigroupoid& s : enumerate_semigroupoids(2)) {
    std::vector<PartialAction> actions = enumerate_partial_actions(s, 2);
    for (const PartialAction& a : actions) {
      for (const PartialAction& b : actions) {
        if (a.carrier_size() != b.carrier_size()) {
          continue;
        }
        std::vector<int> perm(a.carrier_size());
        for (std::size_t i = 0; i < perm.size(); ++i) {
          perm[i] = static_cast<int>(i);
        }
        do {
          MorphismReport report = classify_morphism(a, b, perm);
          if (report.level < MorphismLevel::morphism) {
            continue;
          }
          auto phi = make_morphism(a, b, perm);
          bool iso = report.level == MorphismLevel::isomorphism;
          auto inverse = invert(phi.value());
          CHECK(iso == inverse.has_value());
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
    }
  }
}

TEST_CASE("embeddings compose to embeddings on sampled instances") {
  std::mt19937 rng(20240811);
  for (int round = 0; round < 40; ++round) {
    Semigroupoid s = sample_semigroupoid(rng, 3);
    PartialAction act = sample_partial_action(rng, s, 3);
    Globalization inner = globalize(act);
    Globalization outer = globalize(inner.global_action());
    auto chained = compose(outer.embedding(), inner.embedding());
    REQUIRE(chained.ok());
    CHECK(chained.value().status >= MorphismLevel::embedding);
  }
}
