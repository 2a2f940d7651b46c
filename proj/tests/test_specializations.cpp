#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "sgpd/globalization.hpp"
#include "sgpd/oracle.hpp"
#include "sgpd/specializations.hpp"

using namespace sgpd;

TEST_CASE("the strong condition agrees with plain validation over semigroups") {
  PartialAction folded = fixtures::fold_action(2);
  CHECK(is_strong_semigroup_action(folded));

  // empty domains: everything is vacuous
  PartialAction empty = fixtures::empty_action(fixtures::s01(), 2);
  CHECK(is_strong_semigroup_action(empty));

  // a broken family fails both routes with the same witness
  Semigroupoid s01 = fixtures::s01();
  std::vector<std::vector<int>> map(2, std::vector<int>(2, -1));
  map[s01.index("1")][0] = 0;
  map[s01.index("1")][1] = 1;
  map[s01.index("0")][0] = 1;  // 0 maps x0 to x1 but 0*0 = 0 forces idempotence
  auto direct = validate_strong_semigroup_action(s01, {"x0", "x1"}, map);
  auto general = PartialAction::validate_indexed(s01, {"x0", "x1"}, map);
  REQUIRE_FALSE(direct.ok());
  REQUIRE_FALSE(general.ok());
  CHECK(direct.violation().rule == general.violation().rule);
  CHECK(direct.violation().detail == general.violation().detail);
}

TEST_CASE("the strong condition rejects non-semigroups") {
  CHECK_THROWS_AS(is_strong_semigroup_action(fixtures::nm_action()), std::invalid_argument);
}

TEST_CASE("tensor globalization of the one-point fold action collapses to a point") {
  TensorGlobalization t = tensor_globalize(fixtures::fold_action(1));
  CHECK(t.action.carrier_size() == 1);
  CHECK(is_global(t.action));
  CHECK(is_nondegenerate(t.action));
}

TEST_CASE("tensor globalization keeps untouched points apart") {
  // domains are {a} for both elements; b is untouched
  Semigroupoid s01 = fixtures::s01();
  PartialAction act = PartialAction::validate(
                          s01, {"a", "b"}, {{"0", {{"a", "a"}}}, {"1", {{"a", "a"}}}})
                          .value();
  TensorGlobalization t = tensor_globalize(act);
  // classes: the merged orbit of a, plus one class per tagged copy of b
  CHECK(t.action.carrier_size() == 4);
  int unit_b = t.class_of(0, act.point_index("b"));
  int zero_b = t.class_of(s01.index("0") + 1, act.point_index("b"));
  CHECK(unit_b != zero_b);
  // the element 0 moves the unit copy of b onto the 0-tagged copy
  CHECK(t.action.apply(s01.index("0"), unit_b) == zero_b);
  CHECK(t.embedding.status >= MorphismLevel::embedding);
}

TEST_CASE("the unit inclusion into the tensor quotient is injective") {
  std::mt19937 rng(5150);
  for (int round = 0; round < 30; ++round) {
    auto pool = enumerate_semigroupoids(2);
    std::vector<Semigroupoid> semigroups;
    for (const Semigroupoid& s : pool) {
      if (s.is_semigroup()) {
        semigroups.push_back(s);
      }
    }
    const Semigroupoid& s =
        semigroups[std::uniform_int_distribution<std::size_t>(0, semigroups.size() - 1)(rng)];
    PartialAction act = sample_partial_action(rng, s, 3);
    TensorGlobalization t = tensor_globalize(act);
    std::set<int> hit(t.unit_classes.begin(), t.unit_classes.end());
    CHECK(hit.size() == act.carrier_size());
  }
}

TEST_CASE("comparison on a non-degenerate action is an isomorphism") {
  TensorComparison cmp = compare_globalizations(fixtures::fold_action(2));
  CHECK(cmp.nondegenerate);
  CHECK(cmp.bijective);
  REQUIRE(cmp.inverse_is_morphism.has_value());
  CHECK(*cmp.inverse_is_morphism);
  CHECK(cmp.verdict == ComparisonVerdict::isomorphic);
}

TEST_CASE("comparison on a degenerate action is honest about the size gap") {
  // the universal quotient keeps one class for the untouched point while
  // the tensor quotient holds a whole orbit of tagged copies, so the
  // canonical map cannot be onto
  Semigroupoid s01 = fixtures::s01();
  PartialAction act = PartialAction::validate(
                          s01, {"a", "b"}, {{"0", {{"a", "a"}}}, {"1", {{"a", "a"}}}})
                          .value();
  TensorComparison cmp = compare_globalizations(act);
  CHECK_FALSE(cmp.nondegenerate);
  CHECK(cmp.universal.class_count() == 2);
  CHECK(cmp.tensor.action.carrier_size() == 4);
  CHECK_FALSE(cmp.bijective);
  CHECK(cmp.verdict == ComparisonVerdict::incomparable);
}

TEST_CASE("comparison of the empty-carrier action is trivially an isomorphism") {
  PartialAction act = fixtures::empty_action(fixtures::s01(), 0);
  TensorComparison cmp = compare_globalizations(act);
  CHECK(cmp.nondegenerate);
  CHECK(cmp.bijective);
  CHECK(cmp.verdict == ComparisonVerdict::isomorphic);
}

TEST_CASE("over a semigroup, every domain of the quotient omits exactly the inert image") {
  for (const Semigroupoid& s : enumerate_semigroupoids(2)) {
    if (!s.is_semigroup()) {
      continue;
    }
    for (int m = 0; m <= 2; ++m) {
      for (const PartialAction& act : enumerate_partial_actions(s, m)) {
        Globalization g = globalize(act);
        sets::Set inert_classes;
        for (int x : degeneracy_split(act).inert) {
          inert_classes.push_back(g.delta(x));
        }
        inert_classes = sets::make(std::move(inert_classes));
        sets::Set everything;
        for (int c = 0; c < g.class_count(); ++c) {
          everything.push_back(c);
        }
        sets::Set expected = sets::difference(everything, inert_classes);
        for (int e = 0; e < static_cast<int>(s.size()); ++e) {
          CHECK(g.domain_of(e) == expected);
        }
      }
    }
  }
}

TEST_CASE("strong-global means total domains, which means non-degenerate global") {
  for (const Semigroupoid& s : enumerate_semigroupoids(2)) {
    if (!s.is_semigroup()) {
      continue;
    }
    for (int m = 0; m <= 2; ++m) {
      for (const PartialAction& act : enumerate_partial_actions(s, m)) {
        bool total = true;
        for (int e = 0; e < static_cast<int>(s.size()); ++e) {
          if (static_cast<int>(act.domain(e).size()) != m) {
            total = false;
          }
        }
        CHECK(total == (is_global(act) && is_nondegenerate(act)));
      }
    }
  }
}

TEST_CASE("the collapse action is valid but not a category action") {
  PartialAction act = fixtures::arrow_collapse_action();
  CategoryActionReport report = check_category_action(act);
  CHECK_FALSE(report.ok);
  CHECK_FALSE(report.identity_maps);    // the target identity moves a point
  CHECK_FALSE(report.domain_inclusion); // the arrow's domain escapes its source
  CHECK_FALSE(report.cover);
  CHECK(report.compatibility);
}

TEST_CASE("identity actions of one-object categories are category actions") {
  CategoryData one;
  one.objects = {"o"};
  one.morphisms = {"o"};
  one.dom = {{"o", "o"}};
  one.ran = {{"o", "o"}};
  one.compose = {{{"o", "o"}, "o"}};
  Semigroupoid c = from_category(one).value();
  PartialAction act =
      PartialAction::validate(c, {"x", "y"}, {{"o", {{"x", "x"}, {"y", "y"}}}}).value();
  CategoryActionReport report = check_category_action(act, true);
  CHECK(report.ok);
}

TEST_CASE("left regular actions of categories are global category actions") {
  PartialAction lr = left_regular(fixtures::arrow_category());
  CategoryActionReport report = check_category_action(lr, true);
  CHECK(report.ok);
  REQUIRE(report.global_domains.has_value());
  CHECK(*report.global_domains);
}

TEST_CASE("category-action checks reject non-categories") {
  CHECK_THROWS_AS(check_category_action(fixtures::nm_action()), std::invalid_argument);
}

TEST_CASE("globalizations of category actions stay category actions") {
  PartialAction lr = left_regular(fixtures::arrow_category());
  sets::Set sub = {lr.point_index("g"), lr.point_index("q")};
  PartialAction cut = restrict_to(lr, sub);
  REQUIRE(check_category_action(cut).ok);
  CHECK(globalization_is_categorical(cut));

  std::mt19937 rng(909);
  for (int round = 0; round < 25; ++round) {
    Semigroupoid cat = sample_category(rng, 4);
    PartialAction act = sample_categorical_action(rng, cat, 4);
    CHECK(globalization_is_categorical(act));
  }
}

TEST_CASE("no small non-degenerate globalization accommodates both inclusions") {
  // the two embeddings of the restricted idempotent-loops action cannot
  // factor through one non-degenerate globalization: whichever domain the
  // untouched point lands in, one of the two would have to map it into a
  // domain that does not contain its image
  PartialAction cut = fixtures::ef_restricted();
  PartialAction global = fixtures::ef_global();
  Semigroupoid s = cut.structure();
  auto i_incl =
      make_morphism(cut, global, {global.point_index("1"), global.point_index("2")}).value();
  auto j_incl =
      make_morphism(cut, global, {global.point_index("1"), global.point_index("3")}).value();
  REQUIRE(i_incl.status >= MorphismLevel::embedding);
  REQUIRE(j_incl.status >= MorphismLevel::embedding);

  const int kMaxCarrier = 3;
  for (int m = 2; m <= kMaxCarrier; ++m) {
    std::vector<std::string> carrier;
    for (int i = 0; i < m; ++i) {
      carrier.push_back("c" + std::to_string(i));
    }
    // all candidate global actions on m points
    std::vector<PartialAction> candidates;
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
        rows.push_back(row);
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
    for (std::size_t re = 0; re < rows.size(); ++re) {
      for (std::size_t rf = 0; rf < rows.size(); ++rf) {
        auto candidate = PartialAction::validate_indexed(s, carrier, {rows[re], rows[rf]});
        if (!candidate.ok() || !is_global(candidate.value()) ||
            !is_nondegenerate(candidate.value())) {
          continue;
        }
        candidates.push_back(std::move(candidate).value());
      }
    }
    for (const PartialAction& theta : candidates) {
      // embeddings of the restriction into the candidate
      for (int d1 = 0; d1 < m; ++d1) {
        for (int d2 = 0; d2 < m; ++d2) {
          if (d1 == d2) {
            continue;
          }
          auto delta = make_morphism(cut, theta, {d1, d2});
          if (!delta.ok() || delta.value().status < MorphismLevel::embedding) {
            continue;
          }
          // look for morphisms back into the big action satisfying both
          // factorization equations
          bool has_i = false, has_j = false;
          std::vector<int> func(m, 0);
          while (true) {
            MorphismReport report = classify_morphism(theta, global, func);
            if (report.level >= MorphismLevel::morphism) {
              if (func[d1] == i_incl.func[0] && func[d2] == i_incl.func[1]) {
                has_i = true;
              }
              if (func[d1] == j_incl.func[0] && func[d2] == j_incl.func[1]) {
                has_j = true;
              }
            }
            int pos = 0;
            for (; pos < m; ++pos) {
              if (++func[pos] < static_cast<int>(global.carrier_size())) {
                break;
              }
              func[pos] = 0;
            }
            if (pos == m) {
              break;
            }
          }
          CHECK_FALSE((has_i && has_j));
        }
      }
    }
  }
}

TEST_CASE("the adjoined unit name is reserved") {
  Semigroupoid clash = from_semigroup({"1!"}, {{"1!"}}).value();
  PartialAction act = fixtures::empty_action(clash, 1);
  CHECK_THROWS_AS(tensor_globalize(act), std::invalid_argument);
}

TEST_CASE("the identity action of a one-object category globalizes categorically") {
  CategoryData one;
  one.objects = {"o"};
  one.morphisms = {"o"};
  one.dom = {{"o", "o"}};
  one.ran = {{"o", "o"}};
  one.compose = {{{"o", "o"}, "o"}};
  Semigroupoid c = from_category(one).value();
  PartialAction act =
      PartialAction::validate(c, {"x", "y"}, {{"o", {{"x", "x"}, {"y", "y"}}}}).value();
  CHECK(globalization_is_categorical(act));
}

TEST_CASE("identity elements of category actions act as projections") {
  std::vector<PartialAction> pool;
  pool.push_back(left_regular(fixtures::arrow_category()));
  pool.push_back(restrict_to(pool.front(), {0, 2}));
  for (const PartialAction& act : pool) {
    const Semigroupoid& s = act.structure();
    for (int e : s.identity_elements()) {
      for (int y : act.image(e)) {
        REQUIRE(act.defined(e, y));
        CHECK(act.apply(e, y) == y);
      }
      for (int t = 0; t < static_cast<int>(s.size()); ++t) {
        if (s.composable(e, t)) {
          CHECK(sets::is_subset(act.image(t), act.image(e)));
        }
      }
    }
  }
}
