#ifndef SGPD_TESTS_FIXTURES_HPP_
#define SGPD_TESTS_FIXTURES_HPP_

#include <string>
#include <vector>

#include "sgpd/builders.hpp"
#include "sgpd/partial_action.hpp"
#include "sgpd/semigroupoid.hpp"

namespace fixtures {

// Five elements, three composable pairs, every product the absorbing 0.
// Not categorical, not a word semigroupoid.
inline sgpd::Semigroupoid nm() {
  return sgpd::Semigroupoid::validate(
             {"s1", "s2", "t1", "t2", "0"},
             {{{"s1", "t1", "0"}}, {{"s1", "t2", "0"}}, {{"s2", "t2", "0"}}})
      .value();
}

// The partial action of nm() on {1,2,3,4}.
inline sgpd::PartialAction nm_action() {
  return sgpd::PartialAction::validate(nm(), {"1", "2", "3", "4"},
                                       {{"s1", {{"1", "2"}, {"2", "3"}}},
                                        {"s2", {{"1", "2"}}},
                                        {"t1", {{"2", "1"}}},
                                        {"t2", {{"1", "1"}, {"3", "3"}}},
                                        {"0", {{"1", "2"}, {"2", "2"}}}})
      .value();
}

// Three words s, t, st; the only composition is s*t.
inline sgpd::Semigroupoid stst() {
  return sgpd::Semigroupoid::validate({"s", "t", "st"}, {{{"s", "t", "st"}}}).value();
}

// The two-element monoid {0,1} with absorbing 0.
inline sgpd::Semigroupoid s01() {
  return sgpd::from_semigroup({"0", "1"}, {{"0", "0"}, {"0", "1"}}).value();
}

// Two disjoint idempotent loops e, f.
inline sgpd::Semigroupoid ef() {
  return sgpd::Semigroupoid::validate({"e", "f"}, {{{"e", "e", "e"}}, {{"f", "f", "f"}}}).value();
}

// The global action of ef() on {0,1,2,3}: e fixes 0,1 and folds 2 to 0;
// f fixes 0,1 and folds 3 to 0.
inline sgpd::PartialAction ef_global() {
  return sgpd::PartialAction::validate(ef(), {"0", "1", "2", "3"},
                                       {{"e", {{"0", "0"}, {"1", "1"}, {"2", "0"}}},
                                        {"f", {{"0", "0"}, {"1", "1"}, {"3", "0"}}}})
      .value();
}

// Its restriction to {1,2}; degenerate at 2.
inline sgpd::PartialAction ef_restricted() {
  sgpd::PartialAction global = ef_global();
  return sgpd::restrict_to(global, {global.point_index("1"), global.point_index("2")});
}

// The two-object category with a single non-identity arrow g.
inline sgpd::Semigroupoid arrow_category() {
  sgpd::CategoryData cat;
  cat.objects = {"p", "q"};
  cat.morphisms = {"p", "q", "g"};
  cat.dom = {{"p", "p"}, {"q", "q"}, {"g", "p"}};
  cat.ran = {{"p", "p"}, {"q", "q"}, {"g", "q"}};
  cat.compose = {{{"p", "p"}, "p"}, {{"q", "q"}, "q"}, {{"q", "g"}, "g"}, {{"g", "p"}, "g"}};
  return sgpd::from_category(cat).value();
}

// The action of the arrow category on {0,1,2} with every map constant 0.
// A valid partial action that is not a category action. Element p is the
// source identity of g, q its target identity.
inline sgpd::PartialAction arrow_collapse_action() {
  return sgpd::PartialAction::validate(arrow_category(), {"0", "1", "2"},
                                       {{"p", {{"0", "0"}}},
                                        {"q", {{"0", "0"}, {"1", "0"}}},
                                        {"g", {{"0", "0"}, {"2", "0"}}}})
      .value();
}

// The chain of global actions over s01(): n points, 0 folds everything to
// the first point, 1 acts as the identity.
inline sgpd::PartialAction fold_action(int n) {
  std::vector<std::string> carrier;
  for (int i = 1; i <= n; ++i) {
    carrier.push_back("x" + std::to_string(i));
  }
  std::vector<sgpd::PointMap> maps(2);
  maps[0].element = "0";
  maps[1].element = "1";
  for (int i = 0; i < n; ++i) {
    maps[0].entries.push_back({carrier[i], carrier[0]});
    maps[1].entries.push_back({carrier[i], carrier[i]});
  }
  return sgpd::PartialAction::validate(s01(), carrier, maps).value();
}

// An action with every domain empty.
inline sgpd::PartialAction empty_action(const sgpd::Semigroupoid& s, int points) {
  std::vector<std::string> carrier;
  for (int i = 0; i < points; ++i) {
    carrier.push_back("x" + std::to_string(i));
  }
  std::vector<std::vector<int>> map(s.size(), std::vector<int>(points, -1));
  return sgpd::PartialAction::validate_indexed(s, carrier, map).value();
}

}  // namespace fixtures

#endif  // SGPD_TESTS_FIXTURES_HPP_
