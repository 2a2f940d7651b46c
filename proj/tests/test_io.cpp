#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "fixtures.hpp"
#include "sgpd/io.hpp"
#include "sgpd/oracle.hpp"

using namespace sgpd;

namespace {

const char* kNmText =
    "semigroupoid\n"
    "elements: s1 s2 t1 t2 0\n"
    "compose: s1 t1 -> 0\n"
    "compose: s1 t2 -> 0\n"
    "compose: s2 t2 -> 0\n";

const char* kNmActionText =
    "action\n"
    "set: 1 2 3 4\n"
    "dom s1: 1 2\n"
    "map s1: 1->2 2->3\n"
    "dom s2: 1\n"
    "map s2: 1->2\n"
    "dom t1: 2\n"
    "map t1: 2->1\n"
    "dom t2: 1 3\n"
    "map t2: 1->1 3->3\n"
    "dom 0: 1 2\n"
    "map 0: 1->2 2->2\n";

}  // namespace

TEST_CASE("parsing the structure document") {
  auto s = parse_semigroupoid(kNmText);
  REQUIRE(s.ok());
  CHECK(s.value() == fixtures::nm());
}

TEST_CASE("parsing a one-line loop") {
  auto s = parse_semigroupoid("semigroupoid\nelements: e\ncompose: e e -> e\n");
  REQUIRE(s.ok());
  CHECK(s.value().size() == 1);
}

TEST_CASE("comments and blank lines are ignored") {
  auto s = parse_semigroupoid("# header comment\nsemigroupoid\n\nelements: e  # trailing\n");
  REQUIRE(s.ok());
  CHECK(s.value().size() == 1);
}

TEST_CASE("a missing arrow is a syntax error with a position") {
  try {
    parse_semigroupoid("semigroupoid\nelements: a\ncompose: a a a\n");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.line == 3);
  }
}

TEST_CASE("parsing the action document against its structure") {
  auto act = parse_action(kNmActionText, fixtures::nm());
  REQUIRE(act.ok());
  CHECK(act.value() == fixtures::nm_action());
}

TEST_CASE("an empty carrier parses") {
  auto act = parse_action("action\nset:\n", fixtures::nm());
  REQUIRE(act.ok());
  CHECK(act.value().carrier_size() == 0);
}

TEST_CASE("a map value outside the carrier names the point") {
  auto act = parse_action("action\nset: 1 2\nmap s1: 1->5\n", fixtures::nm());
  REQUIRE_FALSE(act.ok());
  CHECK(act.violation().detail.find("5") != std::string::npos);
}

TEST_CASE("dom and map lines must agree") {
  auto act = parse_action("action\nset: 1 2\ndom s1: 1 2\nmap s1: 1->1\n", fixtures::nm());
  REQUIRE_FALSE(act.ok());
  CHECK(act.violation().detail.find("s1") != std::string::npos);
}

TEST_CASE("documents can pair a structure with an action") {
  std::string text = std::string(kNmText) + "\n" + kNmActionText;
  auto doc = parse_document(text);
  REQUIRE(doc.ok());
  REQUIRE(doc.value().action.has_value());
  CHECK(*doc.value().action == fixtures::nm_action());
}

TEST_CASE("round trips through the serializer") {
  CHECK(parse_semigroupoid(serialize(fixtures::nm())).value() == fixtures::nm());
  CHECK(parse_semigroupoid(serialize(fixtures::stst())).value() == fixtures::stst());

  for (const PartialAction& act :
       {fixtures::nm_action(), fixtures::ef_global(), fixtures::ef_restricted(),
        fixtures::fold_action(3), fixtures::empty_action(fixtures::s01(), 2)}) {
    auto doc = parse_document(serialize(act));
    REQUIRE(doc.ok());
    REQUIRE(doc.value().action.has_value());
    CHECK(*doc.value().action == act);
  }

  // fuzz the round trip over everything enumerable at order two
  for (const Semigroupoid& s : enumerate_semigroupoids(2)) {
    CHECK(parse_semigroupoid(serialize(s)).value() == s);
    for (const PartialAction& act : enumerate_partial_actions(s, 2)) {
      auto doc = parse_document(serialize(act));
      REQUIRE(doc.ok());
      CHECK(*doc.value().action == act);
    }
  }
}

TEST_CASE("serialization is deterministic") {
  std::string first = serialize(globalize(fixtures::nm_action()));
  std::string second = serialize(globalize(fixtures::nm_action()));
  CHECK(first == second);
  CHECK(serialize(fixtures::nm()) == serialize(fixtures::nm()));
}

TEST_CASE("the globalization report of the fixture action") {
  std::string report = serialize(globalize(fixtures::nm_action()));
  CHECK(report ==
        "globalization\n"
        "set: 1 2 3 4\n"
        "classes: 8\n"
        "class [δ,1]: (δ,1) (t1,2) (t2,1)\n"
        "class [δ,2]: (δ,2) (s1,1) (s2,1) (0,1) (0,2)\n"
        "class [δ,3]: (δ,3) (s1,2) (t2,3)\n"
        "class [δ,4]: (δ,4)\n"
        "class [s1,3]: (s1,3) (s2,3) (0,3)\n"
        "class [t1,1]: (t1,1)\n"
        "class [t1,3]: (t1,3)\n"
        "class [t2,2]: (t2,2)\n"
        "dom s1: [δ,1] [δ,2] [δ,3] [t1,1] [t1,3] [t2,2]\n"
        "map s1: [δ,1]->[δ,2] [δ,2]->[δ,3] [δ,3]->[s1,3] [t1,1]->[δ,2] [t1,3]->[s1,3]"
        " [t2,2]->[δ,2]\n"
        "dom s2: [δ,1] [δ,3] [t2,2]\n"
        "map s2: [δ,1]->[δ,2] [δ,3]->[s1,3] [t2,2]->[δ,2]\n"
        "dom t1: [δ,1] [δ,2] [δ,3]\n"
        "map t1: [δ,1]->[t1,1] [δ,2]->[δ,1] [δ,3]->[t1,3]\n"
        "dom t2: [δ,1] [δ,2] [δ,3]\n"
        "map t2: [δ,1]->[δ,1] [δ,2]->[t2,2] [δ,3]->[δ,3]\n"
        "dom 0: [δ,1] [δ,2] [δ,3]\n"
        "map 0: [δ,1]->[δ,2] [δ,2]->[δ,2] [δ,3]->[s1,3]\n"
        "delta: 1->[δ,1] 2->[δ,2] 3->[δ,3] 4->[δ,4]\n"
        "nondegenerate-part: [δ,1] [δ,2] [δ,3] [s1,3] [t1,1] [t1,3] [t2,2]\n"
        "degenerate-part: [δ,4]\n");
}

TEST_CASE("the report of an action with empty domains is all singletons") {
  PartialAction empty = fixtures::empty_action(fixtures::nm(), 3);
  Globalization g = globalize(empty);
  std::string report = serialize(g);
  CHECK(g.class_count() == 3);
  CHECK(report.find("class [δ,x0]: (δ,x0)\n") != std::string::npos);
}

TEST_CASE("the report of a globalized global action shows a bijective embedding") {
  Globalization g = globalize(left_regular(fixtures::nm()));
  CHECK(g.class_count() == 5);
  CHECK(g.embedding().status == MorphismLevel::isomorphism);
  std::string report = serialize(g);
  CHECK(report.find("delta: s1->[δ,s1] s2->[δ,s2] t1->[δ,t1] t2->[δ,t2] 0->[δ,0]\n") !=
        std::string::npos);
}

TEST_CASE("DOT rendering of structures") {
  std::string dot = to_dot(fixtures::stst());
  CHECK(dot ==
        "digraph {\n"
        "  \"s\";\n"
        "  \"t\";\n"
        "  \"st\";\n"
        "  \"s\" -> \"st\" [label=\"t\"];\n"
        "}\n");
  CHECK(to_dot(Semigroupoid::validate_indexed({}, {}).value()) == "digraph { }\n");
}

TEST_CASE("DOT rendering of a globalization") {
  std::string dot = to_dot(globalize(fixtures::nm_action()));
  CHECK(dot.find("\"[t1,3]\" -> \"[s1,3]\" [label=\"s1\"];") != std::string::npos);
  CHECK(dot.find("\"[δ,4]\"") != std::string::npos);
}

TEST_CASE("an action document can reference its structure through over:") {
  std::string dir = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp");
  std::string path = dir + "/sgpd_over_ref.sgpd";
  {
    std::ofstream out(path);
    out << serialize(fixtures::nm());
  }
  std::string doc = "action\nover: " + path + "\nset: 1 2\ndom t1: 2\nmap t1: 2->1\n";
  auto parsed = parse_document(doc, dir);
  REQUIRE(parsed.ok());
  REQUIRE(parsed.value().action.has_value());
  CHECK(parsed.value().action->structure() == fixtures::nm());
  std::remove(path.c_str());
}

TEST_CASE("map entries may be split across lines") {
  auto act = parse_action(
      "action\nset: 1 2 3\ndom t2: 1 3\nmap t2: 1->1\nmap t2: 3->3\n", fixtures::nm());
  REQUIRE(act.ok());
  int t2 = act.value().structure().index("t2");
  CHECK(act.value().domain(t2) == sgpd::sets::Set{0, 2});
}
