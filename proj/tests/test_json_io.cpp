#include <doctest.h>

#include "topcube/json_io.hpp"

using namespace topcube;

TEST_CASE("family round trip") {
  const GroundSet u(3);
  const auto f = Family::of(u, std::vector{PointSet::empty(u), PointSet::of(u, {0, 2}), PointSet::full(u)});
  const auto j = to_json(f);
  CHECK(j.at("n") == 3);
  CHECK(j.at("sets") == Json::parse("[[], [0, 2], [0, 1, 2]]"));
  CHECK(family_from_json(j) == f);
}

TEST_CASE("topology marker") {
  const GroundSet u(2);
  CHECK(topology_to_json(Family::trivial(u)).at("topology") == true);
  CHECK_THROWS_AS(topology_to_json(Family::empty(u)), Error);
}

TEST_CASE("malformed family JSON is rejected") {
  CHECK_THROWS_AS(family_from_json(Json::parse(R"({"n": 2, "sets": [[0], [0]]})")), Error);
  CHECK_THROWS_AS(family_from_json(Json::parse(R"({"n": 2, "sets": [[0, 0]]})")), Error);
  CHECK_THROWS_AS(family_from_json(Json::parse(R"({"n": 2, "sets": [[2]]})")), Error);
  CHECK_THROWS_AS(family_from_json(Json::parse(R"({"n": 7, "sets": []})")), Error);
  CHECK_THROWS_AS(family_from_json(Json::parse(R"({"sets": []})")), Error);
  CHECK_THROWS_AS(family_from_json(Json::parse(R"([1, 2])")), Error);
}

TEST_CASE("periodic set round trip") {
  const auto s = PeriodicSet::parse("1", "10");
  const auto j = to_json(s);
  CHECK(j == Json::parse(R"({"pre": "1", "period": "10"})"));
  CHECK(periodic_from_json(j) == s);
  CHECK_THROWS_AS(periodic_from_json(Json::parse(R"({"pre": "1", "period": ""})")), Error);
  CHECK_THROWS_AS(periodic_from_json(Json::parse(R"({"pre": "1", "period": "2"})")), Error);
  CHECK_THROWS_AS(periodic_from_json(Json::parse(R"({"pre": 1, "period": "1"})")), Error);
}

TEST_CASE("family expression round trips") {
  const auto evens = PeriodicSet::evens(), odds = PeriodicSet::odds();
  const std::vector<FamilyExpr> exprs{
      FamilyExpr::listed({evens, odds}),
      FamilyExpr::down_pow(evens),
      FamilyExpr::top_gen({evens, PeriodicSet::singleton(0)}),
      FamilyExpr::lat_gen({evens}),
      FamilyExpr::lat_gen_singletons({PeriodicSet::from(1)}),
      FamilyExpr::union_of(FamilyExpr::down_pow(evens), FamilyExpr::listed({PeriodicSet::naturals()})),
      FamilyExpr::chain_initials(evens, {PeriodicSet::naturals()}),
      FamilyExpr::down_pow_chain(evens, odds),
  };
  for (const auto& e : exprs) {
    const auto j = to_json(e);
    CHECK(family_expr_from_json(j) == e);
  }
  CHECK(to_json(exprs[0]).at("kind") == "Explicit");
  CHECK(to_json(exprs[4]).at("kind") == "LatGenSing");
  CHECK(to_json(exprs[5]).at("kind") == "UnionFam");
}

TEST_CASE("malformed family expressions are rejected") {
  CHECK_THROWS_AS(family_expr_from_json(Json::parse(R"({"kind": "Nope"})")), Error);
  CHECK_THROWS_AS(family_expr_from_json(Json::parse(R"({"kind": "DownPow"})")), Error);
  CHECK_THROWS_AS(family_expr_from_json(Json::parse(
                      R"({"kind": "Explicit", "sets": [{"pre": "", "period": "1"}, {"pre": "1", "period": "1"}]})")),
                  Error);
}
