#include <doctest.h>

#include <fstream>

#include "convert.hpp"
#include "topcube/ultrafilter.hpp"

using namespace topcube;

TEST_CASE("ultrafilters are exactly the principal filters") {
  for (unsigned n = 1; n <= 3; ++n) {
    const GroundSet u(n);
    std::size_t count = 0;
    for (const auto& f : enumerate_families(u)) {
      const auto of = convert::to_fam(f);
      bool principal = false;
      for (unsigned p = 0; p < n; ++p) principal = principal || of == oracle::principal_ultrafilter(n, p);
      CHECK(is_ultrafilter(f) == principal);
      count += principal;
    }
    CHECK(count == n);
  }
  for (const auto& f : all_ultrafilters(GroundSet(4)))
    CHECK(convert::to_fam(f.members()) == oracle::principal_ultrafilter(4, f.point()));
}

TEST_CASE("type of a point on three points") {
  const auto t = type_of(GroundSet(3), 0);
  REQUIRE(t.size() == 2);
  CHECK(t[0].point() == 1);
  CHECK(t[1].point() == 2);
}

TEST_CASE("trace of the ultrafilter at 1 away from {0}") {
  const GroundSet u(3);
  const auto tr = trace(PrincipalUltrafilter(u, 1), PointSet::of(u, {0}));
  CHECK(tr.family.universe().size() == 2);
  CHECK(tr.reindex.kept == std::vector<unsigned>{1, 2});
  // Point 1 becomes label 0 on {1, 2}.
  CHECK(tr.family == PrincipalUltrafilter(GroundSet(2), 0).members());
  CHECK(is_ultrafilter(tr.family));
  CHECK_THROWS_AS(trace(PrincipalUltrafilter(u, 0), PointSet::of(u, {0})), Error);
}

TEST_CASE("trace kept in place") {
  const GroundSet u(3);
  const auto in_place = trace_in_place(PrincipalUltrafilter(u, 1).members(), PointSet::of(u, {0}));
  oracle::Fam expected;
  for (const auto& s : oracle::principal_ultrafilter(3, 1)) {
    auto t = s;
    t.erase(0);
    expected.insert(t);
  }
  CHECK(convert::to_fam(in_place) == expected);
}

TEST_CASE("extending a trace back") {
  const GroundSet u(3), small(2);
  const auto h = PrincipalUltrafilter(small, 0);  // the point 1 of {1, 2}
  CHECK(extend_trace(h, u, 0) == PrincipalUltrafilter(u, 1));
}

TEST_CASE("an ultratopology on three points") {
  const GroundSet u(3);
  const Ultratopology t(0, PrincipalUltrafilter(u, 1));
  const auto expected = Family::of(u, std::vector{PointSet::empty(u), PointSet::of(u, {1}), PointSet::of(u, {2}),
                                                  PointSet::of(u, {1, 2}), PointSet::of(u, {0, 1}),
                                                  PointSet::full(u)});
  CHECK(t.family() == expected);
  CHECK(is_topology(t.family()));
  CHECK_THROWS_AS(Ultratopology(0, PrincipalUltrafilter(u, 0)), Error);
}

TEST_CASE("ultratopologies against the defining formula") {
  for (unsigned n = 2; n <= 4; ++n) {
    const GroundSet u(n);
    const auto all = all_ultratopologies(u);
    CHECK(all.size() == n * (n - 1));
    for (const auto& t : all) {
      oracle::Fam expected = oracle::principal_ultrafilter(n, t.ultrafilter().point());
      for (const auto& s : oracle::subsets(n))
        if (!s.contains(t.excluded())) expected.insert(s);
      CHECK(convert::to_fam(t.family()) == expected);
    }
  }
}

TEST_CASE("trace reconstruction and bijection for every point, n <= 5") {
  for (unsigned n = 2; n <= 5; ++n)
    for (unsigned x = 0; x < n; ++x) {
      const auto r = verify_trace_reconstruction(GroundSet(n), x);
      CHECK(r.passed());
      CHECK(r.witness().at("ultrafilters_checked") == n - 1);
      CHECK(verify_trace_bijection(GroundSet(n), x).passed());
    }
}

TEST_CASE("subbase correspondence for every point, n <= 4") {
  for (unsigned n = 2; n <= 4; ++n)
    for (unsigned x = 0; x < n; ++x) CHECK(verify_subbase_correspondence(GroundSet(n), x).passed());
}

TEST_CASE("subbase correspondence table matches the golden file") {
  std::ifstream in(TOPCUBE_GOLDEN_DIR "/thm63_n3_x0.json");
  REQUIRE(in);
  const Json golden = Json::parse(in);
  const auto r = verify_subbase_correspondence(GroundSet(3), 0);
  CHECK(r.data().at("table") == golden);
}

TEST_CASE("the TYPE[x] cells partition Ult(X)") {
  const auto r3 = ultratopology_cover(GroundSet(3));
  CHECK(r3.passed());
  CHECK(r3.witness().at("ultratopologies") == 6);
  CHECK(r3.data().at("cell_sizes") == Json::parse("[2, 2, 2]"));
  const auto r4 = ultratopology_cover(GroundSet(4));
  CHECK(r4.passed());
  CHECK(r4.witness().at("ultratopologies") == 12);
  CHECK(r4.data().at("cell_sizes") == Json::parse("[3, 3, 3, 3]"));
  CHECK_THROWS_AS(ultratopology_cover(GroundSet(2)), Error);
}
