#include <doctest.h>

#include <random>

#include "convert.hpp"
#include "topcube/topology.hpp"

using namespace topcube;

TEST_CASE("topology counts against the brute-force oracle") {
  const std::uint64_t expected[] = {1, 4, 29, 355};
  for (unsigned n = 1; n <= 4; ++n) {
    const auto oracle_count = oracle::count_topologies(n);
    CHECK(oracle_count == expected[n - 1]);
    CHECK(count_topologies(GroundSet(n)) == oracle_count);
    CHECK(all_topologies(GroundSet(n)).size() == oracle_count);
  }
}

TEST_CASE("is_topology agrees with the oracle family by family") {
  for (unsigned n = 1; n <= 3; ++n) {
    const GroundSet u(n);
    for (const auto& f : enumerate_families(u)) {
      const bool expected = oracle::is_topology(convert::to_fam(f), n);
      CHECK(is_topology(f) == expected);
      CHECK(is_bounded_sublattice(f) == expected);
    }
  }
}

TEST_CASE("bounded sublattices and topologies coincide on three points") {
  std::size_t bounded = 0, tops = 0;
  for (const auto& f : enumerate_families(GroundSet(3))) {
    bounded += is_bounded_sublattice(f);
    tops += is_topology(f);
  }
  CHECK(bounded == tops);
  CHECK(tops == 29);
}

TEST_CASE("a chain topology on three points") {
  const GroundSet u(3);
  const auto f = Family::of(u, std::vector{PointSet::empty(u), PointSet::of(u, {0}), PointSet::of(u, {0, 1}),
                                           PointSet::full(u)});
  CHECK(is_topology(f));
  CHECK(Topology(f).proper_opens().size() == 2);
  CHECK_THROWS_AS(Topology(f.without(PointSet::empty(u))), Error);
}

TEST_CASE("generated topology agrees with the oracle closure") {
  std::mt19937_64 rng(17);
  for (unsigned n = 1; n <= 4; ++n) {
    const GroundSet u(n);
    std::uniform_int_distribution<std::uint32_t> mask(0, u.full_mask());
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<PointSet> sub;
      oracle::Fam osub;
      for (int k = 0; k < 3; ++k) {
        const auto m = mask(rng);
        sub.emplace_back(u, m);
        osub.insert(convert::to_set(m));
      }
      CHECK(convert::to_fam(top_generate(u, sub).family()) == oracle::topology_closure(osub, n));
    }
  }
  CHECK(top_generate(GroundSet(2), {}).family() == Family::trivial(GroundSet(2)));
}

TEST_CASE("atoms and disjointness") {
  const GroundSet u(3);
  const auto atoms = atoms_of(u);
  CHECK(atoms.size() == 6);
  for (std::size_t i = 0; i < atoms.size(); ++i)
    for (std::size_t j = i + 1; j < atoms.size(); ++j) CHECK(are_disjoint(atoms[i], atoms[j]));
  const Topology a(Family::of(u, std::vector{PointSet::empty(u), PointSet::of(u, {0}), PointSet::of(u, {0, 1}),
                                             PointSet::full(u)}));
  const Topology b(Family::of(u, std::vector{PointSet::empty(u), PointSet::of(u, {2}), PointSet::of(u, {1, 2}),
                                             PointSet::full(u)}));
  CHECK(are_disjoint(a, b));
  CHECK_FALSE(are_disjoint(a, Topology(Family::discrete(u))));
  CHECK_THROWS_AS(atoms_of(GroundSet(1)), Error);
}

TEST_CASE("trivial topology injected along a point map") {
  const GroundSet y(1), x(2);
  const Injection i(y, x, {1});
  CHECK(inject_topology(Topology(Family::trivial(y)), i).family() == Family::discrete(x));
  CHECK_THROWS_AS(Injection(GroundSet(2), GroundSet(3), {1, 1}), Error);
  CHECK_THROWS_AS(Injection(GroundSet(2), GroundSet(3), {0, 3}), Error);
}

TEST_CASE("injected topologies follow the defining formula") {
  const GroundSet y(2), x(3);
  const Injection i(y, x, {2, 0});
  for (const auto& rho : all_topologies(y)) {
    const auto img = inject_topology(rho, i);
    for (std::uint32_t a = 0; a <= x.full_mask(); ++a) {
      std::uint32_t pre = 0;
      if (a & (1u << 2)) pre |= 1u;
      if (a & (1u << 0)) pre |= 2u;
      const bool expected = a == x.full_mask() || rho.family().contains_mask(pre);
      CHECK(img.family().contains_mask(a) == expected);
    }
  }
}

TEST_CASE("distinct topologies have distinct images") {
  const GroundSet y(3), x(4);
  const auto tops = all_topologies(y);
  const auto i = Injection(y, x, {3, 1, 0});
  std::set<std::uint64_t> images;
  for (const auto& t : tops) images.insert(inject_topology(t, i).family().word());
  CHECK(images.size() == tops.size());
}
