#include <doctest.h>

#include <random>

#include "convert.hpp"
#include "topcube/lattice.hpp"
#include "topcube/json_io.hpp"
#include "topcube/scenarios.hpp"
#include "topcube/topology.hpp"

using namespace topcube;

namespace {

Family fam(GroundSet u, std::initializer_list<std::initializer_list<unsigned>> sets) {
  std::vector<PointSet> ps;
  for (auto s : sets) ps.push_back(PointSet::of(u, s));
  return Family::of(u, ps);
}

}  // namespace

TEST_CASE("relation set of {∅-only} and the trivial topology") {
  const GroundSet u(2);
  const std::vector<Family> s{fam(u, {{}}), Family::trivial(u)};
  const auto r = relations_set(u, s);
  std::set<std::uint64_t> got;
  for (const auto& f : r) got.insert(f.word());
  const std::set<std::uint64_t> expected{
      Family::empty(u).word(),
      fam(u, {{}}).word(),
      Family::trivial(u).word(),
      fam(u, {{}, {0}, {0, 1}}).word(),
      fam(u, {{}, {1}, {0, 1}}).word(),
      Family::discrete(u).word(),
  };
  CHECK(got == expected);
}

TEST_CASE("relation sets agree with a direct comparability filter") {
  const GroundSet u(2);
  const std::vector<Family> s{fam(u, {{}, {0}, {0, 1}}), fam(u, {{}, {1}, {0, 1}})};
  const auto r = relations_set(u, s);
  std::vector<Family> expected;
  for (std::uint64_t w = 0; w < 16; ++w) {
    const auto fw = convert::to_fam(Family(u, w));
    bool ok = true;
    for (const auto& b : s) {
      const auto fb = convert::to_fam(b);
      ok = ok && (oracle::fam_leq(fw, fb) || oracle::fam_leq(fb, fw));
    }
    if (ok) expected.emplace_back(u, w);
  }
  CHECK(r == expected);
  CHECK(std::find(r.begin(), r.end(), Family::trivial(u)) != r.end());
  CHECK(std::find(r.begin(), r.end(), Family::discrete(u)) != r.end());
}

TEST_CASE("generated sublattices agree with the oracle closure") {
  std::mt19937_64 rng(23);
  for (unsigned n = 1; n <= 3; ++n) {
    const GroundSet u(n);
    std::uniform_int_distribution<std::uint64_t> word(0, u.family_count() - 1);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<Family> gens{Family(u, word(rng)), Family(u, word(rng)), Family(u, word(rng))};
      std::set<oracle::Fam> seed;
      for (const auto& g : gens) seed.insert(convert::to_fam(g));
      const auto expected = oracle::lattice_closure(seed);
      const auto p = lat_generate(u, gens);
      std::set<oracle::Fam> got;
      for (const auto& f : p.elements()) got.insert(convert::to_fam(f));
      CHECK(got == expected);
      CHECK(is_complete_sublattice(p));
    }
  }
}

TEST_CASE("generated set lattices agree with the oracle closure") {
  std::mt19937_64 rng(29);
  const GroundSet u(4);
  std::uniform_int_distribution<std::uint32_t> mask(0, 15);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<PointSet> gens{PointSet(u, mask(rng)), PointSet(u, mask(rng))};
    oracle::Fam seed;
    for (const auto& g : gens) seed.insert(convert::to_set(g.mask()));
    CHECK(convert::to_fam(lat_generate_sets(u, gens)) == oracle::set_lattice_closure(seed));
  }
}

TEST_CASE("sublattice validation") {
  const GroundSet u(2);
  CHECK_THROWS_AS(FiniteSublattice(u, {}), Error);
  CHECK_THROWS_AS(FiniteSublattice(u, {fam(u, {{}, {0}, {0, 1}}), fam(u, {{}, {1}, {0, 1}})}), Error);
  CHECK_THROWS_AS(lat_generate(u, {}), Error);
}

TEST_CASE("completeness of family sets") {
  const GroundSet u(2);
  const std::vector<Family> atoms{fam(u, {{}, {0}, {0, 1}}), fam(u, {{}, {1}, {0, 1}})};
  CHECK_FALSE(is_complete_family_set(atoms));
  CHECK_FALSE(is_join_complete_family_set(atoms));
  const auto p = lat_generate(u, atoms);
  CHECK(p.size() == 4);
  CHECK(is_complete_family_set(p.elements()));
  CHECK(is_chain(std::vector{Family::trivial(u), Family::discrete(u)}));
  CHECK_FALSE(is_chain(atoms));
}

TEST_CASE("finite chain completion returns the chain") {
  const GroundSet u(2);
  const std::vector<Family> chain{Family::trivial(u), Family::discrete(u)};
  CHECK(chain_completion_finite(u, chain) == chain);
  const std::vector<Family> longer{fam(u, {{}}), Family::trivial(u), fam(u, {{}, {1}, {0, 1}}), Family::discrete(u)};
  CHECK(chain_completion_finite(u, longer) == longer);
  CHECK_THROWS_AS(chain_completion_finite(u, std::vector<Family>{fam(u, {{0}}), fam(u, {{1}})}), Error);
}

TEST_CASE("omega completion of the initial segment chain") {
  const auto evens = PeriodicSet::evens();
  const auto chain = scenarios::initial_segment_chain(evens);
  const auto c5 = scenarios::initial_segment(evens, 5);
  const std::vector<PeriodicSet> coords{c5, PeriodicSet::odds(), PeriodicSet::naturals()};
  const auto r = chain_completion_omega(chain, coords, 64);
  CHECK(r.passed());
  CHECK(r.witness().at("union") == to_json(FamilyExpr::chain_initials(evens, {PeriodicSet::empty(), PeriodicSet::naturals()})));
  const auto& rows = r.data().at("coords");
  CHECK(rows[0].at("stable_true_from") == 5);
  CHECK(rows[0].at("limit") == true);
  CHECK(rows[1].at("limit") == false);
  CHECK_FALSE(rows[1].contains("stable_true_from"));
  CHECK(rows[2].at("stable_true_from") == 0);
}

TEST_CASE("omega completion of the growing power set chain") {
  const auto evens = PeriodicSet::evens(), odds = PeriodicSet::odds();
  const auto chain = scenarios::growing_powerset_chain(evens, odds);
  const std::vector<PeriodicSet> coords{evens, odds, PeriodicSet::singleton(1)};
  const auto r = chain_completion_omega(chain, coords, 64);
  CHECK(r.passed());
  const auto& rows = r.data().at("coords");
  CHECK(rows[0].at("stable_true_from") == 0);
  CHECK(rows[1].at("limit") == false);
  CHECK_FALSE(rows[1].contains("stable_true_from"));
  CHECK(rows[2].at("stable_true_from") == 1);
}

TEST_CASE("omega completion reports a non-monotone chain and a short bound") {
  FamilySequence flip{"flip",
                      [](std::size_t m) {
                        return FamilyExpr::listed({m % 2 ? PeriodicSet::evens() : PeriodicSet::odds()});
                      },
                      true, {}};
  OmegaChain bad{flip, FamilyExpr::listed({PeriodicSet::evens()})};
  const std::vector<PeriodicSet> coords{PeriodicSet::odds()};
  CHECK_THROWS_AS(chain_completion_omega(bad, coords, 8), Error);

  const auto late = scenarios::initial_segment_chain(PeriodicSet::evens());
  const std::vector<PeriodicSet> far{scenarios::initial_segment(PeriodicSet::evens(), 40)};
  CHECK(chain_completion_omega(late, far, 10).verdict() == Verdict::inconclusive);

  OmegaChain wrong{late.stages, FamilyExpr::listed({PeriodicSet::naturals()})};
  const std::vector<PeriodicSet> c0{scenarios::initial_segment(PeriodicSet::evens(), 0)};
  CHECK(chain_completion_omega(wrong, c0, 10).verdict() == Verdict::fail);
}

TEST_CASE("join completeness witnesses") {
  const auto nat = PeriodicSet::naturals();
  const auto r = join_completeness_witness({nat.without(0), nat.without(1)}, PeriodicSet::evens());
  CHECK(r.passed());
  CHECK(r.witness().at("candidate_in_lattice") == false);
  CHECK(join_completeness_witness({PeriodicSet::evens()}, PeriodicSet::odds()).passed());
  CHECK(join_completeness_witness({PeriodicSet::evens()}, PeriodicSet::evens()).verdict() == Verdict::fail);
  CHECK_THROWS_AS(join_completeness_witness({PeriodicSet::evens()}, PeriodicSet::finite({1, 3})), Error);
}
