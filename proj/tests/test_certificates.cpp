#include <doctest.h>

#include <random>

#include "convert.hpp"
#include "topcube/certificates.hpp"
#include "topcube/json_io.hpp"
#include "topcube/scenarios.hpp"
#include "topcube/workbench.hpp"

using namespace topcube;

namespace {

std::set<oracle::Fam> members_of(const Report& r) {
  std::set<oracle::Fam> out;
  for (const auto& f : r.data().at("member_list")) out.insert(convert::to_fam(family_from_json(f)));
  return out;
}

// Families with ∅ and X, no other set outside A, and at most one set of A.
std::set<oracle::Fam> atom_closed_set_oracle(unsigned n, const std::set<oracle::Set>& a) {
  std::set<oracle::Fam> out;
  const auto x = oracle::ground(n);
  oracle::for_each_family(n, [&](const oracle::Fam& f) {
    if (!f.contains(oracle::Set{}) || !f.contains(x)) return;
    std::size_t from_a = 0;
    for (const auto& s : f) {
      if (s.empty() || s == x) continue;
      if (!a.contains(s)) return;
      ++from_a;
    }
    if (from_a <= 1) out.insert(f);
  });
  return out;
}

// Families F with ∅, X ∈ F and F ⊆ some t, or F = I.
std::set<oracle::Fam> disjoint_closed_set_oracle(unsigned n, const std::vector<oracle::Fam>& ts) {
  std::set<oracle::Fam> out;
  const auto x = oracle::ground(n);
  out.insert(oracle::Fam{oracle::Set{}, x});
  for (const auto& t : ts) out.insert(t);
  return out;
}

}  // namespace

TEST_CASE("basic open sets") {
  const GroundSet u(2);
  const BasicOpen b({plus(PointSet::of(u, {0})), minus(PointSet::of(u, {1}))});
  const auto f = Family::of(u, std::vector{PointSet::empty(u), PointSet::of(u, {0}), PointSet::full(u)});
  CHECK(b.contains(f));
  CHECK_FALSE(b.contains(Family::discrete(u)));
  CHECK_THROWS_AS(BasicOpen({plus(PointSet::of(u, {0})), minus(PointSet::of(u, {0}))}), Error);
}

TEST_CASE("interval identities on all topologies of two points") {
  const GroundSet u(2);
  std::vector<Family> tops;
  for (const auto& t : all_topologies(u)) tops.push_back(t.family());
  const FiniteSublattice p(u, tops);
  const auto r = interval_identity_check(p, Family::trivial(u));
  CHECK(r.passed());
  CHECK(r.witness().at("up_size") == 4);
  for (const auto& x : p.elements()) CHECK(interval_identity_check(p, x).passed());
  CHECK(interval_identities_hold(p));
  CHECK_THROWS_AS(interval_identity_check(p, Family::empty(u)), Error);
}

TEST_CASE("interval identities on a three-element chain") {
  const GroundSet u(2);
  const auto mid = Family::of(u, std::vector{PointSet::empty(u), PointSet::of(u, {1}), PointSet::full(u)});
  const FiniteSublattice p(u, {Family::trivial(u), mid, Family::discrete(u)});
  const auto r = interval_identity_check(p, mid);
  CHECK(r.passed());
  CHECK(r.witness().at("up_size") == 2);
  CHECK(r.witness().at("down_size") == 2);
}

TEST_CASE("atom certificate on all six proper subsets of three points") {
  const GroundSet u(3);
  std::vector<PointSet> a;
  for (const auto& s : all_point_sets(u))
    if (!s.is_empty() && !s.is_full()) a.push_back(s);
  const auto r = atom_closure_certificate(u, a);
  CHECK(r.passed());
  CHECK(r.witness().at("members") == 7);
  CHECK(r.data().at("sweep_size") == 256);
}

TEST_CASE("atom certificate on {0}, {1}") {
  const GroundSet u2(2);
  const std::vector<PointSet> a2{PointSet::of(u2, {0}), PointSet::of(u2, {1})};
  const auto r2 = atom_closure_certificate(u2, a2);
  CHECK(r2.passed());
  const std::set<oracle::Fam> expected{
      {{}, {0, 1}}, {{}, {0}, {0, 1}}, {{}, {1}, {0, 1}}};
  CHECK(members_of(r2) == expected);

  const GroundSet u3(3);
  const std::vector<PointSet> a3{PointSet::of(u3, {0}), PointSet::of(u3, {1})};
  const auto r3 = atom_closure_certificate(u3, a3);
  CHECK(r3.passed());
  CHECK(r3.witness().at("members") == 3);
  for (const auto& f : members_of(r3)) CHECK_FALSE(f.contains(oracle::Set{2}));
}

TEST_CASE("atom certificate matches the oracle closed set for every collection on three points") {
  const GroundSet u(3);
  std::vector<PointSet> proper;
  for (const auto& s : all_point_sets(u))
    if (!s.is_empty() && !s.is_full()) proper.push_back(s);
  std::size_t collections = 0;
  for (std::uint32_t pick = 0; pick < 64; ++pick) {
    if (std::popcount(pick) < 2) continue;
    std::vector<PointSet> a;
    std::set<oracle::Set> oa;
    for (std::size_t i = 0; i < proper.size(); ++i)
      if (pick & (1u << i)) {
        a.push_back(proper[i]);
        oa.insert(convert::to_set(proper[i].mask()));
      }
    const auto r = atom_closure_certificate(u, a);
    CHECK(r.passed());
    CHECK(members_of(r) == atom_closed_set_oracle(3, oa));
    ++collections;
  }
  CHECK(collections == 57);
}

TEST_CASE("atom certificate input validation") {
  const GroundSet u(2);
  CHECK_THROWS_AS(atom_closure_certificate(u, std::vector{PointSet::of(u, {0})}), Error);
  CHECK_THROWS_AS(atom_closure_certificate(u, std::vector{PointSet::of(u, {0}), PointSet::full(u)}), Error);
  CHECK_THROWS_AS(atom_closure_certificate(GroundSet(5), std::vector{PointSet::of(GroundSet(5), {0}),
                                                                     PointSet::of(GroundSet(5), {1})}),
                  Error);
}

TEST_CASE("disjoint certificate examples") {
  const GroundSet u(3);
  std::vector<Topology> singles;
  for (unsigned i = 0; i < 3; ++i)
    singles.emplace_back(Family::of(u, std::vector{PointSet::empty(u), PointSet::singleton(u, i), PointSet::full(u)}));
  const auto r1 = disjoint_closure_certificate(u, singles);
  CHECK(r1.passed());
  CHECK(r1.witness().at("members") == 4);

  const std::vector<Topology> pair{
      Topology(Family::of(u, std::vector{PointSet::empty(u), PointSet::of(u, {0}), PointSet::of(u, {0, 1}), PointSet::full(u)})),
      Topology(Family::of(u, std::vector{PointSet::empty(u), PointSet::of(u, {2}), PointSet::of(u, {1, 2}), PointSet::full(u)}))};
  const auto r2 = disjoint_closure_certificate(u, pair);
  CHECK(r2.passed());
  std::vector<oracle::Fam> ot;
  for (const auto& t : pair) ot.push_back(convert::to_fam(t.family()));
  CHECK(members_of(r2) == disjoint_closed_set_oracle(3, ot));

  const GroundSet u2(2);
  const auto r3 = disjoint_closure_certificate(u2, atoms_of(u2));
  CHECK(r3.passed());
  CHECK(r3.witness().at("members") == 3);
}

TEST_CASE("disjoint certificate rejects overlapping topologies") {
  const GroundSet u(2);
  const std::vector<Topology> same{Topology(Family::discrete(u)), atoms_of(u)[0]};
  CHECK_THROWS_AS(disjoint_closure_certificate(u, same), Error);
  CHECK_THROWS_AS(disjoint_closure_certificate(u, std::vector{Topology(Family::trivial(u))}), Error);
}

TEST_CASE("disjoint certificate on seeded random collections") {
  for (unsigned n = 2; n <= 3; ++n) {
    const GroundSet u(n);
    std::mt19937_64 rng(n);
    for (int trial = 0; trial < 30; ++trial) {
      const auto ts = random_disjoint_collection(u, rng);
      REQUIRE_FALSE(ts.empty());
      const auto r = disjoint_closure_certificate(u, ts);
      CHECK(r.passed());
      std::vector<oracle::Fam> ot;
      for (const auto& t : ts) ot.push_back(convert::to_fam(t.family()));
      CHECK(members_of(r) == disjoint_closed_set_oracle(n, ot));
    }
  }
}

TEST_CASE("the initial segment limit is a limit point of its chain") {
  const auto evens = PeriodicSet::evens();
  const auto chain = scenarios::initial_segment_chain(evens);
  const auto limit = scenarios::initial_segment_limit(evens);
  const std::vector<PeriodicSet> coords{scenarios::initial_segment(evens, 3), PeriodicSet::odds(),
                                        PeriodicSet::naturals()};
  const auto r = is_limit_point_sampled(limit, chain.stages, coords, 64);
  CHECK(r.passed());
  CHECK(r.witness().at("neighbourhoods") == 8);
}

TEST_CASE("the growing power set union is a limit point of its chain") {
  const auto evens = PeriodicSet::evens(), odds = PeriodicSet::odds();
  const auto chain = scenarios::growing_powerset_chain(evens, odds);
  const std::vector<PeriodicSet> coords{evens, odds, PeriodicSet::singleton(1), PeriodicSet::finite({1, 3})};
  CHECK(is_limit_point_sampled(chain.union_expr, chain.stages, coords, 64).passed());
}

TEST_CASE("a constant sequence has no limit point other than its value") {
  const auto e = FamilyExpr::down_pow(PeriodicSet::evens());
  const auto seq = scenarios::constant_sequence(e);
  const std::vector<PeriodicSet> coords{PeriodicSet::evens()};
  CHECK(is_limit_point_sampled(e, seq, coords, 8).verdict() == Verdict::fail);
  // odds⁺ is a neighbourhood of P(ℕ) that the sequence never enters.
  const auto other = FamilyExpr::down_pow(PeriodicSet::naturals());
  const std::vector<PeriodicSet> two{PeriodicSet::evens(), PeriodicSet::odds()};
  CHECK(is_limit_point_sampled(other, seq, two, 8).verdict() == Verdict::fail);
  // With evens alone every sampled neighbourhood of P(ℕ) holds the sequence.
  CHECK(is_limit_point_sampled(other, seq, coords, 8).passed());
  CHECK(sequence_convergence_check(seq, e, coords, 8).passed());
}

TEST_CASE("convergence of the initial segment chain") {
  const auto evens = PeriodicSet::evens();
  const auto chain = scenarios::initial_segment_chain(evens);
  const auto limit = scenarios::initial_segment_limit(evens);
  const std::vector<PeriodicSet> coords{scenarios::initial_segment(evens, 0), scenarios::initial_segment(evens, 5),
                                        PeriodicSet::odds()};
  const auto r = sequence_convergence_check(chain.stages, limit, coords, 64);
  CHECK(r.passed());
  CHECK(r.data().at("coords")[1].at("settled_from") == 5);
  // C itself is in the limit but in no stage.
  const std::vector<PeriodicSet> c{evens};
  CHECK(sequence_convergence_check(chain.stages, limit, c, 64).verdict() == Verdict::inconclusive);
}

TEST_CASE("nested finite power sets converge to a union that is not a topology") {
  const auto nat = PeriodicSet::naturals();
  const auto chain = scenarios::growing_powerset_chain(PeriodicSet::empty(), nat, 1);
  const std::vector<PeriodicSet> coords{PeriodicSet::singleton(0), PeriodicSet::finite({0, 4}),
                                        PeriodicSet::evens(), nat};
  CHECK(sequence_convergence_check(chain.stages, chain.union_expr, coords, 64).passed());
  const TopologyProbe probe{{}, {PeriodicSet::evens()}};
  for (std::size_t m = 0; m < 10; ++m) CHECK(check_topology_symbolic(chain.stages(m), probe).passed());
  const auto r = check_topology_symbolic(chain.union_expr, probe);
  CHECK(r.verdict() == Verdict::fail);
  CHECK(r.witness().at("missing") == to_json(PeriodicSet::evens()));
}

TEST_CASE("order map of omega+1 onto the chain") {
  const auto evens = PeriodicSet::evens();
  const auto chain = scenarios::initial_segment_chain(evens);
  const std::vector<PeriodicSet> coords{evens, scenarios::initial_segment(evens, 3), PeriodicSet::odds()};
  CHECK(ordinal_homeo_check(chain, chain.union_expr, coords, 64).passed());
  const auto r = ordinal_homeo_check(chain, scenarios::initial_segment_limit(evens), coords, 64);
  CHECK(r.verdict() == Verdict::fail);
  CHECK(r.witness().at("coord") == to_json(evens));
  const GroundSet u(2);
  CHECK(ordinal_homeo_check(std::vector{Family::trivial(u), Family::discrete(u)}).passed());
  CHECK_THROWS_AS(ordinal_homeo_check(std::vector{atoms_of(u)[0].family(), atoms_of(u)[1].family()}), Error);
}

TEST_CASE("separating coordinates") {
  const auto a = FamilyExpr::down_pow(PeriodicSet::evens());
  const auto b = FamilyExpr::down_pow(PeriodicSet::odds());
  const auto s = separating_coordinate(a, b, {}, 4);
  REQUIRE(s.has_value());
  CHECK(a.contains(*s) != b.contains(*s));
  CHECK_FALSE(separating_coordinate(a, a, {}, 4).has_value());
}
