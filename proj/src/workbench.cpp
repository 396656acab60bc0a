#include "topcube/workbench.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "topcube/certificates.hpp"
#include "topcube/json_io.hpp"
#include "topcube/lattice.hpp"
#include "topcube/scenarios.hpp"
#include "topcube/ultrafilter.hpp"

namespace topcube {

namespace {

unsigned require_n(const CommandOptions& o, unsigned fallback, unsigned lo, unsigned hi) {
  const unsigned n = o.n.value_or(fallback);
  if (n < lo || n > hi)
    throw Error("--n must be in " + std::to_string(lo) + ".." + std::to_string(hi) + ", got " +
                std::to_string(n));
  return n;
}

std::vector<unsigned> points_to_check(const CommandOptions& o, GroundSet u) {
  if (o.x) {
    if (*o.x >= u.size()) throw Error("--x out of range");
    return {*o.x};
  }
  std::vector<unsigned> all(u.size());
  for (unsigned i = 0; i < u.size(); ++i) all[i] = i;
  return all;
}

// "0;1;0,1" -> {{0},{1},{0,1}}
std::vector<PointSet> parse_collection(GroundSet u, const std::string& text) {
  std::vector<PointSet> out;
  std::stringstream sets(text);
  std::string item;
  while (std::getline(sets, item, ';')) {
    std::uint32_t mask = 0;
    std::stringstream pts(item);
    std::string p;
    while (std::getline(pts, p, ',')) {
      if (p.empty()) continue;
      const auto point = static_cast<unsigned>(std::stoul(p));
      mask |= PointSet::singleton(u, point).mask();
    }
    out.emplace_back(u, mask);
  }
  return out;
}

// --- verify ----------------------------------------------------------------

Report verify_interval_identity(const CommandOptions& o) {
  if (o.fixture) {
    const Json j = load_fixture(*o.fixture, o);
    std::vector<Family> elems;
    for (const auto& f : j.at("sublattice")) elems.push_back(family_from_json(f));
    if (elems.empty()) throw Error("fixture sublattice is empty");
    const FiniteSublattice p(elems.front().universe(), elems);
    Report r("lemma3.2", Json{{"fixture", *o.fixture}});
    for (const auto& x : p.elements()) r.absorb(interval_identity_check(p, x));
    return r;
  }
  const unsigned n = require_n(o, 2, 1, 3);
  const GroundSet u(n);
  Report r("lemma3.2", Json{{"n", n}, {"max_generators", 3}});
  std::vector<Family> cube(enumerate_families(u).begin(), enumerate_families(u).end());
  std::uint64_t generator_sets = 0, identity_checks = 0;
  auto visit = [&](std::span<const Family> gens) {
    ++generator_sets;
    const auto p = lat_generate(u, gens);
    identity_checks += p.size();
    if (interval_identities_hold(p)) return;
    for (const auto& x : p.elements()) {
      const auto sub = interval_identity_check(p, x);
      if (!sub.passed()) r.absorb(sub);
    }
  };
  const std::size_t m = cube.size();
  for (std::size_t i = 0; i < m; ++i) {
    visit(std::span(&cube[i], 1));
    for (std::size_t j = i + 1; j < m; ++j) {
      const Family two[] = {cube[i], cube[j]};
      visit(two);
      for (std::size_t k = j + 1; k < m; ++k) {
        const Family three[] = {cube[i], cube[j], cube[k]};
        visit(three);
      }
    }
  }
  r.data()["generator_sets"] = generator_sets;
  r.data()["identity_checks"] = identity_checks;
  if (r.passed()) r.set_witness(Json{{"identity_checks", identity_checks}});
  return r;
}

Report verify_chain_formula(const CommandOptions& o) {
  if (o.fixture) {
    const Json j = load_fixture(*o.fixture, o);
    std::vector<Family> chain;
    for (const auto& f : j.at("chain")) chain.push_back(family_from_json(f));
    if (chain.empty()) throw Error("fixture chain is empty");
    const GroundSet u = chain.front().universe();
    Report r("thm3.3-chain", Json{{"fixture", *o.fixture}});
    std::sort(chain.begin(), chain.end());
    const auto out = chain_completion_finite(u, chain);
    if (out != chain) r.fail(Json{{"reason", "completion differs from the finite chain"}, {"completion", to_json(out)}});
    else r.set_witness(Json{{"completion", to_json(out)}});
    return r;
  }
  const unsigned n = require_n(o, 2, 1, 3);
  const GroundSet u(n);
  Report r("thm3.3-chain", Json{{"n", n}, {"seed", o.seed}});
  std::uint64_t chains = 0;
  auto check = [&](std::span<const Family> chain) {
    ++chains;
    std::vector<Family> sorted(chain.begin(), chain.end());
    std::sort(sorted.begin(), sorted.end());
    const auto out = chain_completion_finite(u, chain);
    if (!is_chain(out)) r.fail(Json{{"reason", "completion is not a chain"}, {"chain", to_json(sorted)}});
    if (out != sorted) r.fail(Json{{"reason", "completion differs from the finite chain"}, {"chain", to_json(sorted)}});
  };
  if (n <= 2) {
    std::vector<Family> cube(enumerate_families(u).begin(), enumerate_families(u).end());
    std::vector<Family> current;
    // Every chain of length <= 4, grown in increasing word order.
    auto extend = [&](auto&& self, std::size_t from) -> void {
      if (!current.empty()) check(current);
      if (current.size() == 4) return;
      for (std::size_t i = from; i < cube.size(); ++i) {
        if (!std::all_of(current.begin(), current.end(),
                         [&](const Family& f) { return comparable(f, cube[i]); }))
          continue;
        current.push_back(cube[i]);
        self(self, i + 1);
        current.pop_back();
      }
    };
    extend(extend, 0);
    r.params()["mode"] = "exhaustive";
  } else {
    std::mt19937_64 rng(o.seed);
    const std::size_t samples = o.samples.value_or(100);
    for (std::size_t s = 0; s < samples; ++s) {
      const auto chain = random_chain(u, 6, rng);
      check(chain);
    }
    r.params()["mode"] = "random";
    r.params()["samples"] = samples;
  }
  if (r.passed()) r.set_witness(Json{{"chains", chains}});
  return r;
}

Report verify_atom_certificate(const CommandOptions& o) {
  const unsigned n = require_n(o, 3, 2, 4);
  const GroundSet u(n);
  const std::string atoms = o.atoms.value_or("all");
  Report r("thm5.3", Json{{"n", n}, {"atoms", atoms}});
  std::vector<PointSet> proper;
  for (const auto& a : all_point_sets(u))
    if (!a.is_empty() && !a.is_full()) proper.push_back(a);

  if (atoms == "all") {
    const auto sub = atom_closure_certificate(u, proper);
    r.absorb(sub);
    if (r.passed()) r.set_witness(sub.witness());
  } else if (atoms == "exhaustive") {
    if (proper.size() > 6) throw Error("exhaustive collections need n <= 3");
    std::uint64_t collections = 0;
    for (std::uint32_t pick = 0; pick < (1u << proper.size()); ++pick) {
      if (std::popcount(pick) < 2) continue;
      std::vector<PointSet> coll;
      for (std::size_t i = 0; i < proper.size(); ++i)
        if (pick & (1u << i)) coll.push_back(proper[i]);
      ++collections;
      const auto sub = atom_closure_certificate(u, coll);
      if (!sub.passed()) r.absorb(sub);
    }
    if (r.passed()) r.set_witness(Json{{"collections", collections}});
  } else {
    const auto sub = atom_closure_certificate(u, parse_collection(u, atoms));
    r.absorb(sub);
    if (r.passed()) r.set_witness(sub.witness());
  }
  return r;
}

std::vector<Topology> fixture_collection(const std::string& name, GroundSet u,
                                         const CommandOptions& o) {
  if (name == "all-atoms") return atoms_of(u);
  const Json j = load_fixture(name, o);
  const auto key = std::to_string(u.size());
  if (!j.contains("collections") || !j.at("collections").contains(key))
    throw Error("fixture '" + name + "' has no collection for n=" + key);
  std::vector<Topology> out;
  for (const auto& f : j.at("collections").at(key)) {
    const auto fam = family_from_json(f);
    if (fam.universe() != u) throw UniverseMismatch();
    out.emplace_back(fam);
  }
  return out;
}

Report verify_disjoint_certificate(const CommandOptions& o) {
  const unsigned n = require_n(o, 3, 2, 4);
  const GroundSet u(n);
  Report r("thm5.4", Json{{"n", n}});
  if (o.fixture) {
    r.params()["fixture"] = *o.fixture;
    const auto sub = disjoint_closure_certificate(u, fixture_collection(*o.fixture, u, o));
    r.absorb(sub);
    if (r.passed()) r.set_witness(sub.witness());
    return r;
  }
  const std::size_t samples = o.samples.value_or(25);
  r.params()["seed"] = o.seed;
  r.params()["samples"] = samples;
  std::mt19937_64 rng(o.seed);
  std::size_t failures = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    const auto sub = disjoint_closure_certificate(u, random_disjoint_collection(u, rng));
    if (!sub.passed()) {
      ++failures;
      r.absorb(sub);
    }
  }
  const auto atoms = disjoint_closure_certificate(u, atoms_of(u));
  if (!atoms.passed()) ++failures;
  r.absorb(atoms);
  if (r.passed()) r.set_witness(Json{{"collections", samples + 1}, {"failures", failures}});
  return r;
}

template <typename Check>
Report per_point(const std::string& id, const CommandOptions& o, unsigned lo, unsigned hi,
                 Check check) {
  const unsigned n = require_n(o, 3, lo, hi);
  const GroundSet u(n);
  Report r(id, Json{{"n", n}});
  const auto xs = points_to_check(o, u);
  for (unsigned x : xs) r.absorb(check(u, x));
  if (r.passed()) r.set_witness(Json{{"points_checked", xs.size()}});
  return r;
}

Report verify_injection(const CommandOptions& o) {
  const unsigned n = require_n(o, 4, 2, 5);
  const GroundSet target(n), source(n - 1);
  Report r("thm6.6", Json{{"n", n}, {"source_n", n - 1}});
  const auto tops = all_topologies(source);
  std::vector<unsigned> image(n);
  for (unsigned i = 0; i < n; ++i) image[i] = i;
  std::size_t injections = 0;
  // Every injection of the (n-1)-set into the n-set: the first n-1 entries of
  // each permutation, skipping permutations that agree on that prefix.
  std::set<std::vector<unsigned>> prefixes;
  do {
    std::vector<unsigned> prefix(image.begin(), image.end() - 1);
    if (!prefixes.insert(prefix).second) continue;
    ++injections;
    const Injection inj(source, target, prefix);
    std::vector<Topology> images;
    for (const auto& t : tops) images.push_back(inject_topology(t, inj));
    for (std::size_t a = 0; a < tops.size(); ++a) {
      for (std::size_t b = 0; b < tops.size(); ++b) {
        if (a == b) continue;
        if (images[a] == images[b])
          r.fail(Json{{"reason", "not injective"}, {"injection", prefix}, {"rho", to_json(tops[a].family())}, {"sigma", to_json(tops[b].family())}});
        const bool strict = leq(tops[a].family(), tops[b].family());
        if (strict && !(leq(images[a].family(), images[b].family()) && images[a] != images[b]))
          r.fail(Json{{"reason", "strict inclusion not preserved"}, {"injection", prefix}});
      }
    }
  } while (std::next_permutation(image.begin(), image.end()));
  r.data()["topologies"] = tops.size();
  r.data()["injections"] = injections;
  if (r.passed()) r.set_witness(Json{{"topologies", tops.size()}, {"injections", injections}});
  return r;
}

// --- demos -----------------------------------------------------------------

std::vector<PeriodicSet> coords_or(const CommandOptions& o, std::vector<PeriodicSet> fallback) {
  return o.coords ? *o.coords : std::move(fallback);
}

Report demo_initial_segments(const CommandOptions& o) {
  const std::size_t bound = o.bound.value_or(kDefaultStabilizationBound);
  const auto c = PeriodicSet::evens();
  const auto chain = scenarios::initial_segment_chain(c);
  const auto limit = scenarios::initial_segment_limit(c);
  auto seg = [&](std::size_t m) { return scenarios::initial_segment(c, m); };
  Report r("example5.1", Json{{"bound", bound}, {"enumeration", to_json(c)}});

  const auto completion =
      chain_completion_omega(chain, coords_or(o, {seg(5), PeriodicSet::odds(), PeriodicSet::naturals()}), bound);
  const auto convergence = sequence_convergence_check(
      chain.stages, limit, coords_or(o, {seg(0), seg(5), PeriodicSet::odds()}), bound);
  const auto limit_point = is_limit_point_sampled(
      limit, chain.stages, coords_or(o, {seg(3), PeriodicSet::odds(), PeriodicSet::naturals()}), bound);
  r.absorb(completion);
  r.absorb(convergence);
  r.absorb(limit_point);

  // The limit also contains C, which no stage does.
  const std::vector<PeriodicSet> c_coord{c};
  const auto caveat = ordinal_homeo_check(chain, limit, c_coord, bound);
  r.data()["limit_vs_union"] = caveat.to_json();
  if (caveat.verdict() == Verdict::fail)
    r.note("informational: the limit differs from the union of the stages at coordinate C = " +
           to_string(c) + "; C is the added completion point");
  if (r.passed()) r.set_witness(Json{{"union", to_json(chain.union_expr)}, {"limit", to_json(limit)}});
  return r;
}

Report demo_growing_chain(const CommandOptions& o) {
  const std::size_t bound = o.bound.value_or(kDefaultStabilizationBound);
  const auto evens = PeriodicSet::evens(), odds = PeriodicSet::odds();
  const auto chain = scenarios::growing_powerset_chain(evens, odds);
  const auto probe = scenarios::growing_chain_probe(evens, odds, 8);
  Report r("thm4.5-chain", Json{{"bound", bound}});

  bool stages_pass = true;
  for (std::size_t m = 0; m <= bound; ++m) {
    const auto stage = check_topology_symbolic(chain.stages(m), probe);
    if (!stage.passed()) {
      stages_pass = false;
      r.data()["failing_stage"] = m;
      r.data()["failing_stage_report"] = stage.to_json();
      break;
    }
  }
  r.data()["stages_checked"] = bound + 1;
  r.data()["stages_pass"] = stages_pass;

  const std::vector<PeriodicSet> coords =
      coords_or(o, {evens, odds, PeriodicSet::singleton(1)});
  r.data()["completion"] = chain_completion_omega(chain, coords, bound).to_json();
  r.data()["limit_point"] = is_limit_point_sampled(chain.union_expr, chain.stages, coords, bound).to_json();

  const auto union_check = check_topology_symbolic(chain.union_expr, probe);
  r.data()["union_check"] = union_check.to_json();
  if (!stages_pass) {
    r.fail(Json{{"reason", "a finite stage failed the topology probes"}});
  } else if (union_check.verdict() == Verdict::fail) {
    r.fail(union_check.witness());
    r.note("expected: the union of this increasing chain of topologies is not a topology");
  } else {
    r.note("unexpected: the union passed every probe");
  }
  return r;
}

PeriodicSet named_set(const std::string& name, const CommandOptions& o) {
  if (name == "evens") return PeriodicSet::evens();
  if (name == "odds") return PeriodicSet::odds();
  if (name == "naturals") return PeriodicSet::naturals();
  return periodic_from_json(load_fixture(name, o));
}

Report demo_join_witness(const CommandOptions& o) {
  const std::string gens_name = o.gens.value_or("cofinite2");
  const std::string cand_name = o.candidate.value_or("evens");
  const auto gens = gens_name == "cofinite2" && !std::filesystem::exists(o.fixture_dir / "cofinite2.json")
                        ? scenarios::cofinite_pair()
                        : periodic_list_from_json(load_fixture(gens_name, o));
  Report r("lemma4.1-witness", Json{{"gens", gens_name}, {"candidate", cand_name}});
  const auto sub = join_completeness_witness(gens, named_set(cand_name, o));
  r.absorb(sub);
  if (r.passed()) r.set_witness(sub.witness());
  return r;
}

Report demo_ordinal(const CommandOptions& o) {
  const std::size_t bound = o.bound.value_or(kDefaultStabilizationBound);
  const auto c = PeriodicSet::evens();
  const auto chain = scenarios::initial_segment_chain(c);
  const std::vector<PeriodicSet> coords =
      coords_or(o, {c, scenarios::initial_segment(c, 3), PeriodicSet::odds(), PeriodicSet::naturals()});
  Report r("remark3.4", Json{{"bound", bound}});
  const auto exact = ordinal_homeo_check(chain, chain.union_expr, coords, bound);
  r.data()["limit_equals_union"] = exact.to_json();
  const std::vector<Family> finite_chain{Family::trivial(GroundSet(2)), Family::discrete(GroundSet(2))};
  r.data()["finite_chain"] = ordinal_homeo_check(finite_chain).to_json();
  const auto with_c = ordinal_homeo_check(chain, scenarios::initial_segment_limit(c), coords, bound);
  r.absorb(with_c);
  if (exact.verdict() != Verdict::pass)
    r.note("unexpected: the limit equal to the union did not pass");
  if (with_c.verdict() == Verdict::fail)
    r.note("the limit containing C is not the union of its predecessors, so the order map from "
           "omega+1 is not a homeomorphism");
  return r;
}

}  // namespace

Json load_fixture(const std::string& name, const CommandOptions& opts) {
  std::filesystem::path path = name;
  if (!std::filesystem::is_regular_file(path)) path = opts.fixture_dir / (name + ".json");
  std::ifstream in(path);
  if (!in) throw Error("fixture not found: " + name);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error("malformed fixture " + path.string() + ": " + e.what());
  }
}

std::vector<Topology> random_disjoint_collection(GroundSet u, std::mt19937_64& rng) {
  auto candidates = all_topologies(u);
  const Family trivial = Family::trivial(u);
  std::erase_if(candidates, [&](const Topology& t) { return t.family() == trivial; });
  std::shuffle(candidates.begin(), candidates.end(), rng);
  const std::size_t target = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
  std::vector<Topology> out;
  for (const auto& t : candidates) {
    if (out.size() == target) break;
    if (std::all_of(out.begin(), out.end(), [&](const Topology& s) { return are_disjoint(s, t); }))
      out.push_back(t);
  }
  return out;
}

std::vector<Family> random_chain(GroundSet u, std::size_t max_length, std::mt19937_64& rng) {
  require_sweepable(u);
  const std::uint64_t all = u.family_count() - 1;
  std::uniform_int_distribution<std::uint64_t> word(0, all);
  const std::size_t length = std::uniform_int_distribution<std::size_t>(1, max_length)(rng);
  // A random top element, then nested random subsets of it.
  std::uint64_t current = word(rng);
  std::vector<Family> out{Family(u, current)};
  while (out.size() < length && current != 0) {
    current &= word(rng) | word(rng);
    if (current != out.back().word()) out.emplace_back(u, current);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

Report cmd_count(unsigned n) {
  if (n < 1 || n > GroundSet::kMaxSweepPoints) throw Error("--n must be in 1..4");
  const GroundSet u(n);
  Report r("count", Json{{"n", n}});
  r.set_witness(Json{{"count", count_topologies(u)}});
  return r;
}

Report cmd_verify(const std::string& check, const CommandOptions& o) {
  if (check == "lemma3.2") return verify_interval_identity(o);
  if (check == "thm3.3-chain") return verify_chain_formula(o);
  if (check == "thm5.3") return verify_atom_certificate(o);
  if (check == "thm5.4") return verify_disjoint_certificate(o);
  if (check == "lemma6.1")
    return per_point("lemma6.1", o, 2, 5, [](GroundSet u, unsigned x) { return verify_trace_reconstruction(u, x); });
  if (check == "thm6.2")
    return per_point("thm6.2", o, 2, 5, [](GroundSet u, unsigned x) { return verify_trace_bijection(u, x); });
  if (check == "thm6.3")
    return per_point("thm6.3", o, 2, 5,
                     [](GroundSet u, unsigned x) { return verify_subbase_correspondence(u, x); });
  if (check == "cor6.4") {
    const unsigned n = require_n(o, 3, 3, 5);
    Report r("cor6.4", Json{{"n", n}});
    const auto sub = ultratopology_cover(GroundSet(n));
    r.absorb(sub);
    if (r.passed()) r.set_witness(sub.witness());
    return r;
  }
  if (check == "thm6.6") return verify_injection(o);
  throw Error("unknown check '" + check + "'");
}

Report cmd_demo(const std::string& demo, const CommandOptions& o) {
  if (demo == "example5.1") return demo_initial_segments(o);
  if (demo == "thm4.5-chain") return demo_growing_chain(o);
  if (demo == "lemma4.1-witness") return demo_join_witness(o);
  if (demo == "remark3.4") return demo_ordinal(o);
  throw Error("unknown demo '" + demo + "'");
}

}  // namespace topcube
