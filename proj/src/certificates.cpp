#include "topcube/certificates.hpp"

#include <algorithm>
#include <set>

#include "topcube/json_io.hpp"

namespace topcube {

namespace {

Json symbolic_cond_json(const PeriodicSet& a, bool member) {
  return Json{{"coord", to_json(a)}, {"sign", member ? "+" : "-"}};
}

// Sweeps the cube and compares the members of c with `expected`.
void sweep_against(Report& r, GroundSet u, const ClosedSetExpr& c, std::vector<Family> expected) {
  std::sort(expected.begin(), expected.end());
  expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
  std::vector<Family> found;
  for (const Family& f : enumerate_families(u))
    if (c.contains(f)) found.push_back(f);

  r.data()["conjuncts"] = c.counts();
  r.data()["sweep_size"] = u.family_count();
  r.data()["members"] = found.size();
  if (found.size() <= kMaxListedMembers) r.data()["member_list"] = to_json(found);

  std::vector<Family> extra, missing;
  std::set_difference(found.begin(), found.end(), expected.begin(), expected.end(),
                      std::back_inserter(extra));
  std::set_difference(expected.begin(), expected.end(), found.begin(), found.end(),
                      std::back_inserter(missing));
  if (!extra.empty() || !missing.empty())
    r.fail(Json{{"unexpected_members", to_json(extra)}, {"missing_members", to_json(missing)}});
  else
    r.set_witness(Json{{"members", found.size()}});
}

}  // namespace

BasicOpen::BasicOpen(std::vector<SubbasicCond> conds) : conds_(std::move(conds)) {
  for (std::size_t i = 0; i < conds_.size(); ++i) {
    for (std::size_t j = i + 1; j < conds_.size(); ++j) {
      if (conds_[i].coord.universe() != conds_[j].coord.universe()) throw UniverseMismatch();
      if (conds_[i].coord == conds_[j].coord && conds_[i].sign != conds_[j].sign)
        throw Error("coordinate " + to_string(conds_[i].coord) + " appears with both signs");
    }
  }
}

bool BasicOpen::contains(const Family& f) const {
  return std::all_of(conds_.begin(), conds_.end(), [&](const SubbasicCond& c) { return c.holds(f); });
}

void ClosedSetExpr::add(std::string group, Clause clause) {
  clauses_.emplace_back(std::move(group), std::move(clause));
}

bool ClosedSetExpr::contains(const Family& f) const {
  for (const auto& [group, clause] : clauses_)
    if (std::none_of(clause.begin(), clause.end(), [&](const SubbasicCond& c) { return c.holds(f); }))
      return false;
  return true;
}

Json ClosedSetExpr::counts() const {
  Json out = Json::object();
  for (const auto& [group, clause] : clauses_) out[group] = out.value(group, 0) + 1;
  return out;
}

Report interval_identity_check(const FiniteSublattice& p, const Family& x) {
  if (!p.contains(x)) throw Error("x is not an element of the sublattice");
  Report r("interval-identity", Json{{"x", to_json(x)}, {"sublattice_size", p.size()}});
  const auto& elems = p.elements();
  const auto coords = all_point_sets(p.universe());

  std::vector<Family> up_order, up_coords, down_order, down_coords;
  for (const auto& y : elems) {
    if (leq(x, y)) up_order.push_back(y);
    if (leq(y, x)) down_order.push_back(y);
    bool in_all_plus = true, in_all_minus = true;
    for (const auto& a : coords) {
      if (x.contains(a) && !y.contains(a)) in_all_plus = false;
      if (!x.contains(a) && y.contains(a)) in_all_minus = false;
    }
    if (in_all_plus) up_coords.push_back(y);
    if (in_all_minus) down_coords.push_back(y);
  }
  if (up_order != up_coords)
    r.fail(Json{{"identity", "up"}, {"order_side", to_json(up_order)}, {"coordinate_side", to_json(up_coords)}});
  if (down_order != down_coords)
    r.fail(Json{{"identity", "down"}, {"order_side", to_json(down_order)}, {"coordinate_side", to_json(down_coords)}});
  if (r.passed()) r.set_witness(Json{{"up_size", up_order.size()}, {"down_size", down_order.size()}});
  return r;
}

bool interval_identities_hold(const FiniteSublattice& p) {
  const auto& elems = p.elements();
  if (elems.size() > 64) {
    return std::all_of(elems.begin(), elems.end(),
                       [&](const Family& x) { return interval_identity_check(p, x).passed(); });
  }
  // Bit i of holders[A] is set when element i contains coordinate A.
  const unsigned coords = p.universe().subset_count();
  std::vector<std::uint64_t> holders(coords, 0);
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (unsigned a = 0; a < coords; ++a)
      if (elems[i].contains_mask(a)) holders[a] |= std::uint64_t{1} << i;
  const std::uint64_t everyone =
      elems.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << elems.size()) - 1;
  for (const auto& x : elems) {
    std::uint64_t up_order = 0, down_order = 0;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (leq(x, elems[i])) up_order |= std::uint64_t{1} << i;
      if (leq(elems[i], x)) down_order |= std::uint64_t{1} << i;
    }
    std::uint64_t up_coords = everyone, down_coords = everyone;
    for (unsigned a = 0; a < coords; ++a) {
      if (x.contains_mask(a)) up_coords &= holders[a];
      else down_coords &= ~holders[a];
    }
    if (up_order != up_coords || down_order != down_coords) return false;
  }
  return true;
}

Report atom_closure_certificate(GroundSet u, std::span<const PointSet> collection) {
  require_sweepable(u);
  std::set<PointSet> in_a;
  for (const auto& a : collection) {
    if (a.universe() != u) throw UniverseMismatch();
    if (a.is_empty() || a.is_full()) throw Error("atom collection members must be nonempty and proper");
    in_a.insert(a);
  }
  if (in_a.size() < 2) throw Error("atom collection needs at least two distinct sets");

  Json a_json = Json::array();
  for (const auto& a : in_a) a_json.push_back(to_json(a));
  Report r("atom-closure-certificate", Json{{"n", u.size()}, {"collection", a_json}});

  const auto empty = PointSet::empty(u), full = PointSet::full(u);
  ClosedSetExpr c;
  c.add("whole_plus", {plus(full)});
  c.add("empty_plus", {plus(empty)});
  for (const auto& d : all_point_sets(u))
    if (!in_a.contains(d) && d != empty && d != full) c.add("outside_minus", {minus(d)});
  for (auto b = in_a.begin(); b != in_a.end(); ++b)
    for (auto e = std::next(b); e != in_a.end(); ++e) c.add("pair_minus", {minus(*b), minus(*e)});

  std::vector<Family> expected{Family::trivial(u)};
  for (const auto& a : in_a) expected.push_back(Family::of(u, {0u, a.mask(), u.full_mask()}));
  sweep_against(r, u, c, std::move(expected));
  return r;
}

Report disjoint_closure_certificate(GroundSet u, std::span<const Topology> ts) {
  require_sweepable(u);
  const Family trivial = Family::trivial(u);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (ts[i].universe() != u) throw UniverseMismatch();
    if (ts[i].family() == trivial) throw Error("collection member equals the trivial topology");
    for (std::size_t j = 0; j < i; ++j)
      if (!are_disjoint(ts[i], ts[j])) throw Error("collection is not pairwise disjoint");
  }
  Json ts_json = Json::array();
  for (const auto& t : ts) ts_json.push_back(to_json(t.family()));
  Report r("disjoint-closure-certificate", Json{{"n", u.size()}, {"topologies", ts_json}});

  Family covered = Family::empty(u);
  for (const auto& t : ts) covered = join(covered, t.family());

  ClosedSetExpr c;
  c.add("whole_plus", {plus(PointSet::full(u))});
  c.add("empty_plus", {plus(PointSet::empty(u))});
  for (const auto& d : all_point_sets(u))
    if (!covered.contains(d)) c.add("outside_minus", {minus(d)});
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const auto opens_i = ts[i].proper_opens();
    for (std::size_t j = 0; j < ts.size(); ++j) {
      if (i == j) continue;
      for (const auto& a : opens_i)
        for (const auto& b : ts[j].proper_opens()) c.add("cross_minus", {minus(a), minus(b)});
    }
    for (const auto& a : opens_i)
      for (const auto& b : opens_i)
        if (a != b) c.add("within_plus_minus", {plus(a), minus(b)});
  }

  std::vector<Family> expected{trivial};
  for (const auto& t : ts) expected.push_back(t.family());
  sweep_against(r, u, c, std::move(expected));

  // Each subbasic neighbourhood of I leaves out at most this many members of
  // the collection, so every basic neighbourhood of I meets it cofinitely.
  std::size_t max_excluded = 0;
  for (const auto& a : all_point_sets(u)) {
    if (a.is_empty() || a.is_full()) continue;
    const auto excluded = static_cast<std::size_t>(
        std::count_if(ts.begin(), ts.end(), [&](const Topology& t) { return t.is_open(a); }));
    max_excluded = std::max(max_excluded, excluded);
  }
  r.data()["max_excluded_per_subbasic_neighbourhood_of_trivial"] = max_excluded;
  return r;
}

std::optional<PeriodicSet> separating_coordinate(const FamilyExpr& a, const FamilyExpr& b,
                                                 std::span<const PeriodicSet> coords,
                                                 std::size_t depth) {
  auto separates = [&](const PeriodicSet& s) { return a.contains(s) != b.contains(s); };
  for (const auto& s : coords)
    if (separates(s)) return s;
  for (const auto& s : a.landmarks(depth))
    if (separates(s)) return s;
  for (const auto& s : b.landmarks(depth))
    if (separates(s)) return s;
  return std::nullopt;
}

Report is_limit_point_sampled(const FamilyExpr& x, const FamilySequence& p,
                              std::span<const PeriodicSet> coords, std::size_t depth) {
  if (coords.empty()) throw Error("limit-point sampling needs at least one coordinate");
  if (coords.size() > kMaxSampledCoords) throw Error("at most 10 sampled coordinates");
  Json coords_json = Json::array();
  for (const auto& a : coords) coords_json.push_back(to_json(a));
  Report r("limit-point-sampled",
           Json{{"sequence", p.name}, {"coords", coords_json}, {"depth", depth}});

  const std::size_t k = coords.size();
  std::vector<bool> x_sign(k);
  for (std::size_t i = 0; i < k; ++i) x_sign[i] = x.contains(coords[i]);

  enum class Identity { distinct, equal, unknown };
  struct Stage {
    std::uint32_t agree = 0;  // bit i: same membership as x on coords[i]
    Identity identity = Identity::unknown;
  };
  std::vector<Stage> stages(depth + 1);
  for (std::size_t m = 0; m <= depth; ++m) {
    const auto pm = p(m);
    for (std::size_t i = 0; i < k; ++i)
      if (pm.contains(coords[i]) == x_sign[i]) stages[m].agree |= 1u << i;
    if (pm == x)
      stages[m].identity = Identity::equal;
    else if (separating_coordinate(pm, x, coords, depth))
      stages[m].identity = Identity::distinct;
  }

  const bool exhaustive = p.constant_from && *p.constant_from <= depth;
  Json hits = Json::array();
  for (std::uint32_t nb = 0; nb < (1u << k); ++nb) {
    std::optional<std::size_t> hit;
    bool undecided = false;
    for (std::size_t m = 0; m <= depth && !hit; ++m) {
      if ((stages[m].agree & nb) != nb) continue;
      if (stages[m].identity == Identity::distinct) hit = m;
      else if (stages[m].identity == Identity::unknown) undecided = true;
    }
    if (hit) {
      hits.push_back(*hit);
      continue;
    }
    Json nbhd = Json::array();
    for (std::size_t i = 0; i < k; ++i)
      if (nb & (1u << i)) nbhd.push_back(symbolic_cond_json(coords[i], x_sign[i]));
    if (exhaustive && !undecided)
      r.fail(Json{{"neighbourhood", nbhd}, {"reason", "holds no member of the sequence other than x"}});
    else
      r.inconclusive(Json{{"depth", depth}, {"neighbourhood", nbhd}});
    break;
  }
  if (r.passed()) r.set_witness(Json{{"neighbourhoods", 1u << k}, {"first_hit_stage", hits}});
  return r;
}

Report sequence_convergence_check(const FamilySequence& p, const FamilyExpr& limit,
                                  std::span<const PeriodicSet> coords, std::size_t depth) {
  Report r("sequence-convergence",
           Json{{"sequence", p.name}, {"limit", to_json(limit)}, {"depth", depth}});
  const bool exhaustive = p.constant_from && *p.constant_from <= depth;
  Json table = Json::array();
  Json unsettled = Json::array();
  for (const auto& a : coords) {
    const auto trace = membership_trace(p, a, depth);
    const bool target = limit.contains(a);
    Json row{{"coord", to_json(a)}, {"limit", target}};
    if (p.increasing) {
      for (std::size_t m = 1; m < trace.size(); ++m) {
        if (trace[m - 1] && !trace[m]) {
          r.fail(Json{{"coord", to_json(a)}, {"reason", "declared increasing but membership drops"}, {"stage", m}});
          break;
        }
      }
    }
    if (trace.back() == target) {
      std::size_t settle = trace.size() - 1;
      while (settle > 0 && trace[settle - 1] == target) --settle;
      row["settled_from"] = settle;
      row["status"] = "pass";
    } else if (exhaustive || (p.increasing && trace.back())) {
      row["status"] = "fail";
      r.fail(Json{{"coord", to_json(a)}, {"reason", "membership settles away from the limit"}});
    } else {
      row["status"] = "inconclusive";
      unsettled.push_back(to_json(a));
    }
    table.push_back(std::move(row));
  }
  if (!unsettled.empty()) r.inconclusive(Json{{"depth", depth}, {"unsettled", unsettled}});
  r.data()["coords"] = std::move(table);
  if (r.passed()) r.set_witness(Json{{"coords_checked", coords.size()}});
  return r;
}

Report ordinal_homeo_check(std::span<const Family> chain) {
  if (!is_chain(chain)) throw Error("input families are not totally ordered");
  Report r("ordinal-homeomorphism", Json{{"length", chain.size()}});
  r.set_witness(Json{{"limit_stages", 0}});
  r.note("finite chain: no limit stage, the order map is trivially a homeomorphism");
  return r;
}

Report ordinal_homeo_check(const OmegaChain& c, const FamilyExpr& limit,
                           std::span<const PeriodicSet> coords, std::size_t bound) {
  Report r("ordinal-homeomorphism",
           Json{{"chain", c.stages.name}, {"limit", to_json(limit)}, {"bound", bound}});
  r.absorb(chain_completion_omega(c, coords, bound));
  for (const auto& a : coords) {
    const bool in_limit = limit.contains(a);
    const bool in_union = c.union_expr.contains(a);
    if (in_limit != in_union) {
      r.fail(Json{{"coord", to_json(a)},
                  {"in_limit", in_limit},
                  {"in_union_of_predecessors", in_union}});
      r.note("limit stage differs from the union of its predecessors at " + to_string(a));
    }
  }
  if (r.passed()) r.set_witness(Json{{"coords_checked", coords.size()}});
  return r;
}

}  // namespace topcube
