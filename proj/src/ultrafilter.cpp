#include "topcube/ultrafilter.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "topcube/json_io.hpp"

namespace topcube {

namespace {

void require_point(GroundSet u, unsigned x) {
  if (x >= u.size()) throw Error("point " + std::to_string(x) + " out of range");
}

Json point_list(const std::vector<unsigned>& pts) { return Json(pts); }

}  // namespace

bool is_ultrafilter(const Family& f) {
  const GroundSet u = f.universe();
  const std::uint32_t full = u.full_mask();
  for (std::uint32_t a = 0; a <= full; ++a) {
    const bool in = f.contains_mask(a);
    if (in == f.contains_mask(full & ~a)) return false;
    if (!in) continue;
    for (std::uint32_t b = 0; b <= full; ++b) {
      if ((a & ~b) == 0 && !f.contains_mask(b)) return false;
      if (f.contains_mask(b) && !f.contains_mask(a & b)) return false;
    }
  }
  return true;
}

PrincipalUltrafilter::PrincipalUltrafilter(GroundSet u, unsigned point)
    : u_(u), point_(point), members_(Family::empty(u)) {
  require_point(u, point);
  std::uint64_t word = 0;
  for (std::uint32_t a = 0; a <= u.full_mask(); ++a)
    if (a & (1u << point)) word |= std::uint64_t{1} << a;
  members_ = Family(u, word);
}

PrincipalUltrafilter PrincipalUltrafilter::from_family(const Family& f) {
  if (!is_ultrafilter(f)) throw Error("family is not an ultrafilter: " + to_string(f));
  std::uint32_t core = f.universe().full_mask();
  for (const auto& s : f.members()) core &= s.mask();
  if (std::popcount(core) != 1) throw Error("ultrafilter is not principal");
  return PrincipalUltrafilter(f.universe(), static_cast<unsigned>(std::countr_zero(core)));
}

std::vector<PrincipalUltrafilter> all_ultrafilters(GroundSet u) {
  std::vector<PrincipalUltrafilter> out;
  for (unsigned p = 0; p < u.size(); ++p) out.emplace_back(u, p);
  return out;
}

std::vector<PrincipalUltrafilter> type_of(GroundSet u, unsigned x) {
  require_point(u, x);
  const auto sx = PointSet::singleton(u, x);
  std::vector<PrincipalUltrafilter> out;
  for (auto& f : all_ultrafilters(u))
    if (!f.contains(sx)) out.push_back(f);
  return out;
}

PointSet Reindex::to_target(const PointSet& s) const {
  if (s.universe() != source) throw UniverseMismatch();
  std::uint32_t mask = 0;
  for (unsigned j = 0; j < kept.size(); ++j)
    if (s.contains(kept[j])) mask |= 1u << j;
  return PointSet(target, mask);
}

PointSet Reindex::to_source(const PointSet& s) const {
  if (s.universe() != target) throw UniverseMismatch();
  std::uint32_t mask = 0;
  for (unsigned j = 0; j < kept.size(); ++j)
    if (s.contains(j)) mask |= 1u << kept[j];
  return PointSet(source, mask);
}

Reindex reindex_without(GroundSet u, const PointSet& a) {
  if (a.universe() != u) throw UniverseMismatch();
  std::vector<unsigned> kept;
  for (unsigned p = 0; p < u.size(); ++p)
    if (!a.contains(p)) kept.push_back(p);
  if (kept.empty()) throw Error("cannot remove every point of the ground set");
  const GroundSet target(static_cast<unsigned>(kept.size()));
  return Reindex{u, target, std::move(kept)};
}

Trace trace(const PrincipalUltrafilter& f, const PointSet& a) {
  if (a.contains(f.point())) throw Error("the trace removes the ultrafilter's own point");
  auto r = reindex_without(f.universe(), a);
  std::uint64_t word = 0;
  for (const auto& n : f.members().members()) word |= std::uint64_t{1} << r.to_target(n - a).mask();
  return Trace{Family(r.target, word), std::move(r)};
}

Family trace_in_place(const Family& f, const PointSet& a) {
  if (a.universe() != f.universe()) throw UniverseMismatch();
  std::uint64_t word = 0;
  for (const auto& n : f.members()) word |= std::uint64_t{1} << (n - a).mask();
  return Family(f.universe(), word);
}

PrincipalUltrafilter extend_trace(const PrincipalUltrafilter& h, GroundSet u, unsigned x) {
  require_point(u, x);
  const auto sx = PointSet::singleton(u, x);
  const auto r = reindex_without(u, sx);
  if (h.universe() != r.target) throw UniverseMismatch();
  std::uint64_t word = 0;
  for (const auto& m : h.members().members()) {
    const auto lifted = r.to_source(m);
    word |= std::uint64_t{1} << lifted.mask();
    word |= std::uint64_t{1} << (lifted | sx).mask();
  }
  return PrincipalUltrafilter::from_family(Family(u, word));
}

Ultratopology::Ultratopology(unsigned x, PrincipalUltrafilter f)
    : x_(x), f_(std::move(f)), family_(Family::empty(f_.universe())) {
  const GroundSet u = f_.universe();
  require_point(u, x);
  if (f_.point() == x) throw Error("ultratopology needs an ultrafilter without {x}");
  const std::uint32_t rest = u.full_mask() & ~(1u << x);
  std::uint64_t word = f_.members().word();
  for (std::uint32_t a = 0; a <= u.full_mask(); ++a)
    if ((a & ~rest) == 0) word |= std::uint64_t{1} << a;
  family_ = Family(u, word);
}

std::vector<Ultratopology> ultratopologies_omitting(GroundSet u, unsigned x) {
  std::vector<Ultratopology> out;
  for (auto& f : type_of(u, x)) out.emplace_back(x, f);
  return out;
}

std::vector<Ultratopology> all_ultratopologies(GroundSet u) {
  std::vector<Ultratopology> out;
  for (unsigned x = 0; x < u.size(); ++x)
    for (auto& t : ultratopologies_omitting(u, x)) out.push_back(t);
  return out;
}

Report verify_trace_reconstruction(GroundSet u, unsigned x) {
  require_point(u, x);
  if (u.size() < 2) throw Error("needs a ground set of at least two points");
  Report r("trace-reconstruction", Json{{"n", u.size()}, {"x", x}});
  const auto sx = PointSet::singleton(u, x);
  std::vector<Family> traces;
  const auto types = type_of(u, x);
  for (const auto& f : types) {
    const Family fx = trace_in_place(f.members(), sx);
    Family rebuilt = fx;
    for (const auto& m : fx.members()) rebuilt = rebuilt.with(m | sx);
    if (rebuilt != f.members())
      r.fail(Json{{"part", "reconstruction"}, {"ultrafilter_point", f.point()}});
    const auto t = trace(f, sx);
    if (!is_ultrafilter(t.family))
      r.fail(Json{{"part", "trace-is-ultrafilter"}, {"ultrafilter_point", f.point()}});
    if (std::find(traces.begin(), traces.end(), t.family) != traces.end())
      r.fail(Json{{"part", "injectivity"}, {"ultrafilter_point", f.point()}});
    traces.push_back(t.family);
  }
  r.data()["reindex"] = reindex_without(u, sx).kept;
  if (r.passed()) r.set_witness(Json{{"ultrafilters_checked", types.size()}});
  return r;
}

Report verify_trace_bijection(GroundSet u, unsigned x) {
  require_point(u, x);
  if (u.size() < 2) throw Error("needs a ground set of at least two points");
  Report r("trace-bijection", Json{{"n", u.size()}, {"x", x}});
  const auto sx = PointSet::singleton(u, x);
  const auto types = type_of(u, x);
  const auto smaller = all_ultrafilters(GroundSet(u.size() - 1));
  if (types.size() != smaller.size())
    r.fail(Json{{"reason", "size mismatch"}, {"type", types.size()}, {"target", smaller.size()}});
  for (const auto& f : types) {
    const auto t = trace(f, sx);
    const auto h = PrincipalUltrafilter::from_family(t.family);
    if (extend_trace(h, u, x) != f)
      r.fail(Json{{"reason", "extend(trace(F)) != F"}, {"ultrafilter_point", f.point()}});
  }
  for (const auto& h : smaller) {
    const auto f = extend_trace(h, u, x);
    if (f.contains(sx)) r.fail(Json{{"reason", "extension contains {x}"}, {"point", h.point()}});
    if (trace(f, sx).family != h.members())
      r.fail(Json{{"reason", "trace(extend(H)) != H"}, {"point", h.point()}});
  }
  if (r.passed()) r.set_witness(Json{{"pairs", types.size()}});
  return r;
}

Report verify_subbase_correspondence(GroundSet u, unsigned x) {
  require_point(u, x);
  if (u.size() < 2) throw Error("needs a ground set of at least two points");
  Report r("subbase-correspondence", Json{{"n", u.size()}, {"x", x}});
  const auto sx = PointSet::singleton(u, x);
  const auto re = reindex_without(u, sx);
  const auto types = type_of(u, x);
  std::vector<Ultratopology> tops;
  std::vector<Family> traces;
  for (const auto& f : types) {
    tops.emplace_back(x, f);
    traces.push_back(trace(f, sx).family);
  }

  for (std::size_t i = 0; i < tops.size(); ++i) {
    if (!is_topology(tops[i].family()) || tops[i].family().contains(sx))
      r.fail(Json{{"reason", "not an ultratopology omitting {x}"}, {"index", i}});
    for (std::size_t j = 0; j < i; ++j)
      if (tops[i] == tops[j]) r.fail(Json{{"reason", "F -> T_F not injective"}, {"index", i}});
  }

  auto points_where = [&](auto pred) {
    std::vector<unsigned> pts;
    for (std::size_t i = 0; i < types.size(); ++i)
      if (pred(i)) pts.push_back(types[i].point());
    return pts;
  };

  Json table = Json::array();
  for (const auto& a : all_point_sets(u)) {
    if (a.contains(x)) continue;
    const auto a_small = re.to_target(a);
    const auto trace_side = points_where([&](std::size_t i) { return traces[i].contains(a_small); });
    const auto lifted_side =
        points_where([&](std::size_t i) { return tops[i].family().contains(a | sx); });
    const auto plain_side = points_where([&](std::size_t i) { return tops[i].family().contains(a); });
    if (trace_side != lifted_side)
      r.fail(Json{{"reason", "A' does not correspond to (A u {x})+"}, {"A", to_json(a)}});
    if (plain_side.size() != types.size())
      r.fail(Json{{"reason", "A+ does not contain all of TYPE[x]"}, {"A", to_json(a)}});
    table.push_back(Json{{"A", to_json(a)},
                         {"trace_side", point_list(trace_side)},
                         {"ultratopology_side", point_list(lifted_side)}});
  }

  Json with_point = Json::array();
  for (const auto& b : all_point_sets(u)) {
    if (!b.contains(x)) continue;
    const auto rest_small = re.to_target(b - sx);
    const auto top_side = points_where([&](std::size_t i) { return tops[i].family().contains(b); });
    const auto trace_side =
        points_where([&](std::size_t i) { return traces[i].contains(rest_small); });
    if (top_side != trace_side)
      r.fail(Json{{"reason", "B+ does not correspond to (B minus x)'"}, {"B", to_json(b)}});
    with_point.push_back(Json{{"B", to_json(b)},
                              {"ultratopology_side", point_list(top_side)},
                              {"trace_side", point_list(trace_side)}});
  }

  r.data()["reindex"] = re.kept;
  if (u.size() <= 3) {
    r.data()["table"] = table;
    r.data()["table_with_point"] = with_point;
  }
  if (r.passed()) r.set_witness(Json{{"ultratopologies", tops.size()}, {"rows", table.size()}});
  return r;
}

Report ultratopology_cover(GroundSet u) {
  if (u.size() < 3) throw Error("the cover check needs at least three points");
  Report r("ultratopology-cover", Json{{"n", u.size()}});
  const auto ult = all_ultratopologies(u);
  const std::size_t n = u.size();

  // cell[x] = indices of members of Ult(X) inside {x}⁻.
  std::vector<std::vector<std::size_t>> cells(n);
  for (unsigned x = 0; x < n; ++x) {
    const auto sx = PointSet::singleton(u, x);
    for (std::size_t i = 0; i < ult.size(); ++i)
      if (!ult[i].family().contains(sx)) cells[x].push_back(i);
    std::vector<std::size_t> expected;
    for (const auto& t : ultratopologies_omitting(u, x))
      expected.push_back(static_cast<std::size_t>(std::find(ult.begin(), ult.end(), t) - ult.begin()));
    std::sort(expected.begin(), expected.end());
    if (cells[x] != expected) r.fail(Json{{"reason", "{x}- meets Ult(X) outside TYPE[x]"}, {"x", x}});
  }

  std::vector<unsigned> owner_count(ult.size(), 0);
  for (const auto& c : cells)
    for (auto i : c) ++owner_count[i];
  for (std::size_t i = 0; i < ult.size(); ++i)
    if (owner_count[i] != 1)
      r.fail(Json{{"reason", "cells do not partition Ult(X)"}, {"index", i}, {"cells", owner_count[i]}});

  std::size_t subcovers_checked = 0;
  for (std::uint32_t sub = 0; sub + 1 < (1u << n); ++sub) {
    std::set<std::size_t> covered;
    for (unsigned x = 0; x < n; ++x)
      if (sub & (1u << x)) covered.insert(cells[x].begin(), cells[x].end());
    ++subcovers_checked;
    if (covered.size() == ult.size()) {
      std::vector<unsigned> pts;
      for (unsigned x = 0; x < n; ++x)
        if (sub & (1u << x)) pts.push_back(x);
      r.fail(Json{{"reason", "a proper subcollection covers Ult(X)"}, {"points", pts}});
    }
  }

  Json sizes = Json::array();
  for (const auto& c : cells) sizes.push_back(c.size());
  r.data()["cell_sizes"] = sizes;
  if (r.passed())
    r.set_witness(Json{{"ultratopologies", ult.size()},
                       {"cells", n},
                       {"proper_subcollections_checked", subcovers_checked}});
  return r;
}

}  // namespace topcube
