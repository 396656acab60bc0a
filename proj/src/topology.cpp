#include "topcube/topology.hpp"

#include <algorithm>

namespace topcube {

namespace {

bool closed_under_pairs(const Family& f) {
  const auto members = f.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const auto m = members[i].mask(), k = members[j].mask();
      if (!f.contains_mask(m & k) || !f.contains_mask(m | k)) return false;
    }
  }
  return true;
}

bool has_bounds(const Family& f) {
  return f.contains_mask(0) && f.contains_mask(f.universe().full_mask());
}

}  // namespace

bool is_topology(const Family& f) { return has_bounds(f) && closed_under_pairs(f); }

bool is_bounded_sublattice(const Family& f) { return has_bounds(f) && closed_under_pairs(f); }

Topology::Topology(Family f) : f_(f) {
  if (!is_topology(f_)) throw Error("not a topology: " + to_string(f_));
}

std::vector<PointSet> Topology::proper_opens() const {
  std::vector<PointSet> out;
  for (const auto& s : f_.members())
    if (!s.is_empty() && !s.is_full()) out.push_back(s);
  return out;
}

Topology top_generate(GroundSet u, std::span<const PointSet> subbase) {
  std::uint64_t word = 0;
  auto add = [&](std::uint32_t m) { word |= std::uint64_t{1} << m; };
  add(0);
  add(u.full_mask());
  for (const auto& s : subbase) {
    if (s.universe() != u) throw UniverseMismatch();
    add(s.mask());
  }
  // Fixpoint of pairwise ∩ and ∪; at most 2^n members, so this converges fast.
  for (bool grew = true; grew;) {
    grew = false;
    const Family f(u, word);
    for (const auto& a : f.members()) {
      for (const auto& b : f.members()) {
        const std::uint64_t before = word;
        add(a.mask() & b.mask());
        add(a.mask() | b.mask());
        grew = grew || word != before;
      }
    }
  }
  return Topology(Family(u, word));
}

std::vector<Topology> atoms_of(GroundSet u) {
  if (u.size() < 2) throw Error("atoms need a ground set of at least two points");
  std::vector<Topology> out;
  for (std::uint32_t a = 1; a < u.full_mask(); ++a)
    out.emplace_back(Family::of(u, {0u, a, u.full_mask()}));
  return out;
}

bool are_disjoint(const Topology& a, const Topology& b) {
  return meet(a.family(), b.family()) == Family::trivial(a.universe());
}

std::uint64_t count_topologies(GroundSet u) {
  std::uint64_t count = 0;
  for (const Family& f : enumerate_families(u))
    if (is_topology(f)) ++count;
  return count;
}

std::vector<Topology> all_topologies(GroundSet u) {
  std::vector<Topology> out;
  for (const Family& f : enumerate_families(u))
    if (is_topology(f)) out.emplace_back(f);
  return out;
}

Injection::Injection(GroundSet source, GroundSet target, std::vector<unsigned> image)
    : source_(source), target_(target), image_(std::move(image)) {
  if (image_.size() != source.size()) throw Error("injection must map every source point");
  std::uint32_t seen = 0;
  for (unsigned x : image_) {
    if (x >= target.size()) throw Error("injection image out of range");
    if (seen & (1u << x)) throw Error("map is not injective");
    seen |= 1u << x;
  }
}

Injection Injection::identity(GroundSet u) {
  std::vector<unsigned> image(u.size());
  for (unsigned i = 0; i < u.size(); ++i) image[i] = i;
  return Injection(u, u, std::move(image));
}

PointSet Injection::preimage(const PointSet& a) const {
  if (a.universe() != target_) throw UniverseMismatch();
  std::uint32_t mask = 0;
  for (unsigned y = 0; y < source_.size(); ++y)
    if (a.contains(image_[y])) mask |= 1u << y;
  return PointSet(source_, mask);
}

Topology inject_topology(const Topology& rho, const Injection& i) {
  if (rho.universe() != i.source()) throw UniverseMismatch();
  const GroundSet x = i.target();
  std::uint64_t word = std::uint64_t{1} << x.full_mask();
  for (const auto& a : all_point_sets(x))
    if (rho.is_open(i.preimage(a))) word |= std::uint64_t{1} << a.mask();
  return Topology(Family(x, word));
}

}  // namespace topcube
