#include "topcube/finite.hpp"

#include <bit>

namespace topcube {

GroundSet::GroundSet(unsigned n) : n_(n) {
  if (n < 1 || n > kMaxPoints)
    throw Error("ground set size must be in 1.." + std::to_string(kMaxPoints) + ", got " +
                std::to_string(n));
}

void require_sweepable(GroundSet u) {
  if (!u.sweepable())
    throw Error("exhaustive sweep needs n <= " + std::to_string(GroundSet::kMaxSweepPoints) +
                ", got " + std::to_string(u.size()));
}

PointSet::PointSet(GroundSet u, std::uint32_t mask) : u_(u), mask_(mask) {
  if (mask >= u.subset_count())
    throw Error("point-set mask " + std::to_string(mask) + " out of range for n=" +
                std::to_string(u.size()));
}

PointSet PointSet::singleton(GroundSet u, unsigned point) {
  if (point >= u.size()) throw Error("point " + std::to_string(point) + " out of range");
  return PointSet(u, 1u << point);
}

PointSet PointSet::of(GroundSet u, std::initializer_list<unsigned> points) {
  std::uint32_t mask = 0;
  for (unsigned p : points) mask |= singleton(u, p).mask();
  return PointSet(u, mask);
}

unsigned PointSet::cardinality() const { return static_cast<unsigned>(std::popcount(mask_)); }

std::vector<unsigned> PointSet::points() const {
  std::vector<unsigned> out;
  for (unsigned i = 0; i < u_.size(); ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

bool PointSet::subset_of(const PointSet& other) const {
  if (u_ != other.u_) throw UniverseMismatch();
  return (mask_ & ~other.mask_) == 0;
}

PointSet operator&(const PointSet& a, const PointSet& b) {
  if (a.u_ != b.u_) throw UniverseMismatch();
  return PointSet(a.u_, a.mask_ & b.mask_);
}

PointSet operator|(const PointSet& a, const PointSet& b) {
  if (a.u_ != b.u_) throw UniverseMismatch();
  return PointSet(a.u_, a.mask_ | b.mask_);
}

PointSet operator-(const PointSet& a, const PointSet& b) {
  if (a.u_ != b.u_) throw UniverseMismatch();
  return PointSet(a.u_, a.mask_ & ~b.mask_);
}

std::string to_string(const PointSet& s) {
  std::string out = "{";
  bool first = true;
  for (unsigned p : s.points()) {
    if (!first) out += ",";
    out += std::to_string(p);
    first = false;
  }
  return out + "}";
}

Family::Family(GroundSet u, std::uint64_t word) : u_(u), word_(word) {
  if (u.subset_count() < 64 && (word >> u.subset_count()) != 0)
    throw Error("family word has bits beyond 2^n for n=" + std::to_string(u.size()));
}

Family Family::trivial(GroundSet u) { return of(u, {0u, u.full_mask()}); }

Family Family::discrete(GroundSet u) {
  return Family(u, (std::uint64_t{1} << u.subset_count()) - 1);
}

Family Family::of(GroundSet u, std::initializer_list<std::uint32_t> masks) {
  std::uint64_t w = 0;
  for (auto m : masks) w |= std::uint64_t{1} << PointSet(u, m).mask();
  return Family(u, w);
}

Family Family::of(GroundSet u, const std::vector<PointSet>& sets) {
  std::uint64_t w = 0;
  for (const auto& s : sets) {
    if (s.universe() != u) throw UniverseMismatch();
    w |= std::uint64_t{1} << s.mask();
  }
  return Family(u, w);
}

bool Family::contains(const PointSet& s) const {
  if (s.universe() != u_) throw UniverseMismatch();
  return contains_mask(s.mask());
}

unsigned Family::size() const { return static_cast<unsigned>(std::popcount(word_)); }

std::vector<PointSet> Family::members() const {
  std::vector<PointSet> out;
  for (std::uint32_t m = 0; m < u_.subset_count(); ++m)
    if (contains_mask(m)) out.emplace_back(u_, m);
  return out;
}

Family Family::with(const PointSet& s) const {
  if (s.universe() != u_) throw UniverseMismatch();
  return Family(u_, word_ | (std::uint64_t{1} << s.mask()));
}

Family Family::without(const PointSet& s) const {
  if (s.universe() != u_) throw UniverseMismatch();
  return Family(u_, word_ & ~(std::uint64_t{1} << s.mask()));
}

std::string to_string(const Family& f) {
  std::string out = "{";
  bool first = true;
  for (const auto& s : f.members()) {
    if (!first) out += ",";
    out += to_string(s);
    first = false;
  }
  return out + "}";
}

Family meet(const Family& a, const Family& b) {
  if (a.universe() != b.universe()) throw UniverseMismatch();
  return Family(a.universe(), a.word() & b.word());
}

Family join(const Family& a, const Family& b) {
  if (a.universe() != b.universe()) throw UniverseMismatch();
  return Family(a.universe(), a.word() | b.word());
}

bool leq(const Family& a, const Family& b) {
  if (a.universe() != b.universe()) throw UniverseMismatch();
  return (a.word() & ~b.word()) == 0;
}

std::vector<PointSet> all_point_sets(GroundSet u) {
  std::vector<PointSet> out;
  out.reserve(u.subset_count());
  for (std::uint32_t m = 0; m < u.subset_count(); ++m) out.emplace_back(u, m);
  return out;
}

}  // namespace topcube
