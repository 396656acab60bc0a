#pragma once

// Exact encodings of P(X) and of the cube 2^P(X) for a ground set X of at
// most five points.
//
// A PointSet is an n-bit mask. A Family is a 2^n-bit word whose bit k is set
// iff the subset with mask k is a member, so equality, meet and join are
// single word operations and a sweep of the cube is a counter loop.

#include <cstdint>
#include <ranges>
#include <string>
#include <vector>

#include "topcube/error.hpp"

namespace topcube {

class GroundSet {
 public:
  static constexpr unsigned kMaxPoints = 5;
  /// Largest n for which the 2^(2^n) families can be swept.
  static constexpr unsigned kMaxSweepPoints = 4;

  explicit GroundSet(unsigned n);

  unsigned size() const { return n_; }
  /// |P(X)| = 2^n.
  unsigned subset_count() const { return 1u << n_; }
  std::uint32_t full_mask() const { return subset_count() - 1; }
  bool sweepable() const { return n_ <= kMaxSweepPoints; }
  /// Number of families, 2^(2^n). Only meaningful when sweepable().
  std::uint64_t family_count() const { return std::uint64_t{1} << subset_count(); }

  friend bool operator==(GroundSet, GroundSet) = default;

 private:
  unsigned n_;
};

/// Throws Error unless the cube over u can be enumerated.
void require_sweepable(GroundSet u);

class PointSet {
 public:
  PointSet(GroundSet u, std::uint32_t mask);
  static PointSet empty(GroundSet u) { return PointSet(u, 0); }
  static PointSet full(GroundSet u) { return PointSet(u, u.full_mask()); }
  static PointSet singleton(GroundSet u, unsigned point);
  static PointSet of(GroundSet u, std::initializer_list<unsigned> points);

  GroundSet universe() const { return u_; }
  std::uint32_t mask() const { return mask_; }
  bool contains(unsigned point) const { return point < u_.size() && ((mask_ >> point) & 1u); }
  bool is_empty() const { return mask_ == 0; }
  bool is_full() const { return mask_ == u_.full_mask(); }
  unsigned cardinality() const;
  std::vector<unsigned> points() const;
  bool subset_of(const PointSet& other) const;

  PointSet complement() const { return PointSet(u_, ~mask_ & u_.full_mask()); }
  friend PointSet operator&(const PointSet& a, const PointSet& b);
  friend PointSet operator|(const PointSet& a, const PointSet& b);
  friend PointSet operator-(const PointSet& a, const PointSet& b);

  friend bool operator==(const PointSet&, const PointSet&) = default;
  friend auto operator<=>(const PointSet& a, const PointSet& b) { return a.mask_ <=> b.mask_; }

 private:
  GroundSet u_;
  std::uint32_t mask_;
};

std::string to_string(const PointSet& s);

class Family {
 public:
  Family(GroundSet u, std::uint64_t word);
  static Family empty(GroundSet u) { return Family(u, 0); }
  /// The trivial topology I = {∅, X}.
  static Family trivial(GroundSet u);
  /// The discrete topology D = P(X).
  static Family discrete(GroundSet u);
  static Family of(GroundSet u, std::initializer_list<std::uint32_t> masks);
  static Family of(GroundSet u, const std::vector<PointSet>& sets);

  GroundSet universe() const { return u_; }
  std::uint64_t word() const { return word_; }
  bool contains(const PointSet& s) const;
  bool contains_mask(std::uint32_t mask) const { return (word_ >> mask) & 1u; }
  unsigned size() const;
  bool is_empty() const { return word_ == 0; }
  std::vector<PointSet> members() const;

  Family with(const PointSet& s) const;
  Family without(const PointSet& s) const;

  friend bool operator==(const Family&, const Family&) = default;
  friend auto operator<=>(const Family& a, const Family& b) { return a.word_ <=> b.word_; }

 private:
  GroundSet u_;
  std::uint64_t word_;
};

std::string to_string(const Family& f);

/// Set intersection of two families.
Family meet(const Family& a, const Family& b);
/// Set union of two families.
Family join(const Family& a, const Family& b);
/// Inclusion order of the cube.
bool leq(const Family& a, const Family& b);
inline bool comparable(const Family& a, const Family& b) { return leq(a, b) || leq(b, a); }

/// All 2^(2^n) families over u in increasing word order. Requires n <= 4.
inline auto enumerate_families(GroundSet u) {
  require_sweepable(u);
  return std::views::iota(std::uint64_t{0}, u.family_count()) |
         std::views::transform([u](std::uint64_t w) { return Family(u, w); });
}

/// All 2^n subsets of u in mask order.
std::vector<PointSet> all_point_sets(GroundSet u);

}  // namespace topcube
