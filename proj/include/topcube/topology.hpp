#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "topcube/finite.hpp"

namespace topcube {

/// Contains ∅ and X and is closed under pairwise ∩ and ∪ (on a finite set
/// this is closure under arbitrary unions).
bool is_topology(const Family& f);

/// Same axioms as is_topology: ∅, X and pairwise ∩, ∪ closure. Over a finite
/// ground set the two classes coincide.
bool is_bounded_sublattice(const Family& f);

/// A family checked to satisfy the topology axioms.
class Topology {
 public:
  /// Throws Error if f is not a topology.
  explicit Topology(Family f);

  const Family& family() const { return f_; }
  GroundSet universe() const { return f_.universe(); }
  bool is_open(const PointSet& s) const { return f_.contains(s); }
  /// Open sets other than ∅ and X.
  std::vector<PointSet> proper_opens() const;

  friend bool operator==(const Topology&, const Topology&) = default;
  friend auto operator<=>(const Topology& a, const Topology& b) { return a.f_ <=> b.f_; }

 private:
  Family f_;
};

/// Least topology containing `subbase`, with ∅ and X adjoined. An empty
/// subbase gives the trivial topology.
Topology top_generate(GroundSet u, std::span<const PointSet> subbase);

/// The 2^n - 2 atoms {∅, A, X}, A nonempty and proper, in mask order of A.
/// Requires n >= 2.
std::vector<Topology> atoms_of(GroundSet u);

/// The meet is the trivial topology.
bool are_disjoint(const Topology& a, const Topology& b);

/// Number of topologies on u by a sweep of the cube. Requires n <= 4.
std::uint64_t count_topologies(GroundSet u);

/// Every topology on u, in word order. Requires n <= 4.
std::vector<Topology> all_topologies(GroundSet u);

/// An injection Y -> X given as the image of each point of Y.
class Injection {
 public:
  /// Throws Error unless images are distinct points of `target`.
  Injection(GroundSet source, GroundSet target, std::vector<unsigned> image);
  static Injection identity(GroundSet u);

  GroundSet source() const { return source_; }
  GroundSet target() const { return target_; }
  unsigned operator()(unsigned y) const { return image_.at(y); }
  /// i⁻¹(A) as a subset of the source.
  PointSet preimage(const PointSet& a) const;

 private:
  GroundSet source_;
  GroundSet target_;
  std::vector<unsigned> image_;
};

/// ρ_X = {A ⊆ X : i⁻¹(A) ∈ ρ} ∪ {X}, a topology on the target of i.
Topology inject_topology(const Topology& rho, const Injection& i);

}  // namespace topcube
