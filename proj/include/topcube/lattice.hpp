#pragma once

// Sublattices of the cube: generation, relation sets, completeness, and the
// completion of chains.

#include <span>
#include <vector>

#include "topcube/family_expr.hpp"
#include "topcube/finite.hpp"
#include "topcube/report.hpp"

namespace topcube {

/// A finite set of families closed under meet and join.
class FiniteSublattice {
 public:
  /// Throws Error if `elements` is empty, mixes universes or is not closed.
  FiniteSublattice(GroundSet u, std::vector<Family> elements);

  GroundSet universe() const { return u_; }
  /// Sorted by word.
  const std::vector<Family>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(const Family& f) const;

 private:
  GroundSet u_;
  std::vector<Family> elements_;
};

/// Least sublattice containing `gens` (worklist closure under binary meet and
/// join). Throws Error on an empty generator list.
FiniteSublattice lat_generate(GroundSet u, std::span<const Family> gens);

/// Least sublattice of P(X) containing the given subsets, as a family. ∅ and
/// X are not adjoined. Throws Error on an empty generator list.
Family lat_generate_sets(GroundSet u, std::span<const PointSet> gens);

/// Every family comparable with every member of s. Requires n <= 4.
std::vector<Family> relations_set(GroundSet u, std::span<const Family> s);

/// Every nonempty subset of `fams` has its meet and join inside `fams`.
bool is_complete_family_set(std::span<const Family> fams);
bool is_complete_sublattice(const FiniteSublattice& p);

/// Every nonempty subset of `fams` has its join inside `fams`.
bool is_join_complete_family_set(std::span<const Family> fams);

/// Pairwise comparable.
bool is_chain(std::span<const Family> fams);

/// Evaluates
///   {⋂Ω} ∪ {⋃Ω} ∪ Ω ∪ {⋃(b↓ ∩ Ω) : b ∈ R_Ω} ∪ {⋂(b↑ ∩ Ω) : b ∈ R_Ω}
/// with strict b↓, b↑ and R_Ω from relations_set. Terms indexed by an empty
/// set are skipped. Throws Error unless `chain` is a nonempty chain over u
/// with n <= 4. Result sorted by word.
std::vector<Family> chain_completion_finite(GroundSet u, std::span<const Family> chain);

/// An increasing ω-chain of symbolic families together with its declared
/// union.
struct OmegaChain {
  FamilySequence stages;
  FamilyExpr union_expr;
};

/// Default number of stages inspected before a coordinate is declared
/// unstabilized.
inline constexpr std::size_t kDefaultStabilizationBound = 64;

/// On each probed coordinate, membership in stages 0..bound must be monotone
/// and its eventual value must equal membership in the declared union.
/// Throws Error when monotonicity fails on a coordinate. A coordinate that is
/// still false at the bound while the union contains it is inconclusive.
Report chain_completion_omega(const OmegaChain& c, std::span<const PeriodicSet> coords,
                              std::size_t bound = kDefaultStabilizationBound);

/// Checks that the lattice K generated by `gens` and every singleton contains
/// each {k} ⊆ candidate but not candidate itself. Throws Error if candidate
/// is finite.
Report join_completeness_witness(const std::vector<PeriodicSet>& gens,
                                 const PeriodicSet& candidate);

}  // namespace topcube
