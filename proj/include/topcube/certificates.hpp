#pragma once

// Product-topology machinery on the cube: subbasic sets A⁺ / A⁻, basic open
// neighbourhoods, closed-set certificates swept exactly over a finite cube,
// and coordinate-sampled limit and convergence checks for symbolic
// families over ℕ.

#include <optional>
#include <span>
#include <vector>

#include "topcube/family_expr.hpp"
#include "topcube/finite.hpp"
#include "topcube/lattice.hpp"
#include "topcube/report.hpp"
#include "topcube/topology.hpp"

namespace topcube {

/// plus: A ∈ ·, minus: A ∉ ·.
enum class Sign { plus, minus };

struct SubbasicCond {
  PointSet coord;
  Sign sign;

  bool holds(const Family& f) const { return f.contains(coord) == (sign == Sign::plus); }
};

inline SubbasicCond plus(const PointSet& a) { return {a, Sign::plus}; }
inline SubbasicCond minus(const PointSet& a) { return {a, Sign::minus}; }

/// A finite intersection of subbasic sets.
class BasicOpen {
 public:
  /// Throws Error if a coordinate appears with both signs or universes mix.
  explicit BasicOpen(std::vector<SubbasicCond> conds);

  const std::vector<SubbasicCond>& conds() const { return conds_; }
  bool contains(const Family& f) const;

 private:
  std::vector<SubbasicCond> conds_;
};

/// A closed set written as an intersection of finite unions of subbasic
/// sets, with the clauses grouped by the role they play.
class ClosedSetExpr {
 public:
  using Clause = std::vector<SubbasicCond>;

  void add(std::string group, Clause clause);
  bool contains(const Family& f) const;
  /// Clause count per group.
  Json counts() const;

 private:
  std::vector<std::pair<std::string, Clause>> clauses_;
};

/// x↑ ∩ P = ⋂_{A ∈ x} (A⁺ ∩ P) and x↓ ∩ P = ⋂_{A ∉ x} (A⁻ ∩ P), each side
/// computed independently over p's elements. Throws Error if x ∉ p.
Report interval_identity_check(const FiniteSublattice& p, const Family& x);

/// Both identities for every x in p at once, without a report.
bool interval_identities_hold(const FiniteSublattice& p);

/// C = X⁺ ∩ ∅⁺ ∩ ⋂_{D ∉ A, D ≠ ∅, X} D⁻ ∩ ⋂_{B ≠ C ∈ A} (B⁻ ∪ C⁻) swept over
/// the cube; passes iff C = {I} ∪ {{∅, B, X} : B ∈ A}. Requires nonempty
/// proper members, |A| >= 2 and n <= 4.
Report atom_closure_certificate(GroundSet u, std::span<const PointSet> collection);

/// C = X⁺ ∩ ∅⁺ ∩ ⋂_{D ∉ ∪T} D⁻ ∩ ⋂ cross-topology (A⁻ ∪ B⁻)
///     ∩ ⋂ within-topology (A⁺ ∪ B⁻)
/// swept over the cube; passes iff C = T ∪ {I}. Requires pairwise disjoint
/// topologies other than I and n <= 4.
Report disjoint_closure_certificate(GroundSet u, std::span<const Topology> ts);

/// Member list of a certificate sweep is included when at most this many.
inline constexpr std::size_t kMaxListedMembers = 32;
/// is_limit_point_sampled enumerates 2^|coords| neighbourhoods.
inline constexpr std::size_t kMaxSampledCoords = 10;

/// Coordinate where a and b differ, searched among `coords` and the
/// landmarks of both expressions.
std::optional<PeriodicSet> separating_coordinate(const FamilyExpr& a, const FamilyExpr& b,
                                                 std::span<const PeriodicSet> coords,
                                                 std::size_t depth);

/// For every basic neighbourhood of x built from a subset of `coords` (signs
/// taken from x), searches p(0..depth) for a member distinct from x inside
/// it. Fail when p is declared constant from some stage <= depth and a
/// neighbourhood holds no such member; inconclusive when the search runs
/// out otherwise.
Report is_limit_point_sampled(const FamilyExpr& x, const FamilySequence& p,
                              std::span<const PeriodicSet> coords, std::size_t depth);

/// Per coordinate, membership in p(0..depth) must settle on membership in
/// `limit`.
Report sequence_convergence_check(const FamilySequence& p, const FamilyExpr& limit,
                                  std::span<const PeriodicSet> coords, std::size_t depth);

/// A finite well-ordered chain has no limit stage; passes once the input is
/// checked to be totally ordered (throws Error otherwise).
Report ordinal_homeo_check(std::span<const Family> chain);

/// Chain of type ω+1: the stages of c followed by `limit`. The order map is a
/// homeomorphism iff limit equals the union of the stages; checked on each
/// coordinate against c's declared union (itself checked against the stages
/// up to `bound`).
Report ordinal_homeo_check(const OmegaChain& c, const FamilyExpr& limit,
                           std::span<const PeriodicSet> coords,
                           std::size_t bound = kDefaultStabilizationBound);

}  // namespace topcube
