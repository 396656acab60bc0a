#pragma once

// Named symbolic constructions over ℕ shared by the CLI demos, the fixtures
// and the tests.

#include <vector>

#include "topcube/family_expr.hpp"
#include "topcube/lattice.hpp"

namespace topcube::scenarios {

/// C_m = first m+1 members of `enumeration`.
PeriodicSet initial_segment(const PeriodicSet& enumeration, std::size_t m);

/// Stages {C_0, ..., C_m, ∅, ℕ}; declared union {C_m : m ∈ ω} ∪ {∅, ℕ}.
OmegaChain initial_segment_chain(const PeriodicSet& enumeration);

/// {C_m : m ∈ ω} ∪ {C, ℕ, ∅}, with C the whole enumeration: the limit that
/// also contains C.
FamilyExpr initial_segment_limit(const PeriodicSet& enumeration);

/// Stages P(base ∪ first (initial + m) members of enumeration) ∪ {ℕ};
/// declared union ⋃_m P(...) ∪ {ℕ}.
OmegaChain growing_powerset_chain(const PeriodicSet& base, const PeriodicSet& enumeration,
                                  std::size_t initial = 0);

/// The union of growing_powerset_chain as a FamilyExpr.
FamilyExpr growing_powerset_union(const PeriodicSet& base, const PeriodicSet& enumeration);

/// Probes for the growing powerset chain: pairs of accumulated prefixes of
/// the enumeration and the union probe for the whole enumeration.
TopologyProbe growing_chain_probe(const PeriodicSet& base, const PeriodicSet& enumeration,
                                  std::size_t pairs);

/// {ℕ∖{0}, ℕ∖{1}}.
std::vector<PeriodicSet> cofinite_pair();

/// The constant sequence at e.
FamilySequence constant_sequence(const FamilyExpr& e);

}  // namespace topcube::scenarios
