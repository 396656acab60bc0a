#pragma once

// Symbolic families of subsets of ℕ with decidable membership.
//
// Every expression denotes a point of the cube 2^P(ℕ). The grammar is
// closed: each node kind has an exact membership procedure over
// PeriodicSet arguments.

#include <memory>
#include <utility>
#include <variant>
#include <vector>

#include "topcube/periodic.hpp"
#include "topcube/report.hpp"

namespace topcube {

struct FamilyNode;

class FamilyExpr {
 public:
  /// Generator lists for the generated kinds are capped so that the set of
  /// finite meets (at most 2^16 - 1 candidates) stays enumerable.
  static constexpr std::size_t kMaxGenerators = 16;

  /// Exactly the listed sets.
  static FamilyExpr listed(std::vector<PeriodicSet> sets);
  /// All subsets of `bound`.
  static FamilyExpr down_pow(PeriodicSet bound);
  /// The topology with subbase `subbase` ∪ {∅, ℕ}.
  static FamilyExpr top_gen(std::vector<PeriodicSet> subbase);
  /// The sublattice of P(ℕ) generated by finite meets and joins of `gens`.
  /// ∅ and ℕ are not adjoined.
  static FamilyExpr lat_gen(std::vector<PeriodicSet> gens);
  /// The sublattice generated by `gens` together with every singleton {k}.
  static FamilyExpr lat_gen_singletons(std::vector<PeriodicSet> gens);
  static FamilyExpr union_of(FamilyExpr a, FamilyExpr b);
  /// {C_m : m ∈ ω} ∪ extras, C_m being the first m+1 members of
  /// `enumeration` (which must be infinite).
  static FamilyExpr chain_initials(PeriodicSet enumeration, std::vector<PeriodicSet> extras);
  /// ⋃_m P(base ∪ {first m members of enumeration}): the union of an
  /// increasing chain of power sets. `enumeration` must be infinite.
  static FamilyExpr down_pow_chain(PeriodicSet base, PeriodicSet enumeration);

  bool contains(const PeriodicSet& a) const;

  /// {k : {k} is a member}. Exact for every kind.
  PeriodicSet singleton_support() const;

  /// Sets the expression names explicitly, plus the first `depth` stages of
  /// any chain it contains. Used as a pool of coordinates that may separate
  /// two expressions.
  std::vector<PeriodicSet> landmarks(std::size_t depth) const;

  const FamilyNode& node() const { return *node_; }

  friend bool operator==(const FamilyExpr& a, const FamilyExpr& b);

 private:
  explicit FamilyExpr(std::shared_ptr<const FamilyNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const FamilyNode> node_;
};

struct ListedSets {
  std::vector<PeriodicSet> sets;
};
struct DownPow {
  PeriodicSet bound;
};
struct TopGen {
  std::vector<PeriodicSet> subbase;
  std::vector<PeriodicSet> meets;  // distinct nonempty-index intersections
};
struct LatGen {
  std::vector<PeriodicSet> gens;
  std::vector<PeriodicSet> meets;
};
struct LatGenSingletons {
  std::vector<PeriodicSet> gens;
  std::vector<PeriodicSet> meets;
};
struct UnionOf {
  FamilyExpr a;
  FamilyExpr b;
};
struct ChainInitials {
  PeriodicSet enumeration;
  std::vector<PeriodicSet> extras;
};
struct DownPowChain {
  PeriodicSet base;
  PeriodicSet enumeration;
};

struct FamilyNode {
  std::variant<ListedSets, DownPow, TopGen, LatGen, LatGenSingletons, UnionOf, ChainInitials,
               DownPowChain>
      body;
};

/// All intersections of nonempty sub-collections of `gens`, deduplicated.
std::vector<PeriodicSet> finite_meets(const std::vector<PeriodicSet>& gens);

/// Probes for refuting the topology axioms on a symbolic family.
struct TopologyProbe {
  /// Pairs (a, b): when both are members, a ∩ b and a ∪ b must be.
  std::vector<std::pair<PeriodicSet, PeriodicSet>> pairs;
  /// Sets t: when every singleton {k} ⊆ t is a member, t is a union of
  /// members and must itself be one.
  std::vector<PeriodicSet> unions;
};

/// Finite-probe refutation of the topology axioms. Pass means no refutation
/// was found among the probes; fail carries the offending sets.
Report check_topology_symbolic(const FamilyExpr& e, const TopologyProbe& probe);

}  // namespace topcube

#include <functional>
#include <optional>
#include <string>

namespace topcube {

/// A sequence m ↦ FamilyExpr of symbolic families, indexed from 0.
struct FamilySequence {
  std::string name;
  std::function<FamilyExpr(std::size_t)> term;
  /// Declares term(m) ⊆ term(m+1); checked on every probed coordinate.
  bool increasing = false;
  /// When set, term(m) == term(constant_from) for all m >= constant_from.
  std::optional<std::size_t> constant_from;

  FamilyExpr operator()(std::size_t m) const { return term(m); }
};

/// Membership of `a` in term(0), ..., term(depth).
std::vector<bool> membership_trace(const FamilySequence& seq, const PeriodicSet& a,
                                   std::size_t depth);

}  // namespace topcube
