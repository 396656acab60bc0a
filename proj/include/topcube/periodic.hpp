#pragma once

// Eventually periodic subsets of ℕ.
//
// A set is a preperiod word followed by a period word repeated forever:
// i < |pre| is a member iff pre[i], and i >= |pre| iff
// period[(i - |pre|) mod |period|]. Values are kept canonical (primitive
// period, shortest preperiod), so structural equality is extensional
// equality.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "topcube/error.hpp"

namespace topcube {

class PeriodicSet {
 public:
  using Bits = std::vector<bool>;

  /// The empty set.
  PeriodicSet();
  /// Canonicalizes (pre, period). period must be nonempty.
  PeriodicSet(Bits pre, Bits period);
  /// Parses '0'/'1' words, e.g. ("110", "10").
  static PeriodicSet parse(std::string_view pre, std::string_view period);

  static PeriodicSet empty() { return PeriodicSet(); }
  static PeriodicSet naturals();
  static PeriodicSet singleton(std::uint64_t k);
  static PeriodicSet finite(const std::vector<std::uint64_t>& elements);
  /// {i : i mod modulus == residue}.
  static PeriodicSet residue(std::uint64_t modulus, std::uint64_t residue);
  static PeriodicSet evens() { return residue(2, 0); }
  static PeriodicSet odds() { return residue(2, 1); }
  /// {i : i >= k}.
  static PeriodicSet from(std::uint64_t k);

  const Bits& pre() const { return pre_; }
  const Bits& period() const { return period_; }
  std::string pre_string() const;
  std::string period_string() const;

  bool contains(std::uint64_t i) const;
  bool is_finite() const;
  bool is_empty() const { return is_finite() && pre_.empty(); }
  bool is_cofinite() const;
  /// Number of members; only for finite sets.
  std::uint64_t cardinality() const;
  /// Smallest member, if any.
  std::optional<std::uint64_t> min() const;
  /// The k-th smallest member (0-based), if the set has more than k members.
  std::optional<std::uint64_t> nth(std::uint64_t k) const;
  /// The set of the first `count` members (all of them if fewer exist).
  PeriodicSet first(std::uint64_t count) const;
  /// Members below `bound`, in increasing order.
  std::vector<std::uint64_t> members_below(std::uint64_t bound) const;
  /// Length of pre plus one period: agreement on [0, span) decides equality
  /// with any set of the same alignment.
  std::uint64_t span() const { return pre_.size() + period_.size(); }

  PeriodicSet complement() const;
  PeriodicSet with(std::uint64_t k) const;
  PeriodicSet without(std::uint64_t k) const;

  friend bool operator==(const PeriodicSet&, const PeriodicSet&) = default;
  /// Arbitrary but total order on canonical forms, for use as a map key.
  friend bool operator<(const PeriodicSet& a, const PeriodicSet& b);

 private:
  void canonicalize();

  Bits pre_;
  Bits period_;
};

PeriodicSet operator|(const PeriodicSet& a, const PeriodicSet& b);
PeriodicSet operator&(const PeriodicSet& a, const PeriodicSet& b);
PeriodicSet operator-(const PeriodicSet& a, const PeriodicSet& b);
PeriodicSet operator~(const PeriodicSet& a);

bool subset_of(const PeriodicSet& a, const PeriodicSet& b);

/// Canonical words as "pre(period)", e.g. "110(10)".
std::string to_string(const PeriodicSet& s);

}  // namespace topcube
