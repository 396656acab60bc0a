#pragma once

// Ultrafilters, traces and ultratopologies on a finite ground set. Every
// ultrafilter on a finite set is principal, so the constructions here are
// the finite instances of the general ones.

#include <vector>

#include "topcube/finite.hpp"
#include "topcube/report.hpp"
#include "topcube/topology.hpp"

namespace topcube {

/// Upward closed, closed under ∩, and for every A exactly one of A and X∖A
/// is a member.
bool is_ultrafilter(const Family& f);

/// {A : p ∈ A}.
class PrincipalUltrafilter {
 public:
  PrincipalUltrafilter(GroundSet u, unsigned point);
  /// Throws Error unless f is an ultrafilter (hence principal).
  static PrincipalUltrafilter from_family(const Family& f);

  GroundSet universe() const { return u_; }
  unsigned point() const { return point_; }
  const Family& members() const { return members_; }
  bool contains(const PointSet& a) const { return members_.contains(a); }

  friend bool operator==(const PrincipalUltrafilter&, const PrincipalUltrafilter&) = default;

 private:
  GroundSet u_;
  unsigned point_;
  Family members_;
};

/// One ultrafilter per point, in point order.
std::vector<PrincipalUltrafilter> all_ultrafilters(GroundSet u);

/// Ultrafilters not containing {x}.
std::vector<PrincipalUltrafilter> type_of(GroundSet u, unsigned x);

/// Order-preserving relabelling of X∖A onto 0..|X∖A|-1.
struct Reindex {
  GroundSet source;
  GroundSet target;
  /// kept[j] is the source point relabelled to j.
  std::vector<unsigned> kept;

  PointSet to_target(const PointSet& s) const;
  PointSet to_source(const PointSet& s) const;
};

/// Reindex for X∖a. Throws Error if a = X.
Reindex reindex_without(GroundSet u, const PointSet& a);

struct Trace {
  Family family;  // over X∖a, relabelled
  Reindex reindex;
};

/// {N ∩ (X∖a) : N ∈ f}, relabelled onto X∖a. Throws Error if f's point is
/// in a.
Trace trace(const PrincipalUltrafilter& f, const PointSet& a);

/// The trace kept in the original labels: {N ∖ a : N ∈ f} as a family on X.
Family trace_in_place(const Family& f, const PointSet& a);

/// H ∪ {M ∪ {x} : M ∈ H} for an ultrafilter h on X∖{x}; u is the full
/// ground set.
PrincipalUltrafilter extend_trace(const PrincipalUltrafilter& h, GroundSet u, unsigned x);

/// P(X∖{x}) ∪ U for an ultrafilter U with {x} ∉ U.
class Ultratopology {
 public:
  /// Throws Error if f is principal at x.
  Ultratopology(unsigned x, PrincipalUltrafilter f);

  unsigned excluded() const { return x_; }
  const PrincipalUltrafilter& ultrafilter() const { return f_; }
  const Family& family() const { return family_; }

  friend bool operator==(const Ultratopology& a, const Ultratopology& b) {
    return a.family_ == b.family_;
  }

 private:
  unsigned x_;
  PrincipalUltrafilter f_;
  Family family_;
};

/// TYPE[x]: the ultratopologies omitting {x}, one per member of TYPE(x).
std::vector<Ultratopology> ultratopologies_omitting(GroundSet u, unsigned x);

/// Ult(X), grouped by excluded point.
std::vector<Ultratopology> all_ultratopologies(GroundSet u);

/// Reconstruction F = F_x ∪ {M ∪ {x}}, trace is an ultrafilter, and
/// injectivity of F ↦ F_x, over every F ∈ TYPE(x). Requires n >= 2.
Report verify_trace_reconstruction(GroundSet u, unsigned x);

/// F ↦ F_x is a bijection TYPE(x) → ultrafilters on X∖{x}: the two sides
/// have equal size and trace / extend_trace are mutually inverse.
Report verify_trace_bijection(GroundSet u, unsigned x);

/// Subbasic correspondence between ultrafilters on X∖{x} and TYPE[x]:
/// A' ↔ (A ∪ {x})⁺ ∩ TYPE[x] for A ⊆ X∖{x}, A⁺ ∩ TYPE[x] = TYPE[x], and
/// B⁺ ∩ TYPE[x] ↔ (B∖{x})' when x ∈ B. Requires n >= 2.
Report verify_subbase_correspondence(GroundSet u, unsigned x);

/// {x}⁻ ∩ Ult(X) = TYPE[x] for every x, the cells partition Ult(X), and no
/// proper subcollection of the cover {x}⁻ covers Ult(X). Requires n >= 3.
Report ultratopology_cover(GroundSet u);

}  // namespace topcube
