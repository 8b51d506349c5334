#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "b1/algebra.hpp"
#include "b1/congruences.hpp"

namespace b1 {

/// Subset of the points of a FiniteSpace, as a bitmask (at most 64 points).
using PointSet = std::uint64_t;

inline constexpr std::size_t kMaxPoints = 64;

/// A finite topological space given by its family of closed sets.
struct FiniteSpace {
  std::size_t num_points = 0;
  std::vector<PointSet> closed_sets;  // sorted, deduplicated

  /// Deduplicates and sorts `family`, then checks that it contains the empty
  /// set and the whole space and is closed under union and intersection.
  /// Throws InvariantViolation otherwise.
  static FiniteSpace from_closed_sets(std::size_t num_points, std::vector<PointSet> family);

  PointSet all() const { return num_points == 64 ? ~PointSet{0} : (PointSet{1} << num_points) - 1; }
  bool is_closed(PointSet s) const;
  bool is_open(PointSet s) const { return is_closed(all() & ~s); }
  /// Smallest closed set containing s.
  PointSet closure(PointSet s) const;
  std::vector<PointSet> open_sets() const;
};

/// Points of a spectrum together with its topology; point i of `space` is
/// `points[i]`.
template <class Point>
struct Spectrum {
  std::vector<Point> points;
  FiniteSpace space;
};

/// Distinct points have distinct closures.
bool check_t0(const FiniteSpace& x);

struct GenericPoint {
  PointSet closed_set;
  std::size_t point;
};

/// For every irreducible closed set, its unique generic point. Throws
/// NotSober naming the closed set if one has no generic point or several.
std::vector<GenericPoint> sober_report(const FiniteSpace& x);

/// `map[i]` is the image of point i. True iff map is a bijection carrying the
/// closed-set family of x exactly onto that of y.
bool is_homeomorphism(const FiniteSpace& x, const FiniteSpace& y, std::span<const std::size_t> map);

/// W(S): prime ideals containing s.
std::vector<ElementSet> closed_W(const Algebra& a, ElementSet s, const Budget& budget = {});

/// V(S): prime congruences whose zero class contains s.
std::vector<Congruence> closed_V(const Algebra& a, ElementSet s, const Budget& budget = {});

/// D(f): saturated prime ideals not containing f.
std::vector<ElementSet> basic_open_D(const Algebra& a, Element f, const Budget& budget = {});

/// Pr_s(A) with closed sets Pr_s(A) ∩ W(I), I ranging over the ideals.
Spectrum<ElementSet> prs_space(const Algebra& a, const Budget& budget = {});

/// Pr(A) with closed sets W(I).
Spectrum<ElementSet> pr_space(const Algebra& a, const Budget& budget = {});

/// MaxSpec(A) with closed sets MaxSpec(A) ∩ V(I).
Spectrum<Congruence> maxspec_space(const Algebra& a, const Budget& budget = {});

/// Given generators whose basic opens D(f) cover Pr_s(A), finds x in the
/// ideal they generate with 1 + x = x, tracks which generators take part in
/// a sum expressing x, and returns those (in input order). The returned
/// sublist is checked to cover. Throws NotACover when no such x exists.
std::vector<Element> extract_finite_subcover(const Algebra& a, std::span<const Element> generators,
                                             const Budget& budget = {});

/// F = Pr_s(A) ∩ W(S) realised as the spectrum of B = A / R_I, I = sat(<S>).
struct ClosedSubspaceHomeomorphism {
  ElementSet ideal;                  // I
  Spectrum<ElementSet> closed_set;   // F with the induced topology
  Algebra quotient;                  // B
  Morphism projection;               // A -> B
  Spectrum<ElementSet> quotient_spectrum;  // Pr_s(B)
  std::vector<std::size_t> psi;      // Pr_s(B) index -> F index, Q |-> π⁻¹(Q)
};

/// Throws EmptyClosedSet if F is empty, InvariantViolation if psi fails to be
/// a homeomorphism.
ClosedSubspaceHomeomorphism closed_subspace_homeo(const Algebra& a, ElementSet s, const Budget& budget = {});

/// Each component of the spectral-space verdict for Pr_s(A).
struct SpectralReport {
  bool t0 = false;
  bool sober = false;
  bool quasi_compact = false;        // every basic-open cover admits the constructive subcover
  bool basic_opens_form_basis = false;
  bool finite_type = false;          // every open set is a finite union of D(g), g generating its complement's ideal
  bool intersection_stable = false;  // D(f) ∩ D(g) = D(fg), W(I) ∪ W(J) = W(IJ)
  std::vector<GenericPoint> generic_points;
  bool spectral() const {
    return t0 && sober && quasi_compact && basic_opens_form_basis && finite_type && intersection_stable;
  }
};

SpectralReport spectral_report(const Algebra& a, const Budget& budget = {});

}  // namespace b1
