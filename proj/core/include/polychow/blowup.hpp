#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polychow/chow.hpp"
#include "polychow/error.hpp"

namespace polychow {

/// Chop the corner at `vertex`, moving `depth` primitive steps along each of
/// the two edges that leave it.
struct CornerCut {
  RatVec2 vertex;
  Rational depth;
};

/// base = chopped ∪ simplices[0] ∪ ... with pairwise disjoint simplices,
/// each meeting `chopped` in its seam.
///
/// Everything indexed by cut (simplices, seams, depths, frames) follows the
/// order of `cuts`. `k` is the least positive integer with k * chopped
/// integral; `depths` are the integers m_a = k * cut depth, and `frames` the
/// det = +1 corner matrices of `base` at each cut vertex.
struct Decomposition {
  Polygon base;
  std::vector<CornerCut> cuts;
  Polygon chopped;
  std::vector<Polygon> simplices;
  std::vector<Segment> seams;
  std::int64_t k = 1;
  std::vector<std::int64_t> depths;
  std::vector<IntMat2> frames;
  Rational M;       // Σ m_a
  Rational Mtilde;  // Σ m_a^2
  Rational A;       // #(∂(k base) ∩ Z^2) - M
  Rational B;       // 2 Vol(k base) - Mtilde
  bool chopped_is_delzant = true;
};

/// Builds and validates a corner-chop decomposition.
///
/// `base` must have unimodular corners (Error{NotDelzant}); its vertices may
/// be rational. Errors: InvalidCutVertex (not a vertex, repeated vertex,
/// non-positive depth), CutThroughEdge (depth reaches an adjacent vertex),
/// OverlappingCuts (simplices intersect).
///
/// k * base and the depths k * t are always integral: k(q - r) = kt(e1 - e2)
/// with e1 - e2 primitive. Both are still checked.
Decomposition chop_corners(const Polygon& base, const std::vector<CornerCut>& cuts);

/// Closed forms for the right triangle with legs m (and its hypotenuse l_m).
struct SimplexClosedForms {
  Rational volume;     // m^2 / 2
  RatVec2 sum_diff;    // s_{Δ_m}(i) - s_{l_m}(i)
  Rational count_diff; // E_{Δ_m}(i) - E_{l_m}(i)
  RatVec2 moment;      // ∫_{Δ_m} x dv
};
SimplexClosedForms simplex_closed_forms(std::int64_t m, std::int64_t i);

struct DfInvariants {
  RatVec2 df1;  // coefficient of i
  RatVec2 df2;  // constant term
};

/// The two correction vectors of the blow-up formula. `measure` selects the
/// boundary measure used for ∫_{∂(kΔ)} x dσ; anything but Lattice is a fault
/// injection.
DfInvariants df_invariants(const Decomposition& d, EdgeMeasure measure = EdgeMeasure::Lattice);

/// Chow_{kΔ}(x; i) + i DF1 + DF2.
VecPoly chow_after_blowup(const Decomposition& d, EdgeMeasure measure = EdgeMeasure::Lattice);

struct BlowupCheckRow {
  std::int64_t i;
  RatVec2 formula;  // chow_after_blowup(d)(i)
  RatVec2 direct;   // chow_eval(k * chopped, i) by enumeration
  bool equal() const { return formula == direct; }
};

struct BlowupVerification {
  std::vector<BlowupCheckRow> rows;
  bool ok() const;
  std::optional<BlowupCheckRow> first_mismatch() const;
};

/// Compares the blow-up formula with direct enumeration on k * chopped for
/// i = 1..i_max (i_max >= 2).
BlowupVerification verify_blowup_theorem(const Decomposition& d, std::int64_t i_max,
                                         EdgeMeasure measure = EdgeMeasure::Lattice);

class VerificationMismatch : public Error {
 public:
  explicit VerificationMismatch(const BlowupCheckRow& row);
  const BlowupCheckRow& row() const { return row_; }

 private:
  BlowupCheckRow row_;
};

/// Throws VerificationMismatch for the first differing i, if any.
void require_verified(const BlowupVerification& v);

/// Right-hand side of the general (any affine f) blow-up identity, with every
/// P, E, Vol and ∫ term computed directly on kΔ, kD_a and the seams kL_a,
/// minus the directly computed Chow_{kΔ'}(f; i). Zero when the identity holds.
RatVec2 verify_general_identity(const Decomposition& d, const AffineMap& f, std::int64_t i);

/// E_{kΔ}(i) - [E_{kΔ'}(i) + Σ (E_{kD_a}(i) - E_{kL_a}(i))] and the same for
/// the lattice sums, all by enumeration.
struct AdditivityResidual {
  Integer count;
  RatVec2 sum;
};
AdditivityResidual additivity_residual(const Decomposition& d, std::int64_t i);

}  // namespace polychow
