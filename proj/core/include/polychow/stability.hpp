#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "polychow/blowup.hpp"

namespace polychow {

/// (FO(x1; i), FO(x2; i)): lattice-point average minus barycenter. The value
/// for an affine l is dot(linear part of l, this vector).
RatVec2 fo_invariant(const Polygon& p, std::int64_t i);

/// P == -P.
bool is_centrally_symmetric(const Polygon& p);

/// Finite subgroup of SL(2, Z) generated by the given matrices.
class SymmetryGroup {
 public:
  static constexpr std::size_t kDefaultCap = 10'000;

  /// Closes the generators under products. Throws Error{InvalidArgument} for
  /// det != 1 and Error{GroupClosureOverflow} once the group is seen to be
  /// infinite (an element of infinite order, or more than `cap` elements).
  static SymmetryGroup generate(const std::vector<IntMat2>& generators, std::size_t cap = kDefaultCap);

  const std::vector<IntMat2>& generators() const { return generators_; }
  /// Sorted; always contains the identity.
  const std::vector<IntMat2>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }

 private:
  std::vector<IntMat2> generators_;
  std::vector<IntMat2> elements_;
};

/// Every g maps the vertex set of P onto itself and Σ_g g = 0.
bool is_weakly_symmetric(const Polygon& p, const SymmetryGroup& g);

/// #(P ∩ Z^2) / Vol(P).
Rational c_constant(const Polygon& p);

/// LHS - RHS of the blow-up identity for the lattice-point sums of l over the
/// chopped polygon, for l = 1, x1, x2 in that order.
///
/// Requires d.k == 1 and fo_invariant(d.base, 1) == 0, otherwise throws
/// Error{HypothesisNotMet}.
std::array<Rational, 3> lattice_sum_identity_residual(const Decomposition& d);

/// (c_Δ - c_Δ') Vol(Δ) + (c_Δ' - 6) Σ Vol(D_a) + Σ #(L_a ∩ Z^2). Same
/// hypotheses as lattice_sum_identity_residual.
Rational ell1_condition(const Decomposition& d);

/// Distinct points of the projective plane, stored as primitive integer
/// triples whose first nonzero coordinate is positive.
class PointConfiguration {
 public:
  using Point = std::array<Integer, 3>;

  /// Throws Error{InvalidArgument} for (0, 0, 0) or a repeated point.
  static PointConfiguration from_rationals(const std::vector<std::array<Rational, 3>>& points);

  const std::vector<Point>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }

  /// Primitive representative of a nonzero triple, sign normalized.
  static Point normalize(const std::array<Rational, 3>& v);

 private:
  std::vector<Point> points_;
};

enum class Stability { Stable, Unstable, Borderline };
std::string_view to_string(Stability s);

/// A point (dim 0, coords = the point) or a line (dim 1, coords = its
/// primitive dual coordinates, so the line is {x : coords . x = 0}).
struct Subspace {
  int dim = 0;
  PointConfiguration::Point coords;
  friend bool operator==(const Subspace&, const Subspace&) = default;
  friend auto operator<=>(const Subspace&, const Subspace&) = default;
};

struct MukaiResult {
  Stability verdict;
  Subspace witness;     // candidate with the largest incidence / threshold
  std::size_t incidences = 0;
  Rational ratio;       // incidences / #points for the witness
  Rational threshold;   // (dim + 1) / 3 for the witness
  Rational max_ratio;   // largest incidences / #points over all candidates
};

/// Compares #(Λ ∩ V) / #Λ with (dim V + 1) / 3 over every point of Λ and every
/// line through two of them. Ties in the witness go to the smallest Subspace.
/// Throws Error{EmptyConfiguration} when there are no points.
MukaiResult mukai_classify(const PointConfiguration& points);

}  // namespace polychow
