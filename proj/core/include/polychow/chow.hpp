#pragma once

#include <cstdint>
#include <string>

#include "polychow/counting.hpp"

namespace polychow {

/// Vol(P) * Σ_{a ∈ P ∩ (Z/i)^2} f(a) - E_P(i) * ∫_P f dv.
RatVec2 chow_eval(const Polygon& p, const AffineMap& f, std::int64_t i);
inline RatVec2 chow_eval(const Polygon& p, std::int64_t i) {
  return chow_eval(p, AffineMap::identity(), i);
}

/// Chow weight for the coordinate function as a polynomial in i, assembled
/// from the Ehrhart and lattice-sum polynomials. The i^2 terms cancel in exact
/// arithmetic; a surviving one raises Error{InternalInconsistency}.
VecPoly chow_poly(const Polygon& p);

/// Rank (0, 1 or 2) of the 2x2 matrix with rows q.c1 and q.c0. Requires
/// q.c2 == 0.
int coefficient_span_dim(const VecPoly& q);

/// Outcome of one transformation-law check: `lhs` and `rhs` are the two sides
/// of the law, evaluated independently.
struct LawCheck {
  std::string law;
  RatVec2 lhs;
  RatVec2 rhs;
  bool holds() const { return lhs == rhs; }
};

/// Chow_{P+c}(x; i) == Chow_P(x; i) for integral c.
LawCheck check_translation_invariance(const Polygon& p, const IntVec2& c, std::int64_t i);
/// Chow_{UP}(x; i) == U Chow_P(x; i) for det U = 1.
LawCheck check_unimodular_equivariance(const Polygon& p, const IntMat2& u, std::int64_t i);
/// Chow_{kP}(x; i) == k^3 Chow_P(x; ki).
LawCheck check_scaling_law(const Polygon& p, std::int64_t k, std::int64_t i);

}  // namespace polychow
