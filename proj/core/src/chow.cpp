#include "polychow/chow.hpp"

#include "polychow/error.hpp"

namespace polychow {

RatVec2 chow_eval(const Polygon& p, const AffineMap& f, std::int64_t i) {
  return area(p) * p_delta(p, f, i) - Rational(ehrhart_eval(p, i)) * integrate(p, f);
}

VecPoly chow_poly(const Polygon& p) {
  const Rational vol = area(p);
  const RatVec2 m = moment_integral(p);
  const ScalarPoly e = ehrhart_poly(p);
  const VecPoly s = sum_poly(p);
  const VecPoly q{vol * s.c2 - e.c2 * m, vol * s.c1 - e.c1 * m, vol * s.c0 - e.c0 * m};
  if (!q.c2.is_zero()) {
    throw Error(ErrorKind::InternalInconsistency, "Chow polynomial has a nonzero i^2 coefficient");
  }
  return q;
}

int coefficient_span_dim(const VecPoly& q) {
  if (!q.c2.is_zero()) throw Error(ErrorKind::InvalidArgument, "expected a polynomial of degree <= 1");
  if (!cross(q.c1, q.c0).is_zero()) return 2;
  return (q.c1.is_zero() && q.c0.is_zero()) ? 0 : 1;
}

LawCheck check_translation_invariance(const Polygon& p, const IntVec2& c, std::int64_t i) {
  return {"translation invariance", chow_eval(translate(p, c.to_rational()), i), chow_eval(p, i)};
}

LawCheck check_unimodular_equivariance(const Polygon& p, const IntMat2& u, std::int64_t i) {
  if (u.det() != 1) throw Error(ErrorKind::InvalidArgument, "equivariance law needs det U = 1");
  return {"unimodular equivariance", chow_eval(apply_affine(p, AffineMap::linear(u)), i),
          u.apply(chow_eval(p, i))};
}

LawCheck check_scaling_law(const Polygon& p, std::int64_t k, std::int64_t i) {
  const Rational k3 = pow(Rational(k), 3);
  return {"scaling law", chow_eval(scale(p, k), i), k3 * chow_eval(p, k * i)};
}

}  // namespace polychow
