#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "polychow/geometry.hpp"

namespace polychow {

/// c2 i^2 + c1 i + c0 with exact coefficients.
struct ScalarPoly {
  Rational c2, c1, c0;

  Rational operator()(const Rational& i) const { return (c2 * i + c1) * i + c0; }
  friend bool operator==(const ScalarPoly&, const ScalarPoly&) = default;
};

/// c2 i^2 + c1 i + c0 with plane-vector coefficients.
struct VecPoly {
  RatVec2 c2, c1, c0;

  RatVec2 operator()(const Rational& i) const { return i * i * c2 + i * c1 + c0; }
  bool is_zero() const { return c2.is_zero() && c1.is_zero() && c0.is_zero(); }

  friend VecPoly operator+(const VecPoly& a, const VecPoly& b) {
    return {a.c2 + b.c2, a.c1 + b.c1, a.c0 + b.c0};
  }
  friend VecPoly operator-(const VecPoly& a, const VecPoly& b) {
    return {a.c2 - b.c2, a.c1 - b.c1, a.c0 - b.c0};
  }
  friend bool operator==(const VecPoly&, const VecPoly&) = default;
};

std::ostream& operator<<(std::ostream& os, const ScalarPoly& p);
std::ostream& operator<<(std::ostream& os, const VecPoly& p);

/// Upper bound on lattice points (or scan rows) a single enumeration may
/// visit before failing with Error{EnumerationLimit}. Defaults to 10^8.
void set_enumeration_limit(std::uint64_t limit);
std::uint64_t enumeration_limit();

/// One row y of iP ∩ Z^2: the integer x with xmin <= x <= xmax.
struct LatticeRow {
  Integer y, xmin, xmax;
};

/// Calls `visit` for every nonempty row of iP ∩ Z^2 in increasing y. Bounds
/// come from exact rational floor/ceil of the half-plane intersection.
void scan_rows(const Polygon& p, std::int64_t i, const std::function<void(const LatticeRow&)>& visit);

/// All points of iP ∩ Z^2 in lexicographic (x, y) order.
std::vector<IntVec2> lattice_points(const Polygon& p, std::int64_t i);

/// #(iP ∩ Z^2). Valid for any rational polygon.
Integer ehrhart_eval(const Polygon& p, std::int64_t i);

/// Area i^2 + (E(1) - Area - 1) i + 1, checked against enumeration at i = 2, 3.
/// Throws Error{NotLatticePolygon} for rational vertices.
ScalarPoly ehrhart_poly(const Polygon& p);

/// Sum of the points of P ∩ (Z/i)^2, i.e. (1/i) times the sum over iP ∩ Z^2.
RatVec2 sum_points(const Polygon& p, std::int64_t i);

/// Degree-2 interpolation through the moment integral, s(1) and s(2); checked
/// against enumeration at i = 3, 4. Requires a lattice polygon.
VecPoly sum_poly(const Polygon& p);

/// Sum of f(a) over a in P ∩ (Z/i)^2.
RatVec2 p_delta(const Polygon& p, const AffineMap& f, std::int64_t i);

/// Points of the closed segment iS ∩ Z^2 (lexicographic order).
std::vector<IntVec2> lattice_points(const Segment& s, std::int64_t i);
Integer ehrhart_eval(const Segment& s, std::int64_t i);
/// Sum of f(a) over a in S ∩ (Z/i)^2.
RatVec2 p_delta(const Segment& s, const AffineMap& f, std::int64_t i);

/// ∫_P f(x) dv for an affine f.
RatVec2 integrate(const Polygon& p, const AffineMap& f);

}  // namespace polychow
