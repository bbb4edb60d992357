#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "polychow/rational.hpp"

namespace polychow {

struct RatVec2 {
  Rational x;
  Rational y;

  RatVec2& operator+=(const RatVec2& o) { x += o.x; y += o.y; return *this; }
  RatVec2& operator-=(const RatVec2& o) { x -= o.x; y -= o.y; return *this; }
  RatVec2& operator*=(const Rational& s) { x *= s; y *= s; return *this; }

  friend RatVec2 operator+(RatVec2 a, const RatVec2& b) { return a += b; }
  friend RatVec2 operator-(RatVec2 a, const RatVec2& b) { return a -= b; }
  friend RatVec2 operator-(const RatVec2& a) { return {-a.x, -a.y}; }
  friend RatVec2 operator*(const Rational& s, RatVec2 v) { return v *= s; }
  friend RatVec2 operator*(RatVec2 v, const Rational& s) { return v *= s; }
  friend RatVec2 operator/(const RatVec2& v, const Rational& s) { return {v.x / s, v.y / s}; }

  friend bool operator==(const RatVec2&, const RatVec2&) = default;
  friend auto operator<=>(const RatVec2&, const RatVec2&) = default;

  bool is_zero() const { return x.is_zero() && y.is_zero(); }
  bool is_integral() const { return x.is_integer() && y.is_integer(); }
};

inline Rational dot(const RatVec2& a, const RatVec2& b) { return a.x * b.x + a.y * b.y; }
/// z-component of a × b; positive when b is counter-clockwise from a.
inline Rational cross(const RatVec2& a, const RatVec2& b) { return a.x * b.y - a.y * b.x; }

std::ostream& operator<<(std::ostream& os, const RatVec2& v);

struct IntVec2 {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const IntVec2&, const IntVec2&) = default;
  friend auto operator<=>(const IntVec2&, const IntVec2&) = default;
  RatVec2 to_rational() const { return {Rational(x), Rational(y)}; }
};

/// Integer 2x2 matrix [[a, b], [c, d]]. Columns (a, c) and (b, d) are the
/// images of the standard basis vectors.
struct IntMat2 {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  static IntMat2 identity() { return {}; }
  static IntMat2 from_columns(IntVec2 first, IntVec2 second) {
    return {first.x, second.x, first.y, second.y};
  }

  IntVec2 col0() const { return {a, c}; }
  IntVec2 col1() const { return {b, d}; }
  std::int64_t det() const { return a * d - b * c; }

  RatVec2 apply(const RatVec2& v) const {
    return {Rational(a) * v.x + Rational(b) * v.y, Rational(c) * v.x + Rational(d) * v.y};
  }
  IntVec2 apply(const IntVec2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }

  friend IntMat2 operator*(const IntMat2& l, const IntMat2& r);
  friend IntMat2 operator+(const IntMat2& l, const IntMat2& r) {
    return {l.a + r.a, l.b + r.b, l.c + r.c, l.d + r.d};
  }
  friend bool operator==(const IntMat2&, const IntMat2&) = default;
  friend auto operator<=>(const IntMat2&, const IntMat2&) = default;
};

std::ostream& operator<<(std::ostream& os, const IntMat2& m);

/// x -> L x + offset with a rational 2x2 linear part L = [[l00, l01], [l10, l11]].
struct AffineMap {
  Rational l00 = 1, l01 = 0, l10 = 0, l11 = 1;
  RatVec2 offset{};

  static AffineMap identity() { return {}; }
  static AffineMap translation(const RatVec2& c) { return {1, 0, 0, 1, c}; }
  static AffineMap linear(const IntMat2& m) { return {m.a, m.b, m.c, m.d, {}}; }

  Rational det() const { return l00 * l11 - l01 * l10; }
  RatVec2 apply_linear(const RatVec2& v) const {
    return {l00 * v.x + l01 * v.y, l10 * v.x + l11 * v.y};
  }
  RatVec2 operator()(const RatVec2& v) const { return apply_linear(v) + offset; }

  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

/// A closed segment with rational endpoints.
struct Segment {
  RatVec2 from;
  RatVec2 to;
  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Strictly convex polygon with rational vertices in canonical form:
/// counter-clockwise, starting from the lexicographically smallest vertex,
/// no three consecutive vertices collinear, positive area.
class Polygon {
 public:
  /// Builds the canonical convex hull of the given points. Collinear and
  /// interior points are dropped. Throws Error{DegeneratePolytope} if the hull
  /// has zero area.
  static Polygon hull(std::span<const RatVec2> points);
  static Polygon hull(std::initializer_list<RatVec2> points) {
    return hull(std::span<const RatVec2>(points.begin(), points.size()));
  }

  const std::vector<RatVec2>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const RatVec2& operator[](std::size_t i) const { return vertices_[i]; }
  const RatVec2& next(std::size_t i) const { return vertices_[(i + 1) % vertices_.size()]; }
  const RatVec2& prev(std::size_t i) const {
    return vertices_[(i + vertices_.size() - 1) % vertices_.size()];
  }

  /// Index of the vertex equal to v, or size() if v is not a vertex.
  std::size_t find_vertex(const RatVec2& v) const;

  friend bool operator==(const Polygon&, const Polygon&) = default;

 private:
  explicit Polygon(std::vector<RatVec2> v) : vertices_(std::move(v)) {}
  std::vector<RatVec2> vertices_;
};

std::ostream& operator<<(std::ostream& os, const Polygon& p);

/// canonicalize(raw) from the module contract; same as Polygon::hull.
Polygon canonicalize(std::span<const RatVec2> raw);

/// Primitive integer vector with the same direction as a nonzero rational
/// vector, together with the lattice length (v = length * primitive).
struct PrimitiveDecomposition {
  IntVec2 direction;
  Rational length;
};
PrimitiveDecomposition primitive(const RatVec2& v);
inline Rational lattice_length(const RatVec2& v) { return primitive(v).length; }

/// How ∂P is measured. Lattice gives each edge its lattice length; Euclidean
/// is the Lebesgue arc length (rounded to 1e-30 when irrational) and only
/// exists as a fault-injection control.
enum class EdgeMeasure { Lattice, Euclidean };

Rational area(const Polygon& p);
RatVec2 moment_integral(const Polygon& p);
RatVec2 barycenter(const Polygon& p);
RatVec2 boundary_moment(const Polygon& p, EdgeMeasure measure = EdgeMeasure::Lattice);
Rational boundary_lattice_length(const Polygon& p);

bool is_lattice(const Polygon& p);
/// Least k >= 1 such that every vertex of kP is integral.
std::int64_t denominator_lcm(const Polygon& p);

/// At every vertex the two primitive edge directions form a lattice basis.
/// Vertices may be rational.
bool has_unimodular_corners(const Polygon& p);
/// Integral vertices plus unimodular corners.
bool is_delzant(const Polygon& p);

/// Columns are the primitive directions of the two edges leaving vertex v,
/// ordered so that det = +1: first towards the next (CCW) vertex, then
/// towards the previous one. Throws Error{NotDelzant} if |det| != 1.
IntMat2 corner_frame(const Polygon& p, std::size_t v);

Polygon apply_affine(const Polygon& p, const AffineMap& t);
Polygon scale(const Polygon& p, std::int64_t k);
Polygon translate(const Polygon& p, const RatVec2& c);

/// True iff the closed convex polygons share no point.
bool disjoint(const Polygon& a, const Polygon& b);

}  // namespace polychow
