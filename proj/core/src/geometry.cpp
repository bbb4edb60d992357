#include "polychow/geometry.hpp"

#include <algorithm>
#include <ostream>

#include "polychow/error.hpp"

namespace polychow {

std::ostream& operator<<(std::ostream& os, const RatVec2& v) {
  return os << "(" << v.x << ", " << v.y << ")";
}

IntMat2 operator*(const IntMat2& l, const IntMat2& r) {
  return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d, l.c * r.a + l.d * r.c,
          l.c * r.b + l.d * r.d};
}

std::ostream& operator<<(std::ostream& os, const IntMat2& m) {
  return os << "[[" << m.a << ", " << m.b << "], [" << m.c << ", " << m.d << "]]";
}

std::ostream& operator<<(std::ostream& os, const Polygon& p) {
  os << "[";
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? ", " : "") << p[i];
  return os << "]";
}

Polygon Polygon::hull(std::span<const RatVec2> points) {
  std::vector<RatVec2> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) throw Error(ErrorKind::DegeneratePolytope, "fewer than three distinct points");

  // Monotone chain; popping on cross <= 0 drops collinear points, and the
  // lower chain starts at the lexicographically smallest point.
  std::vector<RatVec2> h(2 * pts.size());
  std::size_t n = 0;
  for (const auto& p : pts) {
    while (n >= 2 && cross(h[n - 1] - h[n - 2], p - h[n - 2]).sign() <= 0) --n;
    h[n++] = p;
  }
  const std::size_t lower = n + 1;
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
    while (n >= lower && cross(h[n - 1] - h[n - 2], *it - h[n - 2]).sign() <= 0) --n;
    h[n++] = *it;
  }
  h.resize(n - 1);
  if (h.size() < 3) throw Error(ErrorKind::DegeneratePolytope, "points are collinear");
  return Polygon(std::move(h));
}

std::size_t Polygon::find_vertex(const RatVec2& v) const {
  return static_cast<std::size_t>(std::find(vertices_.begin(), vertices_.end(), v) - vertices_.begin());
}

Polygon canonicalize(std::span<const RatVec2> raw) { return Polygon::hull(raw); }

PrimitiveDecomposition primitive(const RatVec2& v) {
  if (v.is_zero()) throw Error(ErrorKind::InvalidArgument, "zero vector has no primitive direction");
  const Integer l = lcm(v.x.den(), v.y.den());
  const Integer ix = v.x.num() * (l / v.x.den());
  const Integer iy = v.y.num() * (l / v.y.den());
  const Integer g = gcd(ix, iy);
  return {{to_int64(ix / g), to_int64(iy / g)}, Rational(g, l)};
}

namespace {

// Rational approximation of sqrt(r) with absolute error below 1e-30; exact
// whenever sqrt(r) is rational.
Rational approx_sqrt(const Rational& r) {
  const Integer n = r.num(), d = r.den();
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  if (rn * rn == n && rd * rd == d) return Rational(rn, rd);
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, 30);
  const Integer radicand = n * d * scale * scale;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), radicand.get_mpz_t());
  return Rational(root, d * scale);
}

}  // namespace

Rational area(const Polygon& p) {
  Rational twice;
  for (std::size_t i = 0; i < p.size(); ++i) twice += cross(p[i], p.next(i));
  return twice / 2;
}

RatVec2 moment_integral(const Polygon& p) {
  // Fan from vertex 0: each triangle contributes area * centroid.
  RatVec2 sum;
  const RatVec2& o = p[0];
  for (std::size_t i = 1; i + 1 < p.size(); ++i) {
    const Rational a = cross(p[i] - o, p[i + 1] - o) / 2;
    sum += (a / 3) * (o + p[i] + p[i + 1]);
  }
  return sum;
}

RatVec2 barycenter(const Polygon& p) { return moment_integral(p) / area(p); }

RatVec2 boundary_moment(const Polygon& p, EdgeMeasure measure) {
  RatVec2 sum;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const RatVec2 e = p.next(i) - p[i];
    const Rational len = measure == EdgeMeasure::Lattice ? lattice_length(e) : approx_sqrt(dot(e, e));
    sum += (len / 2) * (p[i] + p.next(i));
  }
  return sum;
}

Rational boundary_lattice_length(const Polygon& p) {
  Rational sum;
  for (std::size_t i = 0; i < p.size(); ++i) sum += lattice_length(p.next(i) - p[i]);
  return sum;
}

bool is_lattice(const Polygon& p) {
  return std::all_of(p.vertices().begin(), p.vertices().end(),
                     [](const RatVec2& v) { return v.is_integral(); });
}

std::int64_t denominator_lcm(const Polygon& p) {
  Integer l = 1;
  for (const auto& v : p.vertices()) l = lcm(lcm(l, v.x.den()), v.y.den());
  return to_int64(l);
}

bool has_unimodular_corners(const Polygon& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    const IntVec2 u = primitive(p.next(i) - p[i]).direction;
    const IntVec2 w = primitive(p.prev(i) - p[i]).direction;
    const std::int64_t det = u.x * w.y - u.y * w.x;
    if (det != 1 && det != -1) return false;
  }
  return true;
}

bool is_delzant(const Polygon& p) { return is_lattice(p) && has_unimodular_corners(p); }

IntMat2 corner_frame(const Polygon& p, std::size_t v) {
  if (v >= p.size()) throw Error(ErrorKind::InvalidArgument, "vertex index out of range");
  const IntVec2 to_next = primitive(p.next(v) - p[v]).direction;
  const IntVec2 to_prev = primitive(p.prev(v) - p[v]).direction;
  IntMat2 m = IntMat2::from_columns(to_next, to_prev);
  // In a CCW convex polygon the pair (next, prev) is positively oriented.
  if (m.det() != 1) {
    throw Error(ErrorKind::NotDelzant, "corner at vertex " + std::to_string(v) +
                                           " has determinant " + std::to_string(m.det()));
  }
  return m;
}

Polygon apply_affine(const Polygon& p, const AffineMap& t) {
  if (t.det().is_zero()) throw Error(ErrorKind::DegeneratePolytope, "singular linear part");
  std::vector<RatVec2> img;
  img.reserve(p.size());
  for (const auto& v : p.vertices()) img.push_back(t(v));
  return Polygon::hull(img);
}

Polygon scale(const Polygon& p, std::int64_t k) {
  if (k <= 0) throw Error(ErrorKind::InvalidArgument, "scale factor must be positive");
  return apply_affine(p, AffineMap{Rational(k), 0, 0, Rational(k), {}});
}

Polygon translate(const Polygon& p, const RatVec2& c) {
  return apply_affine(p, AffineMap::translation(c));
}

namespace {

// Is there an edge of `a` whose outer side strictly contains all of `b`?
bool separated_by_edge_of(const Polygon& a, const Polygon& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const RatVec2 e = a.next(i) - a[i];
    const bool all_outside = std::all_of(b.vertices().begin(), b.vertices().end(), [&](const RatVec2& v) {
      return cross(e, v - a[i]).sign() < 0;
    });
    if (all_outside) return true;
  }
  return false;
}

}  // namespace

bool disjoint(const Polygon& a, const Polygon& b) {
  // Separating axis theorem: for two convex polygons in the plane some edge
  // normal of one of them separates them whenever they are disjoint.
  return separated_by_edge_of(a, b) || separated_by_edge_of(b, a);
}

}  // namespace polychow
