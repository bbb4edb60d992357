#include "polychow/counting.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <ostream>

#include "polychow/error.hpp"

namespace polychow {

namespace {

std::atomic<std::uint64_t> g_enumeration_limit{100'000'000};

void check_dilation(std::int64_t i) {
  if (i < 1) throw Error(ErrorKind::InvalidArgument, "dilation i must be >= 1, got " + std::to_string(i));
}

void charge(Integer& used, const Integer& amount) {
  used += amount;
  if (used > Integer(std::to_string(g_enumeration_limit.load()))) {
    throw Error(ErrorKind::EnumerationLimit,
                "enumeration exceeds " + std::to_string(g_enumeration_limit.load()) + " lattice points");
  }
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const ScalarPoly& p) {
  return os << p.c2 << "*i^2 + " << p.c1 << "*i + " << p.c0;
}

std::ostream& operator<<(std::ostream& os, const VecPoly& p) {
  return os << p.c2 << "*i^2 + " << p.c1 << "*i + " << p.c0;
}

void set_enumeration_limit(std::uint64_t limit) { g_enumeration_limit.store(limit); }
std::uint64_t enumeration_limit() { return g_enumeration_limit.load(); }

void scan_rows(const Polygon& p, std::int64_t i, const std::function<void(const LatticeRow&)>& visit) {
  check_dilation(i);
  const Polygon q = scale(p, i);
  Rational ymin = q[0].y, ymax = q[0].y;
  for (const auto& v : q.vertices()) {
    ymin = std::min(ymin, v.y);
    ymax = std::max(ymax, v.y);
  }
  const Integer y0 = ymin.ceil(), y1 = ymax.floor();
  Integer used = 0;
  if (y1 >= y0) charge(used, y1 - y0 + 1);

  for (Integer y = y0; y <= y1; ++y) {
    std::optional<Integer> lo, hi;
    const Rational ry(y);
    for (std::size_t e = 0; e < q.size(); ++e) {
      const RatVec2& a = q[e];
      const RatVec2& b = q.next(e);
      const Rational dy = b.y - a.y;
      if (dy.is_zero()) continue;  // horizontal edges only bound y
      const Rational dx = b.x - a.x;
      // Interior lies left of a->b: dy * x <= dx * (y - ay) + dy * ax.
      const Rational bound = a.x + dx * (ry - a.y) / dy;
      if (dy.sign() > 0) {
        const Integer f = bound.floor();
        if (!hi || f < *hi) hi = f;
      } else {
        const Integer c = bound.ceil();
        if (!lo || c > *lo) lo = c;
      }
    }
    if (!lo || !hi || *lo > *hi) continue;
    charge(used, *hi - *lo + 1);
    visit(LatticeRow{y, *lo, *hi});
  }
}

std::vector<IntVec2> lattice_points(const Polygon& p, std::int64_t i) {
  std::vector<IntVec2> pts;
  scan_rows(p, i, [&](const LatticeRow& r) {
    const std::int64_t y = to_int64(r.y);
    for (std::int64_t x = to_int64(r.xmin), xe = to_int64(r.xmax); x <= xe; ++x) pts.push_back({x, y});
  });
  std::sort(pts.begin(), pts.end());
  return pts;
}

Integer ehrhart_eval(const Polygon& p, std::int64_t i) {
  Integer n = 0;
  scan_rows(p, i, [&](const LatticeRow& r) { n += r.xmax - r.xmin + 1; });
  return n;
}

ScalarPoly ehrhart_poly(const Polygon& p) {
  if (!is_lattice(p)) throw Error(ErrorKind::NotLatticePolygon, "Ehrhart polynomial needs integral vertices");
  const Rational vol = area(p);
  const ScalarPoly poly{vol, Rational(ehrhart_eval(p, 1)) - vol - 1, 1};
  for (std::int64_t i : {2, 3}) {
    if (poly(i) != Rational(ehrhart_eval(p, i))) {
      throw Error(ErrorKind::InternalInconsistency,
                  "Ehrhart closed form disagrees with enumeration at i=" + std::to_string(i));
    }
  }
  return poly;
}

RatVec2 sum_points(const Polygon& p, std::int64_t i) {
  Integer sx = 0, sy = 0;
  scan_rows(p, i, [&](const LatticeRow& r) {
    const Integer count = r.xmax - r.xmin + 1;
    sx += (r.xmin + r.xmax) * count;  // twice the arithmetic series
    sy += r.y * count;
  });
  return {Rational(sx, Integer(2 * i)), Rational(sy, Integer(i))};
}

VecPoly sum_poly(const Polygon& p) {
  if (!is_lattice(p)) throw Error(ErrorKind::NotLatticePolygon, "lattice-sum polynomial needs integral vertices");
  const RatVec2 m = moment_integral(p);
  const RatVec2 s1 = sum_points(p, 1);
  const RatVec2 s2 = sum_points(p, 2);
  const VecPoly poly{m, s2 - s1 - 3 * m, 2 * m - s2 + 2 * s1};
  for (std::int64_t i : {3, 4}) {
    if (poly(i) != sum_points(p, i)) {
      throw Error(ErrorKind::InternalInconsistency,
                  "lattice-sum closed form disagrees with enumeration at i=" + std::to_string(i));
    }
  }
  return poly;
}

RatVec2 p_delta(const Polygon& p, const AffineMap& f, std::int64_t i) {
  return f.apply_linear(sum_points(p, i)) + Rational(ehrhart_eval(p, i)) * f.offset;
}

std::vector<IntVec2> lattice_points(const Segment& s, std::int64_t i) {
  check_dilation(i);
  const RatVec2 a = Rational(i) * s.from;
  const RatVec2 b = Rational(i) * s.to;
  std::vector<IntVec2> pts;
  if (a == b) {
    if (a.is_integral()) pts.push_back({to_int64(a.x.num()), to_int64(a.y.num())});
    return pts;
  }
  const PrimitiveDecomposition d = primitive(b - a);
  const Integer sx = d.direction.x, sy = d.direction.y;
  // The line through a with primitive direction (sx, sy) is {x : nx*x + ny*y = c}
  // for the primitive normal (nx, ny) = (-sy, sx); it meets Z^2 iff c is integral.
  const Integer nx = -sy, ny = sx;
  const Rational c = Rational(nx) * a.x + Rational(ny) * a.y;
  if (!c.is_integer()) return pts;
  Integer g, u, v;
  mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), nx.get_mpz_t(), ny.get_mpz_t());
  // g = +-1 because the normal is primitive.
  const Integer scale = c.num() / g;
  const RatVec2 z{Rational(Integer(u * scale)), Rational(Integer(v * scale))};
  const RatVec2 step{Rational(sx), Rational(sy)};
  // z - a = t0 * step; lattice points are z + j * step with 0 <= t0 + j <= length.
  const Rational t0 = dot(z - a, step) / dot(step, step);
  const Integer jlo = (-t0).ceil();
  const Integer jhi = (d.length - t0).floor();
  if (jhi < jlo) return pts;
  Integer used = 0;
  charge(used, jhi - jlo + 1);
  for (Integer j = jlo; j <= jhi; ++j) {
    const RatVec2 pt = z + Rational(j) * step;
    pts.push_back({to_int64(pt.x.num()), to_int64(pt.y.num())});
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

Integer ehrhart_eval(const Segment& s, std::int64_t i) {
  return Integer(static_cast<long>(lattice_points(s, i).size()));
}

RatVec2 p_delta(const Segment& s, const AffineMap& f, std::int64_t i) {
  RatVec2 sum;
  for (const auto& pt : lattice_points(s, i)) sum += f(pt.to_rational() / Rational(i));
  return sum;
}

RatVec2 integrate(const Polygon& p, const AffineMap& f) {
  return f.apply_linear(moment_integral(p)) + area(p) * f.offset;
}

}  // namespace polychow
