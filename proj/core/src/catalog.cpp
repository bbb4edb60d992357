#include "polychow/catalog.hpp"

namespace polychow::catalog {

namespace {

RatVec2 v(std::int64_t x, std::int64_t y) { return {Rational(x), Rational(y)}; }

PointConfiguration points(std::initializer_list<std::array<int, 3>> raw) {
  std::vector<std::array<Rational, 3>> pts;
  for (const auto& p : raw) pts.push_back({Rational(p[0]), Rational(p[1]), Rational(p[2])});
  return PointConfiguration::from_rationals(pts);
}

}  // namespace

Polygon projective_plane(std::int64_t d) { return Polygon::hull({v(0, 0), v(d, 0), v(0, d)}); }

std::vector<CornerCut> three_point_cuts() {
  return {{v(0, 0), Rational(1)}, {v(3, 0), Rational(1)}, {v(0, 3), Rational(1)}};
}

Polygon blow_up_three_points() {
  return Polygon::hull({v(1, 0), v(2, 0), v(2, 1), v(1, 2), v(0, 2), v(0, 1)});
}

std::vector<CornerCut> four_point_cuts() { return {{v(0, 2), Rational(1, 2)}}; }

std::vector<CornerCut> five_point_cuts() { return {{v(0, 2), Rational(1, 2)}, {v(2, 0), Rational(1, 2)}}; }

Polygon blow_up_five_points() { return chop_corners(blow_up_three_points(), five_point_cuts()).chopped; }

std::vector<CornerCut> six_point_cuts() { return {{v(1, 2), Rational(1, 4)}}; }

Polygon hirzebruch(std::int64_t a, std::int64_t b, std::int64_t n) {
  if (a < 1 || b < 1 || n < 1) throw Error(ErrorKind::InvalidArgument, "a, b, n must be positive");
  return Polygon::hull({v(0, 0), v(0, a), v(b, a), v(b + a * n, 0)});
}

Polygon symmetric_hexagon() {
  return Polygon::hull({v(-2, 1), v(1, 1), v(2, 0), v(2, -1), v(-1, -1), v(-2, 0)});
}

Polygon z3_triangle() { return Polygon::hull({v(1, 0), v(0, 1), v(-1, -1)}); }

IntMat2 z3_generator() { return {0, -1, 1, -1}; }

PointConfiguration four_general_points() { return points({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}); }

PointConfiguration four_points_three_collinear() {
  return points({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}});
}

PointConfiguration five_blown_up_points() {
  return points({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 1}, {1, 1, 0}});
}

}  // namespace polychow::catalog
