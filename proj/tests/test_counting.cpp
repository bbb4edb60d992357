#include <algorithm>

#include "doctest.h"
#include "support.hpp"

using namespace polychow;
using testing_support::q;
using testing_support::unit_square;
using testing_support::v;

namespace {

// 4 * (five-point blow-up octagon) is the k * base of the six-point chop.
Polygon four_times_octagon() { return scale(catalog::blow_up_five_points(), 4); }

Polygon four_times_six_point() {
  return scale(chop_corners(catalog::blow_up_five_points(), catalog::six_point_cuts()).chopped, 4);
}

}  // namespace

TEST_CASE("lattice points") {
  CHECK(lattice_points(unit_square(), 1) == std::vector<IntVec2>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(lattice_points(catalog::projective_plane(3), 1).size() == 10);
  CHECK(lattice_points(four_times_octagon(), 1).size() == 55);
  CHECK(lattice_points(four_times_six_point(), 1).size() == 54);

  const auto pts = lattice_points(catalog::blow_up_three_points(), 3);
  CHECK(std::is_sorted(pts.begin(), pts.end()));
  CHECK(pts.size() == 37);

  // Half-integral vertices: (0,1/2)..(1/2,0) triangle has only the origin.
  CHECK(lattice_points(Polygon::hull({v(0, 0), q(1, 2, 0, 1), q(0, 1, 1, 2)}), 1).size() == 1);
  CHECK_THROWS_AS(lattice_points(unit_square(), 0), Error);
}

TEST_CASE("ehrhart polynomial") {
  CHECK(ehrhart_poly(catalog::blow_up_three_points()) == ScalarPoly{3, 3, 1});
  CHECK(ehrhart_poly(unit_square()) == ScalarPoly{1, 2, 1});
  CHECK(ehrhart_poly(four_times_octagon()) == ScalarPoly{44, 10, 1});
  for (long long a = 1; a <= 3; ++a) {
    for (long long b = 1; b <= 3; ++b) {
      for (long long n = 1; n <= 3; ++n) {
        const ScalarPoly expected{Rational(a * b) + Rational(a * a * n, 2), Rational(a + b) + Rational(a * n, 2), 1};
        CHECK(ehrhart_poly(catalog::hirzebruch(a, b, n)) == expected);
      }
    }
  }
  const Polygon half = chop_corners(catalog::blow_up_three_points(), catalog::four_point_cuts()).chopped;
  CHECK_THROWS_AS(ehrhart_poly(half), Error);
  CHECK(ehrhart_eval(half, 1) == 6);
}

TEST_CASE("lattice sums") {
  CHECK(sum_points(catalog::projective_plane(3), 1) == v(10, 10));
  CHECK(sum_points(unit_square(), 1) == v(2, 2));
  CHECK(sum_points(four_times_octagon(), 1) == v(220, 220));
  // Normalized by 1/i; the raw coordinate sum over 2P is 1576.
  CHECK(sum_points(four_times_octagon(), 2) == v(788, 788));
  CHECK(Rational(2) * sum_points(four_times_octagon(), 2) == v(1576, 1576));
}

TEST_CASE("lattice-sum polynomial") {
  const RatVec2 half = q(1, 2, 1, 2), one = v(1, 1);
  CHECK(sum_poly(catalog::projective_plane(3)) ==
        VecPoly{Rational(9, 2) * one, Rational(9, 2) * one, one});
  CHECK(sum_poly(unit_square()) == VecPoly{half, one, half});
  CHECK(sum_poly(four_times_octagon()) == VecPoly{v(176, 176), v(40, 40), v(4, 4)});

  // Linear coefficient a^2 n in the first coordinate; the constant term as printed.
  for (long long a = 1; a <= 4; ++a) {
    for (long long b = 1; b <= 4; ++b) {
      for (long long n = 1; n <= 4; ++n) {
        const VecPoly s = sum_poly(catalog::hirzebruch(a, b, n));
        CHECK(s.c2 == moment_integral(catalog::hirzebruch(a, b, n)));
        CHECK(s.c1 == Rational(1, 4) * RatVec2{Rational(a * a * n * n + a * a * n + 2 * a * b * n + 2 * a * b + 2 * b * b),
                                               Rational(2 * a * (a + b))});
        CHECK(s.c0 == Rational(1, 12) * RatVec2{Rational(a * n * n + 3 * a * n + 6 * b), Rational(2 * a * (3 - n))});
      }
    }
  }
}

TEST_CASE("p_delta") {
  CHECK(p_delta(unit_square(), AffineMap::identity(), 3) == sum_points(unit_square(), 3));
  CHECK(p_delta(unit_square(), AffineMap::translation(v(1, 0)), 1) == v(6, 2));
  CHECK(p_delta(catalog::projective_plane(3), AffineMap{2, 0, 0, 2, {}}, 1) == v(20, 20));
}

TEST_CASE("segments") {
  CHECK(ehrhart_eval(Segment{v(0, 0), v(3, 3)}, 1) == 4);
  CHECK(ehrhart_eval(Segment{q(1, 2, 0, 1), q(1, 2, 2, 1)}, 1) == 0);
  CHECK(ehrhart_eval(Segment{q(1, 2, 0, 1), q(1, 2, 2, 1)}, 2) == 5);
  CHECK(lattice_points(Segment{q(1, 4, 1, 4), q(3, 4, 3, 4)}, 4) == std::vector<IntVec2>{{1, 1}, {2, 2}, {3, 3}});
  CHECK(ehrhart_eval(Segment{q(1, 3, 0, 1), q(1, 3, 0, 1)}, 3) == 1);
  CHECK(p_delta(Segment{v(0, 2), v(2, 0)}, AffineMap::identity(), 1) == v(3, 3));
}

TEST_CASE("enumeration limit") {
  const auto saved = enumeration_limit();
  set_enumeration_limit(20);
  try {
    ehrhart_eval(catalog::projective_plane(3), 5);
    FAIL("expected EnumerationLimit");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EnumerationLimit);
  }
  set_enumeration_limit(saved);
  CHECK(ehrhart_eval(catalog::projective_plane(3), 5) == 136);
}

TEST_CASE("counting laws on the corpus") {
  const auto corpus = testing_support::delzant_corpus(30, 11);
  std::mt19937_64 rng(5);
  for (const auto& p : corpus) {
    const ScalarPoly e = ehrhart_poly(p);
    const VecPoly s = sum_poly(p);
    CHECK(e.c0 == 1);
    for (long long i = 1; i <= 5; ++i) {
      CHECK(e(i) == Rational(static_cast<long long>(lattice_points(p, i).size())));
      CHECK(s(i) == sum_points(p, i));
    }
    for (long long k = 1; k <= 3; ++k) {
      for (long long i = 1; i <= 3; ++i) {
        CHECK(sum_points(scale(p, k), i) == Rational(k) * sum_points(p, k * i));
        CHECK(ehrhart_eval(scale(p, k), i) == ehrhart_eval(p, k * i));
      }
    }
    const RatVec2 c = v(2, -1);
    const AffineMap f{1, 2, -1, 3, v(1, 1)};
    for (long long i = 1; i <= 3; ++i) {
      CHECK(p_delta(translate(p, c), f, i) == p_delta(p, f, i) + Rational(ehrhart_eval(p, i)) * f.apply_linear(c));
    }
    const IntMat2 u = testing_support::random_sl2(rng);
    auto image = lattice_points(p, 2);
    for (auto& pt : image) pt = u.apply(pt);
    std::sort(image.begin(), image.end());
    CHECK(image == lattice_points(apply_affine(p, AffineMap::linear(u)), 2));
  }
}
