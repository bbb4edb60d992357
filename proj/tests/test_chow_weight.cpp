#include "doctest.h"
#include "support.hpp"

using namespace polychow;
using testing_support::q;
using testing_support::v;

TEST_CASE("chow weight values") {
  for (long long i = 1; i <= 4; ++i) {
    CHECK(chow_eval(testing_support::rectangle(3, 2), i).is_zero());
    CHECK(chow_eval(catalog::projective_plane(3), i).is_zero());
  }
  CHECK(chow_eval(catalog::hirzebruch(1, 1, 1), 1) == q(1, 6, -1, 3));
  // Affine f: the constant part drops out, the linear part acts on the value.
  const AffineMap f{2, 1, 0, 1, v(5, -7)};
  const Polygon h = catalog::hirzebruch(2, 1, 3);
  CHECK(chow_eval(h, f, 2) == f.apply_linear(chow_eval(h, 2)));
}

TEST_CASE("chow polynomial") {
  const RatVec2 dir = v(1, -2);
  CHECK(chow_poly(catalog::hirzebruch(1, 2, 1)) == VecPoly{{}, Rational(1, 6) * dir, Rational(1, 6) * dir});
  CHECK(chow_poly(scale(catalog::blow_up_three_points(), 2)).is_zero());

  const Polygon four = scale(chop_corners(catalog::blow_up_three_points(), catalog::four_point_cuts()).chopped, 2);
  const VecPoly c4 = chow_poly(four);
  CHECK(c4 == VecPoly{{}, Rational(83, 12) * v(1, -1), Rational(13, 12) * v(1, -1)});
  CHECK(c4(1) == v(8, -8));
  CHECK(c4(2) == q(179, 12, -179, 12));

  // Direct enumeration oracle for the six-point blow-up.
  const Polygon six = scale(chop_corners(catalog::blow_up_five_points(), catalog::six_point_cuts()).chopped, 4);
  const VecPoly c6 = chow_poly(six);
  CHECK(c6 == VecPoly{{}, q(0, 1, -835, 12), q(0, 1, -65, 12)});
  CHECK(chow_eval(six, 1) == v(0, -75));
  CHECK(chow_eval(six, 2) == q(0, 1, -1735, 12));
  CHECK(chow_eval(six, 3) == q(0, 1, -1285, 6));

  CHECK_THROWS_AS(chow_poly(chop_corners(catalog::blow_up_three_points(), catalog::four_point_cuts()).chopped), Error);
}

TEST_CASE("coefficient span") {
  CHECK(coefficient_span_dim(VecPoly{}) == 0);
  CHECK(coefficient_span_dim(VecPoly{{}, v(1, -1), v(2, -2)}) == 1);
  CHECK(coefficient_span_dim(VecPoly{{}, {}, v(2, -2)}) == 1);
  CHECK(coefficient_span_dim(VecPoly{{}, v(1, 0), v(0, 1)}) == 2);
  CHECK_THROWS_AS(coefficient_span_dim(VecPoly{v(1, 0), {}, {}}), Error);
}

TEST_CASE("transformation laws on the corpus") {
  const auto corpus = testing_support::delzant_corpus(30, 19);
  std::mt19937_64 rng(23);
  for (const auto& p : corpus) {
    const VecPoly c = chow_poly(p);
    CHECK(c.c2.is_zero());
    for (long long i = 1; i <= 5; ++i) CHECK(c(i) == chow_eval(p, i));
    for (long long i = 1; i <= 2; ++i) {
      CHECK(check_translation_invariance(p, {3, -2}, i).holds());
      CHECK(check_unimodular_equivariance(p, testing_support::random_sl2(rng), i).holds());
      CHECK(check_scaling_law(p, 2, i).holds());
    }
  }
  CHECK_THROWS_AS(check_unimodular_equivariance(catalog::projective_plane(2), {0, 1, 1, 0}, 1), Error);
}
