#include "doctest.h"
#include "support.hpp"

using namespace polychow;
using testing_support::q;
using testing_support::v;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("three corners of the degree-3 triangle") {
  const Decomposition d = chop_corners(catalog::projective_plane(3), catalog::three_point_cuts());
  CHECK(d.chopped == catalog::blow_up_three_points());
  CHECK(d.k == 1);
  CHECK(d.depths == std::vector<std::int64_t>{1, 1, 1});
  CHECK(d.M == 3);
  CHECK(d.Mtilde == 3);
  CHECK(d.A == 6);
  CHECK(d.B == 6);
  CHECK(d.frames[0] == IntMat2::identity());
  CHECK(d.frames[1] == IntMat2{-1, -1, 1, 0});
  CHECK(d.chopped_is_delzant);
  const DfInvariants df = df_invariants(d);
  CHECK(df.df1.is_zero());
  CHECK(df.df2.is_zero());
  CHECK(chow_after_blowup(d).is_zero());
  CHECK(verify_blowup_theorem(d, 5).ok());
}

TEST_CASE("one half-depth cut of the hexagon") {
  const Decomposition d = chop_corners(catalog::blow_up_three_points(), catalog::four_point_cuts());
  CHECK(d.k == 2);
  CHECK(d.depths == std::vector<std::int64_t>{1});
  CHECK(d.A == 11);
  CHECK(d.B == 23);
  CHECK(d.frames[0] == IntMat2{0, 1, -1, 0});
  CHECK(d.seams[0] == Segment{q(0, 1, 3, 2), q(1, 2, 2, 1)});
  CHECK(d.chopped_is_delzant);

  const DfInvariants df = df_invariants(d);
  CHECK(df.df1 == Rational(83, 12) * v(1, -1));
  CHECK(df.df2 == Rational(13, 12) * v(1, -1));

  const BlowupVerification r = verify_blowup_theorem(d, 5);
  CHECK(r.rows.size() == 5);
  CHECK(r.ok());
  CHECK(r.rows[0].direct == v(8, -8));
  CHECK_NOTHROW(require_verified(r));
}

TEST_CASE("Euclidean boundary measure breaks the formula") {
  const Decomposition d = chop_corners(catalog::blow_up_three_points(), catalog::four_point_cuts());
  CHECK(df_invariants(d, EdgeMeasure::Euclidean).df1 != Rational(83, 12) * v(1, -1));
  const BlowupVerification r = verify_blowup_theorem(d, 5, EdgeMeasure::Euclidean);
  CHECK_FALSE(r.ok());
  REQUIRE(r.first_mismatch().has_value());
  CHECK(r.first_mismatch()->i == 1);
  try {
    require_verified(r);
    FAIL("expected VerificationMismatch");
  } catch (const VerificationMismatch& e) {
    CHECK(e.kind() == ErrorKind::VerificationMismatch);
    CHECK(e.row().i == 1);
  }
}

TEST_CASE("five- and six-point blow-ups") {
  const Decomposition five = chop_corners(catalog::blow_up_three_points(), catalog::five_point_cuts());
  CHECK(five.k == 2);
  CHECK(df_invariants(five).df1.is_zero());
  CHECK(df_invariants(five).df2.is_zero());
  CHECK(chow_after_blowup(five).is_zero());
  CHECK(chow_poly(scale(five.chopped, 2)).is_zero());

  const Decomposition six = chop_corners(catalog::blow_up_five_points(), catalog::six_point_cuts());
  CHECK(six.k == 4);
  CHECK(six.A == 19);
  CHECK(six.B == 87);
  CHECK(six.frames[0].col0() == IntVec2{-1, 0});
  CHECK(six.frames[0].col1() == IntVec2{1, -1});
  const DfInvariants df = df_invariants(six);
  CHECK(df.df1 == q(0, 1, -835, 12));
  CHECK(df.df2 == q(0, 1, -65, 12));
  CHECK(verify_blowup_theorem(six, 3).ok());
}

TEST_CASE("empty cut list") {
  const Polygon base = catalog::hirzebruch(2, 1, 1);
  const Decomposition d = chop_corners(base, {});
  CHECK(d.k == 1);
  CHECK(d.chopped == base);
  CHECK(chow_after_blowup(d) == chow_poly(base));
  CHECK(verify_blowup_theorem(d, 3).ok());
}

TEST_CASE("invalid cuts") {
  const Polygon t = catalog::projective_plane(3);
  const Polygon hexagon = catalog::blow_up_three_points();
  CHECK(kind_of([&] { chop_corners(t, {{v(1, 1), Rational(1)}}); }) == ErrorKind::InvalidCutVertex);
  CHECK(kind_of([&] { chop_corners(t, {{v(0, 0), Rational(1)}, {v(0, 0), Rational(1, 2)}}); }) ==
        ErrorKind::InvalidCutVertex);
  CHECK(kind_of([&] { chop_corners(t, {{v(0, 0), Rational(0)}}); }) == ErrorKind::InvalidCutVertex);
  CHECK(kind_of([&] { chop_corners(t, {{v(0, 0), Rational(3)}}); }) == ErrorKind::CutThroughEdge);
  CHECK(kind_of([&] { chop_corners(hexagon, {{v(1, 0), Rational(1)}}); }) == ErrorKind::CutThroughEdge);
  CHECK(kind_of([&] { chop_corners(t, {{v(0, 0), Rational(2)}, {v(3, 0), Rational(2)}}); }) ==
        ErrorKind::OverlappingCuts);
  // Two half-depth cuts at the ends of a unit edge meet in its midpoint.
  CHECK(kind_of([&] { chop_corners(hexagon, {{v(1, 0), Rational(1, 2)}, {v(2, 0), Rational(1, 2)}}); }) ==
        ErrorKind::OverlappingCuts);
  CHECK(kind_of([&] { chop_corners(Polygon::hull({v(0, 0), v(2, 0), v(0, 1)}), {}); }) == ErrorKind::NotDelzant);
}

TEST_CASE("simplex closed forms match enumeration") {
  for (long long m = 1; m <= 6; ++m) {
    const Polygon tri = Polygon::hull({v(0, 0), v(m, 0), v(0, m)});
    const Segment hyp{v(m, 0), v(0, m)};
    for (long long i = 1; i <= 5; ++i) {
      const SimplexClosedForms c = simplex_closed_forms(m, i);
      CHECK(c.volume == area(tri));
      CHECK(c.moment == moment_integral(tri));
      CHECK(c.count_diff == Rational(ehrhart_eval(tri, i) - ehrhart_eval(hyp, i)));
      CHECK(c.sum_diff == sum_points(tri, i) - p_delta(hyp, AffineMap::identity(), i));
    }
  }
  CHECK_THROWS_AS(simplex_closed_forms(0, 1), Error);
}

TEST_CASE("general identity and additivity on the corpus") {
  const auto corpus = testing_support::decomposition_corpus(20);
  REQUIRE(corpus.size() == 20);
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  auto r = [&] { return Rational(num(rng), den(rng)); };
  for (const auto& d : corpus) {
    for (long long i = 1; i <= 3; ++i) {
      const auto add = additivity_residual(d, i);
      CHECK(add.count == 0);
      CHECK(add.sum.is_zero());
      CHECK(verify_general_identity(d, AffineMap::identity(), i).is_zero());
      CHECK(verify_general_identity(d, AffineMap{r(), r(), r(), r(), {r(), r()}}, i).is_zero());
    }
    CHECK(verify_blowup_theorem(d, 4).ok());
  }
}
