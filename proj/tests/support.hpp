#pragma once

#include <random>
#include <vector>

#include "polychow/polychow.hpp"

namespace testing_support {

using polychow::IntMat2;
using polychow::Polygon;
using polychow::RatVec2;
using polychow::Rational;

inline RatVec2 v(long long x, long long y) { return {Rational(x), Rational(y)}; }
inline RatVec2 q(long long xn, long long xd, long long yn, long long yd) {
  return {Rational(xn, xd), Rational(yn, yd)};
}

inline Polygon unit_square() { return Polygon::hull({v(0, 0), v(1, 0), v(1, 1), v(0, 1)}); }
inline Polygon rectangle(long long w, long long h) { return Polygon::hull({v(0, 0), v(w, 0), v(w, h), v(0, h)}); }

/// Random element of SL(2, Z) with small entries: a word in the two standard
/// generators.
inline IntMat2 random_sl2(std::mt19937_64& rng, int length = 4) {
  const IntMat2 t{1, 1, 0, 1}, t_inv{1, -1, 0, 1}, s{0, -1, 1, 0};
  IntMat2 m = IntMat2::identity();
  std::uniform_int_distribution<int> pick(0, 2);
  for (int j = 0; j < length; ++j) {
    switch (pick(rng)) {
      case 0: m = m * t; break;
      case 1: m = m * t_inv; break;
      default: m = m * s; break;
    }
  }
  return m;
}

/// Lattice Delzant polygons: projective planes, Hirzebruch trapezoids and
/// rectangles, optionally with integral corner cuts, moved by a random
/// unimodular map and an integral translation. Deterministic for a seed.
inline std::vector<Polygon> delzant_corpus(std::size_t count, std::uint64_t seed = 20240611) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> kind(0, 2), small(1, 4), shift(-3, 3), coin(0, 1);
  std::vector<Polygon> out;
  while (out.size() < count) {
    Polygon p = [&] {
      switch (kind(rng)) {
        case 0: return polychow::catalog::projective_plane(small(rng) + 1);
        case 1: return polychow::catalog::hirzebruch(small(rng), small(rng), small(rng));
        default: return rectangle(small(rng), small(rng));
      }
    }();
    if (coin(rng)) {
      // Unit cut at a random vertex when every adjacent edge is long enough.
      const std::size_t at = std::uniform_int_distribution<std::size_t>(0, p.size() - 1)(rng);
      try {
        p = polychow::chop_corners(p, {{p[at], Rational(1)}}).chopped;
      } catch (const polychow::Error&) {
      }
    }
    const IntMat2 u = random_sl2(rng);
    const polychow::AffineMap t{Rational(u.a), Rational(u.b), Rational(u.c), Rational(u.d),
                                v(shift(rng), shift(rng))};
    out.push_back(polychow::apply_affine(p, t));
  }
  return out;
}

/// Corner-chop decompositions of corpus-style bases: one or two cuts with
/// integral or half-integral depths.
inline std::vector<polychow::Decomposition> decomposition_corpus(std::size_t count, std::uint64_t seed = 7) {
  std::mt19937_64 rng(seed);
  std::vector<polychow::Decomposition> out;
  auto bases = delzant_corpus(4 * count, seed + 1);
  std::uniform_int_distribution<int> depth_num(1, 2), depth_den(1, 2);
  for (const auto& base : bases) {
    if (out.size() == count) break;
    std::vector<polychow::CornerCut> cuts;
    const std::size_t ncut = 1 + rng() % 2;
    for (std::size_t j = 0; j < ncut; ++j) {
      const std::size_t at = rng() % base.size();
      cuts.push_back({base[at], Rational(depth_num(rng), depth_den(rng))});
    }
    try {
      out.push_back(polychow::chop_corners(base, cuts));
    } catch (const polychow::Error&) {
    }
  }
  return out;
}

}  // namespace testing_support
