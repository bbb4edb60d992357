#include "polychow/stability.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace polychow {

RatVec2 fo_invariant(const Polygon& p, std::int64_t i) {
  const Integer n = ehrhart_eval(p, i);
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "polygon has no points in (Z/i)^2");
  return sum_points(p, i) / Rational(n) - barycenter(p);
}

bool is_centrally_symmetric(const Polygon& p) {
  std::vector<RatVec2> neg;
  for (const auto& v : p.vertices()) neg.push_back(-v);
  return Polygon::hull(neg) == p;
}

namespace {

// An element of SL(2, Z) has finite order iff it is +-I or |trace| < 2.
bool has_infinite_order(const IntMat2& g) {
  const std::int64_t t = g.a + g.d;
  if (t > 2 || t < -2) return true;
  if (t == 2 || t == -2) return !(g.b == 0 && g.c == 0);
  return false;
}

}  // namespace

SymmetryGroup SymmetryGroup::generate(const std::vector<IntMat2>& generators, std::size_t cap) {
  for (const auto& g : generators) {
    if (g.det() != 1) throw Error(ErrorKind::InvalidArgument, "generators must have determinant 1");
  }
  std::set<IntMat2> seen{IntMat2::identity()};
  std::vector<IntMat2> frontier{IntMat2::identity()};
  while (!frontier.empty()) {
    std::vector<IntMat2> next;
    for (const auto& h : frontier) {
      for (const auto& g : generators) {
        const IntMat2 e = h * g;
        if (!seen.insert(e).second) continue;
        if (has_infinite_order(e)) {
          throw Error(ErrorKind::GroupClosureOverflow, "generated group contains an element of infinite order");
        }
        if (seen.size() > cap) {
          throw Error(ErrorKind::GroupClosureOverflow, "group exceeds " + std::to_string(cap) + " elements");
        }
        next.push_back(e);
      }
    }
    frontier = std::move(next);
  }
  SymmetryGroup out;
  out.generators_ = generators;
  out.elements_.assign(seen.begin(), seen.end());
  return out;
}

bool is_weakly_symmetric(const Polygon& p, const SymmetryGroup& g) {
  IntMat2 sum{0, 0, 0, 0};
  for (const auto& e : g.elements()) {
    sum = sum + e;
    for (const auto& v : p.vertices()) {
      if (p.find_vertex(e.apply(v)) == p.size()) return false;
    }
  }
  return sum == IntMat2{0, 0, 0, 0};
}

Rational c_constant(const Polygon& p) { return Rational(ehrhart_eval(p, 1)) / area(p); }

namespace {

void require_identity_hypotheses(const Decomposition& d) {
  if (d.k != 1) throw Error(ErrorKind::HypothesisNotMet, "chopped polygon must be a lattice polygon (k = 1)");
  if (!fo_invariant(d.base, 1).is_zero()) {
    throw Error(ErrorKind::HypothesisNotMet, "FO invariant of the base does not vanish at i = 1");
  }
}

// (∫ 1, ∫ x1, ∫ x2) over P.
std::array<Rational, 3> integrals(const Polygon& p) {
  const RatVec2 m = moment_integral(p);
  return {area(p), m.x, m.y};
}

std::array<Rational, 3> point_sums(const Polygon& p) {
  const RatVec2 s = sum_points(p, 1);
  return {Rational(ehrhart_eval(p, 1)), s.x, s.y};
}

std::array<Rational, 3> point_sums(const Segment& s) {
  std::array<Rational, 3> out;
  for (const auto& pt : lattice_points(s, 1)) {
    out[0] += 1;
    out[1] += Rational(pt.x);
    out[2] += Rational(pt.y);
  }
  return out;
}

}  // namespace

std::array<Rational, 3> lattice_sum_identity_residual(const Decomposition& d) {
  require_identity_hypotheses(d);
  const Rational c_base = c_constant(d.base);
  const Rational c_chop = c_constant(d.chopped);
  const auto lhs = point_sums(d.chopped);
  const auto int_chop = integrals(d.chopped);
  const auto int_base = integrals(d.base);

  std::array<Rational, 3> int_simplices, seam_sums;
  for (std::size_t a = 0; a < d.simplices.size(); ++a) {
    const auto s = integrals(d.simplices[a]);
    const auto l = point_sums(d.seams[a]);
    for (int j = 0; j < 3; ++j) {
      int_simplices[j] += s[j];
      seam_sums[j] += l[j];
    }
  }
  std::array<Rational, 3> residual;
  for (int j = 0; j < 3; ++j) {
    const Rational rhs = c_chop * int_chop[j] + (c_base - c_chop) * int_base[j] +
                         (c_chop - 6) * int_simplices[j] + seam_sums[j];
    residual[j] = lhs[j] - rhs;
  }
  return residual;
}

Rational ell1_condition(const Decomposition& d) {
  require_identity_hypotheses(d);
  const Rational c_base = c_constant(d.base);
  const Rational c_chop = c_constant(d.chopped);
  Rational vol_simplices, seam_points;
  for (std::size_t a = 0; a < d.simplices.size(); ++a) {
    vol_simplices += area(d.simplices[a]);
    seam_points += Rational(ehrhart_eval(d.seams[a], 1));
  }
  return (c_base - c_chop) * area(d.base) + (c_chop - 6) * vol_simplices + seam_points;
}

PointConfiguration::Point PointConfiguration::normalize(const std::array<Rational, 3>& v) {
  Integer l = 1;
  for (const auto& c : v) l = lcm(l, c.den());
  Point p;
  Integer g = 0;
  for (int j = 0; j < 3; ++j) {
    p[j] = v[j].num() * (l / v[j].den());
    g = gcd(g, p[j]);
  }
  if (g == 0) throw Error(ErrorKind::InvalidArgument, "(0, 0, 0) is not a projective point");
  for (auto& c : p) c /= g;
  const auto lead = std::find_if(p.begin(), p.end(), [](const Integer& c) { return c != 0; });
  if (*lead < 0) {
    for (auto& c : p) c = -c;
  }
  return p;
}

PointConfiguration PointConfiguration::from_rationals(const std::vector<std::array<Rational, 3>>& points) {
  PointConfiguration out;
  std::set<Point> seen;
  for (const auto& v : points) {
    Point p = normalize(v);
    if (!seen.insert(p).second) throw Error(ErrorKind::InvalidArgument, "repeated projective point");
    out.points_.push_back(std::move(p));
  }
  return out;
}

std::string_view to_string(Stability s) {
  switch (s) {
    case Stability::Stable: return "Stable";
    case Stability::Unstable: return "Unstable";
    case Stability::Borderline: return "Borderline";
  }
  return "?";
}

MukaiResult mukai_classify(const PointConfiguration& config) {
  const auto& pts = config.points();
  if (pts.empty()) throw Error(ErrorKind::EmptyConfiguration, "no points");
  const Rational n(static_cast<long long>(pts.size()));

  std::vector<Subspace> candidates;
  for (const auto& p : pts) candidates.push_back({0, p});
  std::set<PointConfiguration::Point> lines;
  for (std::size_t a = 0; a < pts.size(); ++a) {
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      const auto& p = pts[a];
      const auto& q = pts[b];
      const std::array<Rational, 3> l{Rational(Integer(p[1] * q[2] - p[2] * q[1])),
                                      Rational(Integer(p[2] * q[0] - p[0] * q[2])),
                                      Rational(Integer(p[0] * q[1] - p[1] * q[0]))};
      lines.insert(PointConfiguration::normalize(l));
    }
  }
  for (const auto& l : lines) candidates.push_back({1, l});

  std::optional<MukaiResult> best;
  Rational best_score, max_ratio;
  for (const auto& c : candidates) {
    std::size_t count = 0;
    if (c.dim == 0) {
      count = 1;
    } else {
      for (const auto& p : pts) {
        if (c.coords[0] * p[0] + c.coords[1] * p[1] + c.coords[2] * p[2] == 0) ++count;
      }
    }
    const Rational ratio = Rational(static_cast<long long>(count)) / n;
    const Rational threshold = Rational(c.dim + 1, 3);
    const Rational score = ratio / threshold;
    max_ratio = std::max(max_ratio, ratio);
    if (!best || score > best_score || (score == best_score && c < best->witness)) {
      best = MukaiResult{Stability::Stable, c, count, ratio, threshold, {}};
      best_score = score;
    }
  }
  best->max_ratio = max_ratio;
  if (best_score > 1) {
    best->verdict = Stability::Unstable;
  } else if (best_score == 1) {
    best->verdict = Stability::Borderline;
  }
  return *best;
}

}  // namespace polychow
