#include "polychow/blowup.hpp"

#include <algorithm>
#include <sstream>

namespace polychow {

namespace {

RatVec2 column_sum(const IntMat2& a) { return {Rational(a.a + a.b), Rational(a.c + a.d)}; }

std::string describe(const RatVec2& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

Decomposition chop_corners(const Polygon& base, const std::vector<CornerCut>& cuts) {
  if (!has_unimodular_corners(base)) throw Error(ErrorKind::NotDelzant, "base polygon has a non-unimodular corner");

  std::vector<std::size_t> index;
  std::vector<std::size_t> cut_at(base.size(), cuts.size());
  for (std::size_t a = 0; a < cuts.size(); ++a) {
    const std::size_t v = base.find_vertex(cuts[a].vertex);
    if (v == base.size()) {
      throw Error(ErrorKind::InvalidCutVertex, describe(cuts[a].vertex) + " is not a vertex of the base");
    }
    if (cut_at[v] != cuts.size()) {
      throw Error(ErrorKind::InvalidCutVertex, describe(cuts[a].vertex) + " is cut twice");
    }
    if (cuts[a].depth.sign() <= 0) {
      throw Error(ErrorKind::InvalidCutVertex, "cut depth at " + describe(cuts[a].vertex) + " must be positive");
    }
    cut_at[v] = a;
    index.push_back(v);
  }

  std::vector<IntMat2> frames;
  std::vector<Polygon> simplices;
  std::vector<Segment> seams;
  for (std::size_t a = 0; a < cuts.size(); ++a) {
    const std::size_t v = index[a];
    const RatVec2& p = base[v];
    const Rational& t = cuts[a].depth;
    if (t >= lattice_length(base.next(v) - p) || t >= lattice_length(base.prev(v) - p)) {
      throw Error(ErrorKind::CutThroughEdge,
                  "depth " + t.str() + " at " + describe(p) + " reaches an adjacent vertex");
    }
    const IntMat2 frame = corner_frame(base, v);
    const RatVec2 q = p + t * frame.col0().to_rational();
    const RatVec2 r = p + t * frame.col1().to_rational();
    frames.push_back(frame);
    simplices.push_back(Polygon::hull({p, q, r}));
    seams.push_back({q, r});
  }
  for (std::size_t a = 0; a < simplices.size(); ++a) {
    for (std::size_t b = a + 1; b < simplices.size(); ++b) {
      if (!disjoint(simplices[a], simplices[b])) {
        throw Error(ErrorKind::OverlappingCuts,
                    "cuts at " + describe(cuts[a].vertex) + " and " + describe(cuts[b].vertex) + " overlap");
      }
    }
  }

  // Walk the base CCW; a cut vertex is replaced by its seam, entered from the
  // previous edge (r) and left along the next edge (q).
  std::vector<RatVec2> pts;
  for (std::size_t v = 0; v < base.size(); ++v) {
    if (cut_at[v] == cuts.size()) {
      pts.push_back(base[v]);
    } else {
      pts.push_back(seams[cut_at[v]].to);
      pts.push_back(seams[cut_at[v]].from);
    }
  }
  Polygon chopped = Polygon::hull(pts);

  const std::int64_t k = denominator_lcm(chopped);
  const Polygon k_base = scale(base, k);
  if (!is_lattice(k_base)) {
    throw Error(ErrorKind::InternalInconsistency, std::to_string(k) + " * base is not a lattice polygon");
  }
  std::vector<std::int64_t> depths;
  Rational M, Mtilde;
  for (const auto& c : cuts) {
    const Rational m = Rational(k) * c.depth;
    if (!m.is_integer()) {
      throw Error(ErrorKind::InternalInconsistency, "k * depth = " + m.str() + " is not an integer");
    }
    depths.push_back(to_int64(m.num()));
    M += m;
    Mtilde += m * m;
  }

  const Rational A = boundary_lattice_length(k_base) - M;
  const Rational B = 2 * area(k_base) - Mtilde;
  const bool delzant = has_unimodular_corners(chopped);
  Decomposition d{base, cuts, std::move(chopped), std::move(simplices), std::move(seams), k, std::move(depths),
                  std::move(frames), M, Mtilde, A, B, delzant};
  return d;
}

SimplexClosedForms simplex_closed_forms(std::int64_t m, std::int64_t i) {
  if (m < 1 || i < 1) throw Error(ErrorKind::InvalidArgument, "m and i must be positive");
  const Rational rm(m), im(m * i);
  const Rational s = rm / 6 * (im + 1) * (im - 1);
  const Rational mom = rm * rm * rm / 6;
  return {rm * rm / 2, {s, s}, im / 2 * (im + 1), {mom, mom}};
}

DfInvariants df_invariants(const Decomposition& d, EdgeMeasure measure) {
  const Polygon kb = scale(d.base, d.k);
  const RatVec2 integral = moment_integral(kb);
  const RatVec2 boundary = boundary_moment(kb, measure);
  const RatVec2 s_const = sum_poly(kb).c0;
  const Rational k(d.k);

  RatVec2 w1, w3, p1, p2;  // Σ m w_a, Σ m^3 w_a, Σ m p_a, Σ m^2 p_a
  for (std::size_t a = 0; a < d.cuts.size(); ++a) {
    const Rational m(d.depths[a]);
    const RatVec2 w = column_sum(d.frames[a]);
    const RatVec2& p = d.cuts[a].vertex;
    w1 += m * w;
    w3 += m * m * m * w;
    p1 += m * p;
    p2 += m * m * p;
  }

  DfInvariants out;
  out.df1 = d.A / 12 * w3 + k / 4 * (d.A * p2 - d.B * p1) + d.M / 2 * integral - d.Mtilde / 4 * boundary;
  out.df2 = d.B / 12 * w1 + Rational(1, 6) * w3 + k / 2 * p2 - d.Mtilde / 2 * s_const;
  return out;
}

VecPoly chow_after_blowup(const Decomposition& d, EdgeMeasure measure) {
  const DfInvariants df = df_invariants(d, measure);
  return chow_poly(scale(d.base, d.k)) + VecPoly{{}, df.df1, df.df2};
}

bool BlowupVerification::ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const BlowupCheckRow& r) { return r.equal(); });
}

std::optional<BlowupCheckRow> BlowupVerification::first_mismatch() const {
  for (const auto& r : rows) {
    if (!r.equal()) return r;
  }
  return std::nullopt;
}

BlowupVerification verify_blowup_theorem(const Decomposition& d, std::int64_t i_max, EdgeMeasure measure) {
  if (i_max < 2) throw Error(ErrorKind::InvalidArgument, "i_max must be at least 2");
  const VecPoly formula = chow_after_blowup(d, measure);
  const Polygon kc = scale(d.chopped, d.k);
  BlowupVerification out;
  for (std::int64_t i = 1; i <= i_max; ++i) out.rows.push_back({i, formula(i), chow_eval(kc, i)});
  return out;
}

VerificationMismatch::VerificationMismatch(const BlowupCheckRow& row)
    : Error(ErrorKind::VerificationMismatch, "blow-up formula gives " + describe(row.formula) +
                                                 " but direct enumeration gives " + describe(row.direct) +
                                                 " at i=" + std::to_string(row.i)),
      row_(row) {}

void require_verified(const BlowupVerification& v) {
  if (auto row = v.first_mismatch()) throw VerificationMismatch(*row);
}

RatVec2 verify_general_identity(const Decomposition& d, const AffineMap& f, std::int64_t i) {
  const Polygon kb = scale(d.base, d.k);
  const Rational k(d.k);

  Rational vol_d;         // Σ Vol(kD_a)
  RatVec2 int_d;          // Σ ∫_{kD_a} f
  RatVec2 p_diff;         // Σ (P_{kD_a} - P_{kL_a})
  Rational e_diff;        // Σ (E_{kD_a} - E_{kL_a})
  for (std::size_t a = 0; a < d.simplices.size(); ++a) {
    const Polygon kd = scale(d.simplices[a], d.k);
    const Segment kl{k * d.seams[a].from, k * d.seams[a].to};
    vol_d += area(kd);
    int_d += integrate(kd, f);
    p_diff += p_delta(kd, f, i) - p_delta(kl, f, i);
    e_diff += Rational(ehrhart_eval(kd, i)) - Rational(ehrhart_eval(kl, i));
  }
  const Rational vol = area(kb);
  const Rational e = Rational(ehrhart_eval(kb, i));
  const RatVec2 pk = p_delta(kb, f, i);
  const RatVec2 ik = integrate(kb, f);

  const RatVec2 rhs = chow_eval(kb, f, i) - vol_d * pk - (vol - vol_d) * p_diff + e * int_d + e_diff * (ik - int_d);
  return rhs - chow_eval(scale(d.chopped, d.k), f, i);
}

AdditivityResidual additivity_residual(const Decomposition& d, std::int64_t i) {
  const Polygon kb = scale(d.base, d.k);
  const Polygon kc = scale(d.chopped, d.k);
  const Rational k(d.k);
  Integer count = ehrhart_eval(kb, i) - ehrhart_eval(kc, i);
  RatVec2 sum = sum_points(kb, i) - sum_points(kc, i);
  const AffineMap id = AffineMap::identity();
  for (std::size_t a = 0; a < d.simplices.size(); ++a) {
    const Polygon kd = scale(d.simplices[a], d.k);
    const Segment kl{k * d.seams[a].from, k * d.seams[a].to};
    count -= ehrhart_eval(kd, i) - ehrhart_eval(kl, i);
    sum -= p_delta(kd, id, i) - p_delta(kl, id, i);
  }
  return {count, sum};
}

}  // namespace polychow
