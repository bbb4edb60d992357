// Embedded reference fixtures for `polytope-chow replicate`.
#include <functional>
#include <sstream>

#include "commands.hpp"

namespace polychow::cli {

namespace {

RatVec2 v(long long x, long long y) { return {Rational(x), Rational(y)}; }

struct Result {
  bool pass = true;
  std::string detail;

  template <class A, class B>
  void equal(const std::string& what, const A& got, const B& want) {
    if (got == want) return;
    std::ostringstream os;
    os << what << " = " << got << ", expected " << want;
    fail(os.str());
  }
  void fail(const std::string& what) {
    if (pass) detail = what;
    pass = false;
  }
};

struct Fixture {
  const char* name;
  std::function<Json()> inputs;
  std::function<void(Result&, EdgeMeasure)> run;
};

Json cuts_json(const std::vector<CornerCut>& cuts) {
  Json out = Json::array();
  for (const auto& c : cuts) out.push_back(Json{{"vertex", to_json(c.vertex)}, {"depth", to_json(c.depth)}});
  return out;
}

Json decomposition_inputs(const Polygon& base, const std::vector<CornerCut>& cuts) {
  return Json{{"vertices", to_json(base)}, {"cuts", cuts_json(cuts)}};
}

void check_blowup(Result& r, const Decomposition& d, EdgeMeasure m, const VecPoly& expected, std::int64_t i_max) {
  r.equal("Chow", chow_after_blowup(d, m), expected);
  const BlowupVerification ver = verify_blowup_theorem(d, i_max, m);
  if (auto bad = ver.first_mismatch()) {
    std::ostringstream os;
    os << "formula " << bad->formula << " vs enumeration " << bad->direct << " at i=" << bad->i;
    r.fail(os.str());
  }
}

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all{
      {"three-point-blowup",
       [] { return decomposition_inputs(catalog::projective_plane(3), catalog::three_point_cuts()); },
       [](Result& r, EdgeMeasure m) {
         const Decomposition d = chop_corners(catalog::projective_plane(3), catalog::three_point_cuts());
         r.equal("A", d.A, Rational(6));
         r.equal("B", d.B, Rational(6));
         check_blowup(r, d, m, VecPoly{}, 5);
       }},
      {"four-point-blowup",
       [] { return decomposition_inputs(catalog::blow_up_three_points(), catalog::four_point_cuts()); },
       [](Result& r, EdgeMeasure m) {
         const Decomposition d = chop_corners(catalog::blow_up_three_points(), catalog::four_point_cuts());
         const RatVec2 dir = v(1, -1);
         r.equal("k", d.k, 2);
         r.equal("A", d.A, Rational(11));
         r.equal("B", d.B, Rational(23));
         const DfInvariants df = df_invariants(d, m);
         r.equal("DF1", df.df1, Rational(83, 12) * dir);
         r.equal("DF2", df.df2, Rational(13, 12) * dir);
         check_blowup(r, d, m, VecPoly{{}, Rational(83, 12) * dir, Rational(13, 12) * dir}, 5);
         r.equal("span", coefficient_span_dim(chow_after_blowup(d, m)), 1);
       }},
      {"five-point-blowup",
       [] { return decomposition_inputs(catalog::blow_up_three_points(), catalog::five_point_cuts()); },
       [](Result& r, EdgeMeasure m) {
         const Decomposition d = chop_corners(catalog::blow_up_three_points(), catalog::five_point_cuts());
         check_blowup(r, d, m, VecPoly{}, 5);
       }},
      {"six-point-blowup-consistency",
       [] { return decomposition_inputs(catalog::blow_up_five_points(), catalog::six_point_cuts()); },
       [](Result& r, EdgeMeasure m) {
         const Decomposition d = chop_corners(catalog::blow_up_five_points(), catalog::six_point_cuts());
         r.equal("k", d.k, 4);
         r.equal("A", d.A, Rational(19));
         r.equal("B", d.B, Rational(87));
         check_blowup(r, d, m, chow_poly(scale(d.chopped, d.k)), 3);
       }},
      {"six-point-blowup-reference",
       [] { return decomposition_inputs(catalog::blow_up_five_points(), catalog::six_point_cuts()); },
       [](Result& r, EdgeMeasure m) {
         const Decomposition d = chop_corners(catalog::blow_up_five_points(), catalog::six_point_cuts());
         const VecPoly reference{{},
                                 -RatVec2{Rational(394), Rational(4747, 12)},
                                 -RatVec2{Rational(390), Rational(4745, 12)}};
         r.equal("Chow", chow_after_blowup(d, m), reference);
       }},
      {"hirzebruch-closed-form",
       [] { return Json{{"a", "1..4"}, {"b", "1..4"}, {"n", "1..4"}, {"i", "1..5"}}; },
       [](Result& r, EdgeMeasure) {
         for (long long a = 1; a <= 4; ++a) {
           for (long long b = 1; b <= 4; ++b) {
             for (long long n = 1; n <= 4; ++n) {
               const Polygon p = catalog::hirzebruch(a, b, n);
               for (long long i = 1; i <= 5; ++i) {
                 const Rational f = Rational(a * a * n * (a * i + 1) * (a * n - a + 2 * b), 24);
                 r.equal("Chow(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(n) +
                             "; i=" + std::to_string(i) + ")",
                         chow_eval(p, i), RatVec2{f * n, f * -2});
               }
             }
           }
         }
       }},
      {"symmetric-hexagon",
       [] { return Json{{"vertices", to_json(catalog::symmetric_hexagon())}}; },
       [](Result& r, EdgeMeasure) {
         const Polygon h = catalog::symmetric_hexagon();
         for (long long i = 1; i <= 6; ++i) r.equal("FO(" + std::to_string(i) + ")", fo_invariant(h, i), RatVec2{});
         if (!is_centrally_symmetric(h)) r.fail("not centrally symmetric");
         if (!is_weakly_symmetric(h, SymmetryGroup::generate({{-1, 0, 0, -1}}))) r.fail("not weakly symmetric");
         if (!is_weakly_symmetric(catalog::z3_triangle(), SymmetryGroup::generate({catalog::z3_generator()}))) {
           r.fail("order-3 triangle not weakly symmetric");
         }
       }},
      {"lattice-sum-blowup-identity",
       [] { return decomposition_inputs(catalog::projective_plane(3), catalog::three_point_cuts()); },
       [](Result& r, EdgeMeasure) {
         const Decomposition single = chop_corners(catalog::projective_plane(3), {{v(0, 0), Rational(1)}});
         const Decomposition three = chop_corners(catalog::projective_plane(3), catalog::three_point_cuts());
         for (const auto* d : {&single, &three}) {
           const auto res = lattice_sum_identity_residual(*d);
           for (const auto& x : res) r.equal("residual", x, Rational(0));
           r.equal("l = 1 condition", ell1_condition(*d), Rational(0));
         }
       }},
  };
  return all;
}

}  // namespace

Outcome cmd_replicate(const Options& o) {
  Json inputs;
  for (const auto& f : fixtures()) inputs[f.name] = f.inputs();

  Json table = Json::array();
  Json failing = Json::array();
  for (const auto& f : fixtures()) {
    Result r;
    try {
      f.run(r, o.measure);
    } catch (const Error& e) {
      r.fail(e.what());
    }
    Json row{{"fixture", f.name}, {"status", r.pass ? "pass" : "FAIL"}};
    if (!r.pass) {
      row["detail"] = r.detail;
      failing.push_back(f.name);
    }
    table.push_back(row);
  }
  Json out;
  out["edge_measure"] = o.measure == EdgeMeasure::Lattice ? "lattice" : "euclidean";
  out["fixtures"] = table;
  out["passed"] = table.size() - failing.size();
  out["total"] = table.size();
  out["failing"] = failing;
  return {out, fnv1a64(inputs.dump()), failing.empty() ? 0 : 2};
}

}  // namespace polychow::cli
