#include "commands.hpp"

namespace polychow::cli {

namespace {

struct Loaded {
  Polygon polygon;
  std::string bytes;
};

Loaded load_polytope(const std::string& path) {
  std::string bytes = read_file(path);
  return {parse_polytope(bytes, path), bytes};
}

std::int64_t dilation(const Options& o) { return o.i.value_or(1); }

}  // namespace

Outcome cmd_info(const Options& o) {
  const auto [p, bytes] = load_polytope(o.file);
  Json r;
  r["vertices"] = to_json(p);
  r["area"] = to_json(area(p));
  r["boundary_lattice_length"] = to_json(boundary_lattice_length(p));
  r["is_lattice"] = is_lattice(p);
  r["is_delzant"] = is_delzant(p);
  r["unimodular_corners"] = has_unimodular_corners(p);
  r["k"] = denominator_lcm(p);
  r["moment_integral"] = to_json(moment_integral(p));
  r["barycenter"] = to_json(barycenter(p));
  return {r, fnv1a64(bytes)};
}

Outcome cmd_ehrhart(const Options& o) {
  const auto [p, bytes] = load_polytope(o.file);
  Json r;
  if (o.poly) {
    r["ehrhart_polynomial"] = to_json(ehrhart_poly(p));
  } else {
    r["i"] = dilation(o);
    r["lattice_points"] = ehrhart_eval(p, dilation(o)).get_str();
  }
  return {r, fnv1a64(bytes)};
}

Outcome cmd_sum(const Options& o) {
  const auto [p, bytes] = load_polytope(o.file);
  Json r;
  if (o.poly) {
    r["sum_polynomial"] = to_json(sum_poly(p));
  } else {
    r["i"] = dilation(o);
    r["sum"] = to_json(sum_points(p, dilation(o)));
  }
  return {r, fnv1a64(bytes)};
}

Outcome cmd_chow(const Options& o) {
  const auto [p, bytes] = load_polytope(o.file);
  Json r;
  if (o.poly) {
    const VecPoly c = chow_poly(p);
    r["linear"] = to_json(c.c1);
    r["constant"] = to_json(c.c0);
    r["coefficient_span_dim"] = coefficient_span_dim(c);
  } else {
    r["i"] = dilation(o);
    r["chow"] = to_json(chow_eval(p, dilation(o)));
  }
  return {r, fnv1a64(bytes)};
}

Outcome cmd_blowup(const Options& o) {
  if (o.cuts.empty()) throw Error(ErrorKind::InvalidArgument, "blowup needs --cuts FILE");
  const auto [base, bytes] = load_polytope(o.file);
  const std::string cut_bytes = read_file(o.cuts);
  const Decomposition d = chop_corners(base, parse_cuts(cut_bytes, o.cuts));

  Json r;
  r["base"] = to_json(d.base);
  r["chopped"] = to_json(d.chopped);
  r["chopped_is_delzant"] = d.chopped_is_delzant;
  r["k"] = d.k;
  Json cuts = Json::array();
  for (std::size_t a = 0; a < d.cuts.size(); ++a) {
    cuts.push_back(Json{{"vertex", to_json(d.cuts[a].vertex)},
                        {"m", d.depths[a]},
                        {"frame", to_json(d.frames[a])},
                        {"seam", Json::array({to_json(d.seams[a].from), to_json(d.seams[a].to)})}});
  }
  r["cuts"] = cuts;
  r["M"] = to_json(d.M);
  r["Mtilde"] = to_json(d.Mtilde);
  r["A"] = to_json(d.A);
  r["B"] = to_json(d.B);
  const DfInvariants df = df_invariants(d, o.measure);
  r["DF1"] = to_json(df.df1);
  r["DF2"] = to_json(df.df2);
  const VecPoly chow = chow_after_blowup(d, o.measure);
  r["chow"] = Json{{"linear", to_json(chow.c1)}, {"constant", to_json(chow.c0)}};
  r["coefficient_span_dim"] = coefficient_span_dim(chow);

  int code = 0;
  if (o.verify) {
    const BlowupVerification v = verify_blowup_theorem(d, o.imax.value_or(5), o.measure);
    Json rows = Json::array();
    for (const auto& row : v.rows) {
      rows.push_back(Json{{"i", row.i},
                          {"formula", to_json(row.formula)},
                          {"enumerated", to_json(row.direct)},
                          {"equal", row.equal()}});
    }
    r["verification"] = Json{{"rows", rows}, {"verdict", v.ok() ? "pass" : "mismatch"}};
    if (!v.ok()) code = 2;
  }
  return {r, fnv1a64(bytes + cut_bytes), code};
}

Outcome cmd_fo(const Options& o) {
  const auto [p, bytes] = load_polytope(o.file);
  const std::int64_t n = o.i.value_or(o.imax.value_or(1));
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "--i must be at least 1");
  Json r;
  Json values = Json::array();
  for (std::int64_t i = 1; i <= n; ++i) values.push_back(Json{{"i", i}, {"fo", to_json(fo_invariant(p, i))}});
  r["fo"] = values;
  r["centrally_symmetric"] = is_centrally_symmetric(p);
  std::string group_bytes;
  if (!o.group.empty()) {
    group_bytes = read_file(o.group);
    const SymmetryGroup g = SymmetryGroup::generate(parse_group(group_bytes, o.group));
    r["group_order"] = g.order();
    r["weakly_symmetric"] = is_weakly_symmetric(p, g);
  }
  return {r, fnv1a64(bytes + group_bytes)};
}

Outcome cmd_mukai(const Options& o) {
  const std::string bytes = read_file(o.file);
  const PointConfiguration pts = parse_points(bytes, o.file);
  const MukaiResult m = mukai_classify(pts);
  Json r;
  Json list = Json::array();
  for (const auto& p : pts.points()) list.push_back(Json::array({p[0].get_str(), p[1].get_str(), p[2].get_str()}));
  r["points"] = list;
  r["verdict"] = std::string(to_string(m.verdict));
  r["witness"] = Json{{"kind", m.witness.dim == 0 ? "point" : "line"},
                      {"coords", Json::array({m.witness.coords[0].get_str(), m.witness.coords[1].get_str(),
                                              m.witness.coords[2].get_str()})},
                      {"incidences", m.incidences},
                      {"ratio", to_json(m.ratio)},
                      {"threshold", to_json(m.threshold)}};
  r["max_ratio"] = to_json(m.max_ratio);
  return {r, fnv1a64(bytes)};
}

}  // namespace polychow::cli
