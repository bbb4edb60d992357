#include "io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace polychow::cli {

namespace {

[[noreturn]] void fail(const std::string& label, const std::string& path, const std::string& what) {
  throw Error(ErrorKind::ParseError, label + ": " + (path.empty() ? "" : path + ": ") + what);
}

Json parse_json(const std::string& text, const std::string& label) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // e.what() carries "at line L, column C".
    fail(label, "", e.what());
  }
}

const Json& member(const Json& doc, const char* key, const std::string& label) {
  if (!doc.is_object()) fail(label, "", "top level must be an object");
  const auto it = doc.find(key);
  if (it == doc.end()) fail(label, "", std::string("missing \"") + key + "\"");
  if (!it->is_array()) fail(label, key, "must be an array");
  return *it;
}

Rational rational_at(const Json& j, const std::string& label, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) fail(label, path, "expected an integer or a \"p/q\" string");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const Error& e) {
    fail(label, path, e.detail());
  }
}

std::int64_t integer_at(const Json& j, const std::string& label, const std::string& path) {
  const Rational r = rational_at(j, label, path);
  if (!r.is_integer()) fail(label, path, "expected an integer");
  return to_int64(r.num());
}

RatVec2 pair_at(const Json& j, const std::string& label, const std::string& path) {
  if (!j.is_array() || j.size() != 2) fail(label, path, "expected a coordinate pair");
  return {rational_at(j[0], label, path + "[0]"), rational_at(j[1], label, path + "[1]")};
}

std::string index(const char* key, std::size_t i) { return std::string(key) + "[" + std::to_string(i) + "]"; }

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Polygon parse_polytope(const std::string& text, const std::string& label) {
  const Json doc = parse_json(text, label);
  const Json& vs = member(doc, "vertices", label);
  std::vector<RatVec2> pts;
  for (std::size_t i = 0; i < vs.size(); ++i) pts.push_back(pair_at(vs[i], label, index("vertices", i)));
  return canonicalize(pts);
}

std::vector<CornerCut> parse_cuts(const std::string& text, const std::string& label) {
  const Json doc = parse_json(text, label);
  const Json& cs = member(doc, "cuts", label);
  std::vector<CornerCut> cuts;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const std::string path = index("cuts", i);
    if (!cs[i].is_object() || !cs[i].contains("vertex") || !cs[i].contains("depth")) {
      fail(label, path, "expected {\"vertex\": [x, y], \"depth\": \"p/q\"}");
    }
    cuts.push_back({pair_at(cs[i]["vertex"], label, path + ".vertex"), rational_at(cs[i]["depth"], label, path + ".depth")});
  }
  return cuts;
}

PointConfiguration parse_points(const std::string& text, const std::string& label) {
  const Json doc = parse_json(text, label);
  const Json& ps = member(doc, "points", label);
  std::vector<std::array<Rational, 3>> pts;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const std::string path = index("points", i);
    if (!ps[i].is_array() || ps[i].size() != 3) fail(label, path, "expected a homogeneous triple");
    pts.push_back({rational_at(ps[i][0], label, path + "[0]"), rational_at(ps[i][1], label, path + "[1]"),
                   rational_at(ps[i][2], label, path + "[2]")});
  }
  return PointConfiguration::from_rationals(pts);
}

std::vector<IntMat2> parse_group(const std::string& text, const std::string& label) {
  const Json doc = parse_json(text, label);
  const Json& gs = member(doc, "generators", label);
  std::vector<IntMat2> out;
  for (std::size_t i = 0; i < gs.size(); ++i) {
    const std::string path = index("generators", i);
    const Json& m = gs[i];
    if (!m.is_array() || m.size() != 2 || !m[0].is_array() || m[0].size() != 2 || !m[1].is_array() ||
        m[1].size() != 2) {
      fail(label, path, "expected [[a, b], [c, d]]");
    }
    out.push_back({integer_at(m[0][0], label, path), integer_at(m[0][1], label, path),
                   integer_at(m[1][0], label, path), integer_at(m[1][1], label, path)});
  }
  return out;
}

Json to_json(const Rational& r) { return r.str(); }
Json to_json(const RatVec2& v) { return Json::array({v.x.str(), v.y.str()}); }

Json to_json(const Polygon& p) {
  Json out = Json::array();
  for (const auto& v : p.vertices()) out.push_back(to_json(v));
  return out;
}

Json to_json(const IntMat2& m) { return Json::array({Json::array({m.a, m.b}), Json::array({m.c, m.d})}); }

Json to_json(const ScalarPoly& p) {
  return Json{{"i^2", to_json(p.c2)}, {"i^1", to_json(p.c1)}, {"i^0", to_json(p.c0)}};
}

Json to_json(const VecPoly& p) {
  return Json{{"i^2", to_json(p.c2)}, {"i^1", to_json(p.c1)}, {"i^0", to_json(p.c0)}};
}

namespace {

bool is_flat(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j) {
    if (e.is_object()) return false;
    if (e.is_array() && !is_flat(e)) return false;
  }
  return true;
}

std::string scalar(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) {
    std::string s = "(";
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + scalar(j[i]);
    return s + ")";
  }
  return j.dump();
}

void render(const Json& j, int depth, std::ostringstream& os) {
  const std::string pad(2 * depth, ' ');
  if (j.is_object()) {
    for (const auto& [k, val] : j.items()) {
      if (val.is_object() || (val.is_array() && !is_flat(val))) {
        os << pad << k << ":\n";
        render(val, depth + 1, os);
      } else {
        os << pad << k << ": " << scalar(val) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (e.is_object()) {
        os << pad << "-\n";
        render(e, depth + 1, os);
      } else {
        os << pad << "- " << scalar(e) << "\n";
      }
    }
  } else {
    os << pad << scalar(j) << "\n";
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream os;
  render(report, 0, os);
  return os.str();
}

}  // namespace polychow::cli
