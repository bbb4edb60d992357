#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "polychow/polychow.hpp"

namespace polychow::cli {

using Json = nlohmann::ordered_json;

/// Whole file contents; Error{ParseError} if it cannot be read.
std::string read_file(const std::string& path);

/// FNV-1a, 64 bit, as 16 lowercase hex digits.
std::string fnv1a64(const std::string& bytes);

// Parsers take the raw text and a label used in messages. Every failure is an
// Error{ParseError} naming the offending JSON path, or the line and column for
// malformed JSON.
Polygon parse_polytope(const std::string& text, const std::string& label);
std::vector<CornerCut> parse_cuts(const std::string& text, const std::string& label);
PointConfiguration parse_points(const std::string& text, const std::string& label);
std::vector<IntMat2> parse_group(const std::string& text, const std::string& label);

Json to_json(const Rational& r);
Json to_json(const RatVec2& v);
Json to_json(const Polygon& p);
Json to_json(const IntMat2& m);
Json to_json(const ScalarPoly& p);
Json to_json(const VecPoly& p);

/// Indented "key: value" rendering of a report.
std::string render_text(const Json& report);

}  // namespace polychow::cli
