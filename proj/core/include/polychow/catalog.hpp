#pragma once

#include <cstdint>
#include <vector>

#include "polychow/blowup.hpp"
#include "polychow/stability.hpp"

// Named polygons, cut lists and point sets that the tests, the acceptance
// suite and `polytope-chow replicate` share.
namespace polychow::catalog {

/// conv{(0,0), (d,0), (0,d)}: the projective plane with O(d).
Polygon projective_plane(std::int64_t d);

/// Unit corners of projective_plane(3); chopping all three gives the hexagon
/// blow_up_three_points().
std::vector<CornerCut> three_point_cuts();
Polygon blow_up_three_points();

/// Cut of the three-point hexagon at (0,2), depth 1/2.
std::vector<CornerCut> four_point_cuts();
/// Cuts of the three-point hexagon at (0,2) and (2,0), depth 1/2 each.
std::vector<CornerCut> five_point_cuts();
Polygon blow_up_five_points();
/// Cut of the five-point octagon at (1,2), depth 1/4.
std::vector<CornerCut> six_point_cuts();

/// conv{(0,0), (0,a), (b,a), (b+an,0)}.
Polygon hirzebruch(std::int64_t a, std::int64_t b, std::int64_t n);

/// Centrally symmetric hexagon (-2,1), (1,1), (2,0), (2,-1), (-1,-1), (-2,0).
Polygon symmetric_hexagon();

/// Triangle (1,0), (0,1), (-1,-1) and the order-3 rotation preserving it.
Polygon z3_triangle();
IntMat2 z3_generator();

/// [1:0:0], [0:1:0], [0:0:1], [1:1:1].
PointConfiguration four_general_points();
/// [1:0:0], [0:1:0], [1:1:0], [0:0:1]; the first three lie on z = 0.
PointConfiguration four_points_three_collinear();
/// Torus-fixed points of the five-point blow-up: [1:0:0], [0:1:0], [0:0:1],
/// [1:0:1], [1:1:0].
PointConfiguration five_blown_up_points();

}  // namespace polychow::catalog
