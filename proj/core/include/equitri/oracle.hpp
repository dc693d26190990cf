#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "equitri/geometry.hpp"
#include "equitri/side_solver.hpp"

namespace equitri {

// Brute-force placement search.  Independent of the closed forms in
// side_solver: it only ever asks "is this ET inside the triangle?".
struct OracleConfig {
  // Coarse grid over the base offset along a side.
  std::size_t grid_points = 2048;
  // Golden-section iterations around the best grid cell, and zoom steps for
  // the global search.
  std::size_t refine_iterations = 80;
  // Half-plane slack, relative to the longest side.
  double containment_tolerance = 1e-12;
  // Distance, relative to the side length, under which a constraint counts as
  // active when inferring the placement mode.
  double mode_tolerance = 1e-7;
  // Global search grid: 3 * n anchor positions on the perimeter x 2 * n rotations.
  std::size_t global_grid_points = 128;
  // Seed for randomized triangle suites driven by this config.
  std::uint64_t seed = 7;

  // Throws InvalidInput unless grid_points >= 16, refine_iterations >= 10 and
  // the tolerances are positive.
  void validate() const;
};

// Largest ET with base [t, t + s] on `side`: for each t on the grid the
// largest feasible s is found by bisection (feasibility is monotone in s),
// then the best t is refined by golden-section search.  Wedged placements are
// allowed; the mode is read off the active constraints afterwards.
SideETResult oracle_largest_et_on_side(const TriangleSpec& tri, SideLabel side,
                                       const OracleConfig& cfg = {});

struct GlobalETResult {
  ETMetrics metrics;
  std::array<Point, 3> vertices{};
  double ratio = 0.0;
  // Perimeter parameter in [0, 3) of the anchor vertex (edge k runs from
  // vertex k to vertex k+1) and the direction of the first ET edge, degrees.
  double anchor = 0.0;
  double rotation_deg = 0.0;
};

// Largest contained ET at any position and orientation: grid over anchor
// vertex position on the boundary x rotation, bisection on size, then a
// zooming local search around the best cells.
GlobalETResult oracle_global_inscribed_et(const TriangleSpec& tri, const OracleConfig& cfg = {});

}  // namespace equitri
