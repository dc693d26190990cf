#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "equitri/geometry.hpp"

namespace equitri {

// How the largest equilateral triangle (ET) with its base on a side sits in
// the triangle.
enum class PlacementMode {
  ApexAtOppositeVertex,  // both adjacent angles < 60: apex is the opposite vertex
  SharedVertex,          // one adjacent angle >= 60: ET keeps that endpoint, apex on a side
  Wedged,                // both adjacent angles > 60: base is the whole side, apex interior
  WholeTriangle,         // the triangle is itself equilateral
  None,                  // both adjacent angles > 60 and wedged placements disallowed
};

std::string_view to_string(PlacementMode mode);
std::optional<PlacementMode> parse_placement_mode(std::string_view text);

struct SideETResult {
  SideLabel side = SideLabel::A;
  PlacementMode mode = PlacementMode::None;
  std::optional<ETMetrics> metrics;
  // ET area / triangle area.
  std::optional<double> ratio;
  // Base start, base end, apex.
  std::optional<std::array<Point, 3>> vertices;
  // All three ET vertices on the triangle boundary.
  bool inscribed = false;

  bool has_et() const { return mode != PlacementMode::None; }
  double side_length() const { return metrics ? metrics->side : 0.0; }
  double area() const { return metrics ? metrics->area : 0.0; }
};

inline constexpr double kDefaultTieTolerance = 1e-9;

struct TriangleETReport {
  std::array<SideETResult, 3> sides;
  // Sides whose area is within tie_tolerance (relative) of the extreme.
  SideSet max_sides;
  SideSet min_sides;
  // Sides with no admissible ET (mode None).
  SideSet absent_sides;
  bool allow_wedged = false;
  double tie_tolerance = kDefaultTieTolerance;

  const SideETResult& at(SideLabel s) const { return sides[index_of(s)]; }
  bool all_tied() const { return max_sides == SideSet::all() && min_sides == SideSet::all(); }
};

// Largest ET whose base lies on `side`.  With θ1 <= θ2 the angles at the
// side's endpoints:
//   θ2 < 60          apex at the opposite vertex, s = 2h/√3
//   θ1 < 60 <= θ2    shares the θ2 endpoint, s = h'/sin(60° + θ1), where h' is
//                    the altitude from that endpoint to the side carrying the apex
//   θ1 > 60          wedged (s = side length) or None
// An adjacent angle of exactly 60 (within kAngleTolerance) uses the middle
// case; both neighbouring formulas coincide there.
SideETResult largest_et_on_side(const TriangleSpec& tri, SideLabel side, bool allow_wedged = false);

TriangleETReport analyze_triangle(const TriangleSpec& tri, bool allow_wedged = false,
                                  double tie_tol = kDefaultTieTolerance);

// Groups sides whose areas are within `tie_tol` relative of the max / min.
// Sides without an ET are skipped.
void group_extremes(TriangleETReport& report);

}  // namespace equitri
