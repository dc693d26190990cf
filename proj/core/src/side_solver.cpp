#include "equitri/side_solver.hpp"

#include <algorithm>
#include <limits>

#include "equitri/errors.hpp"

namespace equitri {

std::string_view to_string(PlacementMode mode) {
  switch (mode) {
    case PlacementMode::ApexAtOppositeVertex: return "apex_at_opposite_vertex";
    case PlacementMode::SharedVertex: return "shared_vertex";
    case PlacementMode::Wedged: return "wedged";
    case PlacementMode::WholeTriangle: return "whole_triangle";
    case PlacementMode::None: return "none";
  }
  return "unknown";
}

std::optional<PlacementMode> parse_placement_mode(std::string_view text) {
  for (auto mode : {PlacementMode::ApexAtOppositeVertex, PlacementMode::SharedVertex,
                    PlacementMode::Wedged, PlacementMode::WholeTriangle, PlacementMode::None}) {
    if (to_string(mode) == text) return mode;
  }
  return std::nullopt;
}

namespace {

struct SideFrame {
  Point start;
  Point end;
  Point opposite;
  Point along;   // unit vector start -> end
  Point inward;  // unit normal pointing at the opposite vertex
  double length;
};

SideFrame frame_for(const TriangleSpec& tri, SideLabel side) {
  const auto ends = tri.side_endpoints(side);
  SideFrame f;
  f.start = ends[0];
  f.end = ends[1];
  f.opposite = tri.vertex(side);
  f.length = distance(f.start, f.end);
  f.along = (1.0 / f.length) * (f.end - f.start);
  f.inward = Point{-f.along.y, f.along.x};
  if (dot(f.opposite - f.start, f.inward) < 0.0) f.inward = -1.0 * f.inward;
  return f;
}

SideETResult make_result(const TriangleSpec& tri, SideLabel side, PlacementMode mode, double s,
                         std::array<Point, 3> vertices) {
  SideETResult r;
  r.side = side;
  r.mode = mode;
  r.metrics = et_metrics_from_side(s);
  r.ratio = r.metrics->area / tri.area();
  r.vertices = vertices;
  r.inscribed = mode != PlacementMode::Wedged;
  return r;
}

}  // namespace

SideETResult largest_et_on_side(const TriangleSpec& tri, SideLabel side, bool allow_wedged) {
  if (index_of(side) > 2) throw InvalidInput("unknown side label");
  const double area = tri.area();
  if (!(area > 0.0)) throw DegenerateTriangle("triangle has zero area");

  const SideFrame f = frame_for(tri, side);
  const auto end_labels = TriangleSpec::side_endpoint_labels(side);

  if (tri.angles().is_equilateral()) {
    return make_result(tri, side, PlacementMode::WholeTriangle, f.length,
                       {f.start, f.end, f.opposite});
  }

  // Order the endpoints so that theta_small <= theta_large.
  double theta_small = tri.angles().at(end_labels[0]);
  double theta_large = tri.angles().at(end_labels[1]);
  Point small_end = f.start;
  Point large_end = f.end;
  if (theta_small > theta_large) {
    std::swap(theta_small, theta_large);
    std::swap(small_end, large_end);
  }

  if (theta_large < 60.0 - kAngleTolerance) {
    const double h = 2.0 * area / f.length;
    const double s = et_metrics_from_height(h).side;
    const Point foot = f.start + dot(f.opposite - f.start, f.along) * f.along;
    return make_result(tri, side, PlacementMode::ApexAtOppositeVertex, s,
                       {foot - (s / 2.0) * f.along, foot + (s / 2.0) * f.along, f.opposite});
  }

  if (theta_small <= 60.0 + kAngleTolerance) {
    // The apex slides on the side joining small_end and the opposite vertex.
    const double h_shared = 2.0 * area / distance(small_end, f.opposite);
    const double s = h_shared / std::sin(deg_to_rad(60.0 + theta_small));
    const Point toward = (1.0 / f.length) * (small_end - large_end);
    const Point base_end = large_end + s * toward;
    const Point apex = large_end + s * (0.5 * toward + (kSqrt3 / 2.0) * f.inward);
    return make_result(tri, side, PlacementMode::SharedVertex, s, {large_end, base_end, apex});
  }

  if (!allow_wedged) {
    SideETResult none;
    none.side = side;
    none.mode = PlacementMode::None;
    return none;
  }
  const Point mid = 0.5 * (f.start + f.end);
  const Point apex = mid + (kSqrt3 / 2.0 * f.length) * f.inward;
  return make_result(tri, side, PlacementMode::Wedged, f.length, {f.start, f.end, apex});
}

void group_extremes(TriangleETReport& report) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (const auto& r : report.sides) {
    if (!r.has_et()) continue;
    lo = std::min(lo, r.area());
    hi = std::max(hi, r.area());
  }
  report.max_sides = {};
  report.min_sides = {};
  report.absent_sides = {};
  for (const auto& r : report.sides) {
    if (!r.has_et()) {
      report.absent_sides.insert(r.side);
      continue;
    }
    if (r.area() >= hi * (1.0 - report.tie_tolerance)) report.max_sides.insert(r.side);
    if (r.area() <= lo * (1.0 + report.tie_tolerance)) report.min_sides.insert(r.side);
  }
}

TriangleETReport analyze_triangle(const TriangleSpec& tri, bool allow_wedged, double tie_tol) {
  if (!(tie_tol >= 0.0)) throw InvalidInput("tie tolerance must be non-negative");
  TriangleETReport report;
  report.allow_wedged = allow_wedged;
  report.tie_tolerance = tie_tol;
  for (SideLabel s : kAllSides) report.sides[index_of(s)] = largest_et_on_side(tri, s, allow_wedged);
  group_extremes(report);
  return report;
}

}  // namespace equitri
