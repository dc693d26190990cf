#include "equitri/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "equitri/errors.hpp"

namespace equitri {

void OracleConfig::validate() const {
  if (grid_points < 16) throw InvalidInput("oracle grid needs at least 16 points");
  if (refine_iterations < 10) throw InvalidInput("oracle needs at least 10 refinement iterations");
  if (global_grid_points < 16) throw InvalidInput("global oracle grid needs at least 16 points");
  if (!(containment_tolerance > 0.0) || !(mode_tolerance > 0.0)) {
    throw InvalidInput("oracle tolerances must be positive");
  }
}

namespace {

constexpr double kGolden = 0.6180339887498949;

// Closed triangle as three inward half-planes n.p + offset >= -slack.
class Containment {
 public:
  Containment(const TriangleSpec& tri, double relative_tol) : slack_(relative_tol * tri.scale()) {
    const std::array<Point, 3> v = {tri.vertex(SideLabel::A), tri.vertex(SideLabel::B),
                                    tri.vertex(SideLabel::C)};
    for (std::size_t k = 0; k < 3; ++k) {
      const Point from = v[k];
      const Point to = v[(k + 1) % 3];
      const Point other = v[(k + 2) % 3];
      Point n{-(to.y - from.y), to.x - from.x};
      n = (1.0 / norm(n)) * n;
      if (dot(n, other - from) < 0.0) n = -1.0 * n;
      normal_[k] = n;
      offset_[k] = -dot(n, from);
    }
  }

  bool contains(Point p) const {
    return dot(normal_[0], p) + offset_[0] >= -slack_ && dot(normal_[1], p) + offset_[1] >= -slack_ &&
           dot(normal_[2], p) + offset_[2] >= -slack_;
  }
  bool contains(const std::array<Point, 3>& pts) const {
    return contains(pts[0]) && contains(pts[1]) && contains(pts[2]);
  }

 private:
  std::array<Point, 3> normal_{};
  std::array<double, 3> offset_{};
  double slack_;
};

// Largest s in [0, hi] with feasible(s), assuming feasibility is monotone and
// feasible(0) holds.
template <typename Feasible>
double bisect_size(double hi, double unit, Feasible&& feasible) {
  if (hi <= 0.0) return 0.0;
  if (feasible(hi)) return hi;
  double lo = 0.0;
  const double resolution = 4.0 * std::numeric_limits<double>::epsilon() * unit;
  for (int i = 0; i < 200 && hi - lo > resolution; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (feasible(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

struct SidePlacement {
  Point start;
  Point along;
  Point inward;
  Point opposite;
  double length;

  std::array<Point, 3> et(double t, double s) const {
    return {start + t * along, start + (t + s) * along,
            start + (t + 0.5 * s) * along + (kSqrt3 / 2.0 * s) * inward};
  }
};

double distance_to_line(Point p, Point a, Point b) {
  return std::abs(cross(b - a, p - a)) / distance(a, b);
}

PlacementMode infer_mode(const TriangleSpec& tri, SideLabel side, const SidePlacement& f, double t,
                         double s, double tol) {
  const auto pts = f.et(t, s);
  const int ends_at_vertices = (std::abs(t) <= tol ? 1 : 0) + (std::abs(f.length - t - s) <= tol ? 1 : 0);
  const bool apex_at_vertex = distance(pts[2], f.opposite) <= tol;
  bool apex_on_side = false;
  for (SideLabel other : kAllSides) {
    if (other == side) continue;
    const auto ends = tri.side_endpoints(other);
    apex_on_side = apex_on_side || distance_to_line(pts[2], ends[0], ends[1]) <= tol;
  }

  if (ends_at_vertices == 2) {
    if (apex_at_vertex) return PlacementMode::WholeTriangle;
    return apex_on_side ? PlacementMode::SharedVertex : PlacementMode::Wedged;
  }
  if (ends_at_vertices == 1 && (apex_on_side || apex_at_vertex)) return PlacementMode::SharedVertex;
  if (ends_at_vertices == 0 && apex_at_vertex) return PlacementMode::ApexAtOppositeVertex;
  throw std::logic_error("oracle: optimum has an unrecognized set of active constraints");
}

}  // namespace

SideETResult oracle_largest_et_on_side(const TriangleSpec& tri, SideLabel side, const OracleConfig& cfg) {
  cfg.validate();
  if (index_of(side) > 2) throw InvalidInput("unknown side label");
  const Containment inside(tri, cfg.containment_tolerance);

  const auto ends = tri.side_endpoints(side);
  SidePlacement f;
  f.start = ends[0];
  f.opposite = tri.vertex(side);
  f.length = distance(ends[0], ends[1]);
  f.along = (1.0 / f.length) * (ends[1] - ends[0]);
  f.inward = Point{-f.along.y, f.along.x};
  if (dot(f.opposite - f.start, f.inward) < 0.0) f.inward = -1.0 * f.inward;

  auto max_size = [&](double t) {
    return bisect_size(f.length - t, f.length, [&](double s) { return inside.contains(f.et(t, s)); });
  };

  const std::size_t n = cfg.grid_points;
  const double step = f.length / static_cast<double>(n - 1);
  double best_t = 0.0;
  double best_s = -1.0;
  std::size_t best_k = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const double t = step * static_cast<double>(k);
    const double s = max_size(t);
    if (s > best_s) {
      best_s = s;
      best_t = t;
      best_k = k;
    }
  }

  // s(t) is concave (a minimum of linear constraints), so golden-section
  // search on the neighbouring cells converges to the optimum.
  double lo = best_k == 0 ? 0.0 : step * static_cast<double>(best_k - 1);
  double hi = std::min(f.length, step * static_cast<double>(best_k + 1));
  double x1 = hi - kGolden * (hi - lo);
  double x2 = lo + kGolden * (hi - lo);
  double f1 = max_size(x1);
  double f2 = max_size(x2);
  for (std::size_t i = 0; i < cfg.refine_iterations; ++i) {
    if (f1 >= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kGolden * (hi - lo);
      f1 = max_size(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kGolden * (hi - lo);
      f2 = max_size(x2);
    }
    if (f1 > best_s) { best_s = f1; best_t = x1; }
    if (f2 > best_s) { best_s = f2; best_t = x2; }
  }

  if (!(best_s > 0.0)) {
    throw std::logic_error("oracle: no ET of positive size fits on a positive-area triangle");
  }

  SideETResult r;
  r.side = side;
  r.mode = infer_mode(tri, side, f, best_t, best_s, cfg.mode_tolerance * f.length);
  r.metrics = et_metrics_from_side(best_s);
  r.ratio = r.metrics->area / tri.area();
  r.vertices = f.et(best_t, best_s);
  r.inscribed = r.mode != PlacementMode::Wedged;
  return r;
}

namespace {

struct GlobalSearch {
  const TriangleSpec& tri;
  Containment inside;
  std::array<Point, 3> corners;

  Point anchor(double u) const {
    u = std::fmod(u, 3.0);
    if (u < 0.0) u += 3.0;
    const auto k = std::min<std::size_t>(static_cast<std::size_t>(u), 2);
    const double frac = u - static_cast<double>(k);
    return corners[k] + frac * (corners[(k + 1) % 3] - corners[k]);
  }

  static std::array<Point, 3> et(Point p, double rotation_deg, double s) {
    const double a = deg_to_rad(rotation_deg);
    const double b = deg_to_rad(rotation_deg + 60.0);
    return {p, p + s * Point{std::cos(a), std::sin(a)}, p + s * Point{std::cos(b), std::sin(b)}};
  }

  double max_size(double u, double rotation_deg) const {
    const Point p = anchor(u);
    return bisect_size(tri.scale(), tri.scale(),
                       [&](double s) { return inside.contains(et(p, rotation_deg, s)); });
  }
};

struct Candidate {
  double u;
  double rotation;
  double size;
};

}  // namespace

GlobalETResult oracle_global_inscribed_et(const TriangleSpec& tri, const OracleConfig& cfg) {
  cfg.validate();
  GlobalSearch search{tri, Containment(tri, cfg.containment_tolerance),
                      {tri.vertex(SideLabel::A), tri.vertex(SideLabel::B), tri.vertex(SideLabel::C)}};

  const std::size_t n_anchor = 3 * cfg.global_grid_points;
  const std::size_t n_rotation = 2 * cfg.global_grid_points;
  const double du = 3.0 / static_cast<double>(n_anchor);
  const double drot = 360.0 / static_cast<double>(n_rotation);

  std::vector<Candidate> coarse;
  coarse.reserve(n_anchor * n_rotation);
  for (std::size_t i = 0; i < n_anchor; ++i) {
    for (std::size_t j = 0; j < n_rotation; ++j) {
      const double u = du * static_cast<double>(i);
      const double rot = drot * static_cast<double>(j);
      coarse.push_back({u, rot, search.max_size(u, rot)});
    }
  }

  constexpr std::size_t kSeeds = 6;
  const std::size_t seeds = std::min(kSeeds, coarse.size());
  std::partial_sort(coarse.begin(), coarse.begin() + static_cast<std::ptrdiff_t>(seeds), coarse.end(),
                    [](const Candidate& l, const Candidate& r) {
                      if (l.size != r.size) return l.size > r.size;
                      return l.u != r.u ? l.u < r.u : l.rotation < r.rotation;
                    });

  Candidate best = coarse.front();
  for (std::size_t k = 0; k < seeds; ++k) {
    Candidate c = coarse[k];
    double span_u = du;
    double span_rot = drot;
    for (std::size_t it = 0; it < cfg.refine_iterations; ++it) {
      Candidate local = c;
      for (int a = -2; a <= 2; ++a) {
        for (int b = -2; b <= 2; ++b) {
          if (a == 0 && b == 0) continue;
          const double u = c.u + 0.5 * a * span_u;
          const double rot = c.rotation + 0.5 * b * span_rot;
          const double s = search.max_size(u, rot);
          if (s > local.size) local = {u, rot, s};
        }
      }
      c = local;
      span_u *= 0.6;
      span_rot *= 0.6;
    }
    if (c.size > best.size) best = c;
  }

  GlobalETResult r;
  r.metrics = et_metrics_from_side(best.size);
  r.ratio = r.metrics.area / tri.area();
  r.anchor = std::fmod(std::fmod(best.u, 3.0) + 3.0, 3.0);
  r.rotation_deg = std::fmod(std::fmod(best.rotation, 360.0) + 360.0, 360.0);
  r.vertices = GlobalSearch::et(search.anchor(best.u), best.rotation, best.size);
  return r;
}

}  // namespace equitri
