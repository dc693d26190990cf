#include "equitri/region_atlas.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "equitri/classifier.hpp"
#include "equitri/errors.hpp"
#include "equitri/parallel.hpp"

namespace equitri {

std::string_view to_string(RegionKind kind) {
  switch (kind) {
    case RegionKind::A: return "A";
    case RegionKind::B: return "B";
    case RegionKind::C1: return "C.1";
    case RegionKind::C2i: return "C.2i";
    case RegionKind::C2ii: return "C.2ii";
    case RegionKind::C3: return "C.3";
    case RegionKind::Boundary: return "boundary";
    case RegionKind::Excluded: return "excluded";
  }
  return "?";
}

std::string RegionLabel::to_string() const {
  std::string out(equitri::to_string(kind));
  if (!detail.empty()) out += " (" + detail + ")";
  return out;
}

std::string_view to_string(CurveId id) {
  switch (id) {
    case CurveId::GreenCubic: return "green-cubic";
    case CurveId::BlueCubic: return "blue-cubic";
    case CurveId::IsoscelesLine: return "isosceles-line";
    case CurveId::UnitCircle: return "unit-circle";
    case CurveId::Alpha120: return "alpha-120";
    case CurveId::Alpha90: return "alpha-90";
    case CurveId::Beta60: return "beta-60";
    case CurveId::Beta80: return "beta-80";
  }
  return "?";
}

namespace {

constexpr double kLengthTolerance = 1e-9;

RegionLabel boundary(std::string_view name) { return {RegionKind::Boundary, std::string(name)}; }

RegionKind region_for(Rule rule) {
  switch (rule) {
    case Rule::Wedged1: return RegionKind::C1;
    case Rule::Wedged2i: return RegionKind::C2i;
    case Rule::Wedged2ii: return RegionKind::C2ii;
    case Rule::Wedged3i:
    case Rule::Wedged3ii: return RegionKind::C3;
    default: return RegionKind::Boundary;
  }
}

void check_theta(double theta_deg) {
  if (!(theta_deg >= 80.0 && theta_deg <= 90.0)) {
    std::ostringstream os;
    os << "polar angle " << theta_deg << " outside [80, 90] degrees";
    throw DomainError(os.str());
  }
}

}  // namespace

RegionLabel classify_apex(double x, double y) {
  if (!(y > 0.0)) throw InvalidInput("apex must satisfy y > 0");
  const TriangleSpec tri = triangle_from_apex(x, y);
  const auto entered = tri.angles().as_entered();
  const double alpha = entered[0];
  const double beta = entered[1];

  if (std::abs(alpha - 80.0) <= kClauseTolerance && std::abs(beta - 80.0) <= kClauseTolerance) {
    return boundary(boundary_names::kCalabi);
  }

  const double a = distance(Point{1.0, 0.0}, Point{x, y});
  const double b = std::hypot(x, y);
  if (a - b <= kLengthTolerance) {
    return {RegionKind::Excluded, "a <= b: apex on or right of the isosceles line x = 1/2"};
  }
  if (b - 1.0 <= kLengthTolerance) {
    return {RegionKind::Excluded, "b <= c: apex on or inside the unit circle about A"};
  }

  if (std::abs(alpha - 120.0) <= kClauseTolerance) return boundary(boundary_names::kAlpha120);
  if (alpha > 120.0) return {RegionKind::A, {}};
  if (std::abs(beta - 60.0) <= kClauseTolerance) return boundary(boundary_names::kBeta60);
  if (beta < 60.0) return {RegionKind::B, {}};

  if (std::abs(alpha - 90.0) <= kClauseTolerance) return boundary(boundary_names::kAlpha90);
  if (std::abs(alpha + beta / 2.0 - 120.0) <= kClauseTolerance) return boundary(boundary_names::kBlue);
  if (std::abs(alpha / 2.0 + beta - 120.0) <= kClauseTolerance) return boundary(boundary_names::kGreen);

  try {
    return {region_for(predict_minmax_wet(tri.angles()).rule), {}};
  } catch (const Unclassified& e) {
    return {RegionKind::Boundary, e.what()};
  }
}

double green_locus_radius(double theta_deg) {
  const double half = deg_to_rad(theta_deg / 2.0);
  return std::sin(deg_to_rad(60.0) + half) / std::sin(deg_to_rad(60.0) - half);
}

double blue_locus_radius(double theta_deg) {
  return std::sin(deg_to_rad(240.0 - 2.0 * theta_deg)) / std::sin(deg_to_rad(theta_deg - 60.0));
}

double green_curve_polar(double theta_deg) {
  check_theta(theta_deg);
  return green_locus_radius(theta_deg);
}

double blue_curve_polar(double theta_deg) {
  check_theta(theta_deg);
  return blue_locus_radius(theta_deg);
}

double eval_green_cubic(double x, double y) {
  return kSqrt3 * x * x * x + x * x * (y - 2.0 * kSqrt3) + kSqrt3 * x * (y * y + 1.0) + y * y * y -
         2.0 * kSqrt3 * y * y - y;
}

double eval_blue_cubic(double x, double y) {
  return kSqrt3 * x * x * x - x * x * (y + kSqrt3) + x * (kSqrt3 * y * y + 2.0 * y) +
         kSqrt3 * y * y - y * y * y;
}

Point calabi_point() { return {0.5, std::tan(deg_to_rad(80.0)) / 2.0}; }

Point RegionRaster::cell_center(std::size_t col, std::size_t row) const {
  const double dx = (window.x1 - window.x0) / static_cast<double>(width);
  const double dy = (window.y1 - window.y0) / static_cast<double>(height);
  return {window.x0 + (static_cast<double>(col) + 0.5) * dx,
          window.y0 + (static_cast<double>(row) + 0.5) * dy};
}

std::map<RegionKind, std::size_t> RegionRaster::counts() const {
  std::map<RegionKind, std::size_t> out;
  for (RegionKind k : kAllRegionKinds) out[k] = 0;
  for (RegionKind k : cells) ++out[k];
  return out;
}

const CurvePolyline* Atlas::find(CurveId id) const {
  for (const auto& c : curves) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

namespace {

CurvePolyline sample_cubic(CurveId id, double (*radius)(double), std::size_t samples) {
  CurvePolyline curve;
  curve.id = id;
  curve.theta_range = std::pair{80.0, 90.0};
  curve.points.reserve(samples);
  for (std::size_t k = 0; k < samples; ++k) {
    const double theta = 80.0 + 10.0 * static_cast<double>(k) / static_cast<double>(samples - 1);
    const double r = radius(theta);
    const double t = deg_to_rad(theta);
    curve.points.push_back({r * std::cos(t), r * std::sin(t)});
  }
  return curve;
}

// Part of the ray origin + t*dir (t >= 0) inside the window (Liang-Barsky).
std::optional<CurvePolyline> clip_ray(CurveId id, Point origin, Point dir, const Window& w) {
  double t0 = 0.0;
  double t1 = std::numeric_limits<double>::infinity();
  const std::array<std::pair<double, double>, 4> planes = {
      std::pair{-dir.x, origin.x - w.x0}, std::pair{dir.x, w.x1 - origin.x},
      std::pair{-dir.y, origin.y - w.y0}, std::pair{dir.y, w.y1 - origin.y}};
  for (auto [p, q] : planes) {
    if (p == 0.0) {
      if (q < 0.0) return std::nullopt;
      continue;
    }
    const double t = q / p;
    if (p < 0.0) {
      t0 = std::max(t0, t);
    } else {
      t1 = std::min(t1, t);
    }
  }
  if (!(t1 > t0)) return std::nullopt;
  return CurvePolyline{id, {origin + t0 * dir, origin + t1 * dir}, std::nullopt};
}

}  // namespace

Atlas build_atlas(std::size_t theta_samples, Window window, std::size_t raster_width,
                  std::size_t raster_height) {
  if (theta_samples < 2) throw InvalidInput("at least two curve samples are required");
  if (window.empty()) throw InvalidInput("atlas window is empty");
  if (raster_width == 0 || raster_height == 0) throw InvalidInput("raster must be non-empty");

  Atlas atlas;
  atlas.window = window;
  atlas.calabi = calabi_point();
  atlas.curves.push_back(sample_cubic(CurveId::GreenCubic, green_curve_polar, theta_samples));
  atlas.curves.push_back(sample_cubic(CurveId::BlueCubic, blue_curve_polar, theta_samples));

  const Point origin{0.0, 0.0};
  const Point base_end{1.0, 0.0};
  auto dir_deg = [](double deg) { return Point{std::cos(deg_to_rad(deg)), std::sin(deg_to_rad(deg))}; };
  const std::array<std::tuple<CurveId, Point, Point>, 5> rays = {{
      {CurveId::IsoscelesLine, Point{0.5, 0.0}, Point{0.0, 1.0}},
      {CurveId::Alpha120, origin, dir_deg(120.0)},
      {CurveId::Alpha90, origin, Point{0.0, 1.0}},
      // beta is measured from BA, which points along -x.
      {CurveId::Beta60, base_end, dir_deg(180.0 - 60.0)},
      {CurveId::Beta80, base_end, dir_deg(180.0 - 80.0)},
  }};
  for (const auto& [id, from, dir] : rays) {
    if (auto seg = clip_ray(id, from, dir, window)) atlas.curves.push_back(std::move(*seg));
  }

  CurvePolyline circle{CurveId::UnitCircle, {}, std::nullopt};
  for (std::size_t k = 0; k < theta_samples; ++k) {
    const double t = 180.0 * static_cast<double>(k) / static_cast<double>(theta_samples - 1);
    const Point p = dir_deg(t);
    if (window.contains(p)) circle.points.push_back(p);
  }
  if (circle.points.size() >= 2) atlas.curves.push_back(std::move(circle));

  RegionRaster& raster = atlas.raster;
  raster.width = raster_width;
  raster.height = raster_height;
  raster.window = window;
  raster.cells.assign(raster_width * raster_height, RegionKind::Excluded);
  parallel_for(raster_height, [&](std::size_t row) {
    for (std::size_t col = 0; col < raster_width; ++col) {
      const Point p = raster.cell_center(col, row);
      if (p.y <= 0.0) continue;
      raster.cells[row * raster_width + col] = classify_apex(p.x, p.y).kind;
    }
  });
  return atlas;
}

}  // namespace equitri
