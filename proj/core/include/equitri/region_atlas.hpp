#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "equitri/geometry.hpp"

namespace equitri {

// Apex positions C over the unit base A = (0, 0), B = (1, 0).
enum class RegionKind { A, B, C1, C2i, C2ii, C3, Boundary, Excluded };

inline constexpr std::array<RegionKind, 8> kAllRegionKinds = {
    RegionKind::A,  RegionKind::B,  RegionKind::C1,       RegionKind::C2i,
    RegionKind::C2ii, RegionKind::C3, RegionKind::Boundary, RegionKind::Excluded};

std::string_view to_string(RegionKind kind);

struct RegionLabel {
  RegionKind kind = RegionKind::Excluded;
  // Boundary name or exclusion reason; empty for proper regions.
  std::string detail;

  std::string to_string() const;
};

namespace boundary_names {
inline constexpr std::string_view kCalabi = "Calabi point I / isosceles line";
inline constexpr std::string_view kAlpha120 = "alpha = 120 (A/B)";
inline constexpr std::string_view kBeta60 = "beta = 60 (B/C)";
inline constexpr std::string_view kAlpha90 = "alpha = 90 (C.1,C.2/C.3)";
inline constexpr std::string_view kBlue = "blue cubic: alpha + beta/2 = 120";
inline constexpr std::string_view kGreen = "green cubic: alpha/2 + beta = 120";
}  // namespace boundary_names

// Region of the triangle with apex (x, y).  Throws InvalidInput unless y > 0.
// Points within 1e-9 degrees of a region boundary get RegionKind::Boundary;
// apexes violating a > b > c by more than 1e-9 are Excluded.
RegionLabel classify_apex(double x, double y);

// Locus alpha/2 + beta = 120 in polar form about A; theta in [80, 90] degrees.
double green_curve_polar(double theta_deg);
// Locus alpha + beta/2 = 120 in polar form about A; theta in [80, 90] degrees.
double blue_curve_polar(double theta_deg);
// The same loci without the atlas domain restriction (any theta where the
// radius is positive: (0, 120) for green, (60, 120) for blue).
double green_locus_radius(double theta_deg);
double blue_locus_radius(double theta_deg);

// Cubic residuals; zero on the corresponding locus.
double eval_green_cubic(double x, double y);
double eval_blue_cubic(double x, double y);

// Apex of the 80-80-20 triangle over the unit base, (1/2, tan(80°)/2).
Point calabi_point();

enum class CurveId { GreenCubic, BlueCubic, IsoscelesLine, UnitCircle, Alpha120, Alpha90, Beta60, Beta80 };

std::string_view to_string(CurveId id);

struct CurvePolyline {
  CurveId id = CurveId::GreenCubic;
  std::vector<Point> points;
  // Polar angle range for the cubics.
  std::optional<std::pair<double, double>> theta_range;
};

struct Window {
  double x0 = -1.5;
  double y0 = 0.0;
  double x1 = 1.5;
  double y1 = 4.0;

  bool empty() const { return !(x1 > x0) || !(y1 > y0); }
  bool contains(Point p) const { return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1; }
};

// Region of each cell centre; row 0 is the bottom of the window.
struct RegionRaster {
  std::size_t width = 0;
  std::size_t height = 0;
  Window window;
  std::vector<RegionKind> cells;

  RegionKind at(std::size_t col, std::size_t row) const { return cells[row * width + col]; }
  Point cell_center(std::size_t col, std::size_t row) const;
  std::map<RegionKind, std::size_t> counts() const;
};

struct Atlas {
  Window window;
  std::vector<CurvePolyline> curves;
  RegionRaster raster;
  Point calabi;

  const CurvePolyline* find(CurveId id) const;
};

inline constexpr std::size_t kDefaultCurveSamples = 256;

// Both cubics sampled uniformly in theta over [80, 90], the isosceles line
// x = 1/2, the unit circle about A, and the alpha = 120, alpha = 90,
// beta = 60, beta = 80 loci clipped to the window, plus a classification
// raster.  Throws InvalidInput for fewer than two samples, an empty window
// or an empty raster.
Atlas build_atlas(std::size_t theta_samples = kDefaultCurveSamples, Window window = {},
                  std::size_t raster_width = 240, std::size_t raster_height = 320);

}  // namespace equitri
