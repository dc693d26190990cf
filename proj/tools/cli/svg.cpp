#include "cli/svg.hpp"

#include <algorithm>
#include <array>
#include <ostream>
#include <string>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "cli/input.hpp"

namespace equitri::cli {

namespace {

constexpr std::array<std::string_view, 3> kSideColors = {"#d7301f", "#2b8cbe", "#31a354"};

std::string path_data(const std::vector<Point>& pts) {
  std::string d;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    d += fmt::format("{}{} {}", i == 0 ? "M" : " L", pts[i].x, pts[i].y);
  }
  return d;
}

std::string_view curve_color(CurveId id) {
  switch (id) {
    case CurveId::GreenCubic: return "#1a9641";
    case CurveId::BlueCubic: return "#2166ac";
    case CurveId::IsoscelesLine: return "#d7191c";
    case CurveId::UnitCircle: return "#1a9641";
    default: return "#555555";
  }
}

bool dashed(CurveId id) {
  return id != CurveId::GreenCubic && id != CurveId::BlueCubic;
}

}  // namespace

std::string_view region_color(RegionKind kind) {
  switch (kind) {
    case RegionKind::A: return "#f4a582";
    case RegionKind::B: return "#92c5de";
    case RegionKind::C1: return "#b2df8a";
    case RegionKind::C2i: return "#fdbf6f";
    case RegionKind::C2ii: return "#cab2d6";
    case RegionKind::C3: return "#ffff99";
    case RegionKind::Boundary: return "#333333";
    case RegionKind::Excluded: return "#ffffff";
  }
  return "#000000";
}

void write_triangle_svg(std::ostream& out, const TriangleSpec& tri, const TriangleETReport& report) {
  std::array<Point, 3> v = {tri.vertex(SideLabel::A), tri.vertex(SideLabel::B), tri.vertex(SideLabel::C)};
  double x0 = v[0].x, x1 = v[0].x, y0 = v[0].y, y1 = v[0].y;
  for (const auto& p : v) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  const double size = 480.0;
  const double margin = 30.0;
  const double k = (size - 2.0 * margin) / std::max(x1 - x0, y1 - y0);
  const double width = (x1 - x0) * k + 2.0 * margin;
  const double height = (y1 - y0) * k + 2.0 * margin;
  auto px = [&](Point p) { return Point{margin + (p.x - x0) * k, margin + (y1 - p.y) * k}; };
  auto polygon = [&](const std::array<Point, 3>& pts) {
    std::string s;
    for (const auto& p : pts) {
      const Point q = px(p);
      s += fmt::format("{}{:.4f},{:.4f}", s.empty() ? "" : " ", q.x, q.y);
    }
    return s;
  };

  fmt::print(out, "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
  fmt::print(out,
             "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{:.0f}\" "
             "height=\"{:.0f}\" viewBox=\"0 0 {:.4f} {:.4f}\">\n",
             width, height, width, height);
  fmt::print(out, "<polygon id=\"triangle\" points=\"{}\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n",
             polygon(v));
  for (const auto& r : report.sides) {
    if (!r.vertices) continue;
    fmt::print(out,
               "<polygon id=\"et-{}\" class=\"{}\" points=\"{}\" fill=\"{}\" fill-opacity=\"0.25\" "
               "stroke=\"{}\" stroke-width=\"1\"/>\n",
               side_char(r.side), to_string(r.mode), polygon(*r.vertices), kSideColors[index_of(r.side)],
               kSideColors[index_of(r.side)]);
  }
  constexpr std::array<const char*, 3> names = {"A", "B", "C"};
  for (std::size_t i = 0; i < 3; ++i) {
    const Point q = px(v[i]);
    fmt::print(out, "<text x=\"{:.4f}\" y=\"{:.4f}\" font-size=\"14\" font-family=\"sans-serif\">{}</text>\n",
               q.x + 4.0, q.y - 4.0, names[i]);
  }
  fmt::print(out, "</svg>\n");
}

void write_atlas_svg(std::ostream& out, const Atlas& atlas) {
  const Window& w = atlas.window;
  const double k = 150.0;
  const double width = (w.x1 - w.x0) * k;
  const double height = (w.y1 - w.y0) * k;
  const RegionRaster& raster = atlas.raster;
  const double dx = (w.x1 - w.x0) / static_cast<double>(raster.width);
  const double dy = (w.y1 - w.y0) / static_cast<double>(raster.height);

  fmt::print(out, "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
  fmt::print(out,
             "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{:.0f}\" "
             "height=\"{:.0f}\" viewBox=\"0 0 {} {}\">\n",
             width, height, width, height);
  fmt::print(out, "<g id=\"atlas\" transform=\"translate({} {}) scale({} {})\">\n", -w.x0 * k, w.y1 * k, k, -k);

  fmt::print(out, "<g id=\"raster\" shape-rendering=\"crispEdges\">\n");
  for (std::size_t row = 0; row < raster.height; ++row) {
    std::size_t col = 0;
    while (col < raster.width) {
      const RegionKind kind = raster.at(col, row);
      std::size_t run = 1;
      while (col + run < raster.width && raster.at(col + run, row) == kind) ++run;
      if (kind != RegionKind::Excluded) {
        fmt::print(out, "<rect class=\"{}\" x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{}\"/>\n",
                   to_string(kind), w.x0 + static_cast<double>(col) * dx,
                   w.y0 + static_cast<double>(row) * dy, static_cast<double>(run) * dx, dy,
                   region_color(kind));
      }
      col += run;
    }
  }
  fmt::print(out, "</g>\n");

  fmt::print(out, "<g id=\"curves\" fill=\"none\">\n");
  for (const auto& c : atlas.curves) {
    fmt::print(out, "<path id=\"{}\" d=\"{}\" stroke=\"{}\" stroke-width=\"{}\"{} vector-effect=\"non-scaling-stroke\"/>\n",
               to_string(c.id), path_data(c.points), curve_color(c.id), dashed(c.id) ? 1 : 2,
               dashed(c.id) ? " stroke-dasharray=\"6 4\"" : "");
  }
  fmt::print(out, "</g>\n");
  fmt::print(out, "<circle id=\"calabi-point\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"#000000\"/>\n",
             atlas.calabi.x, atlas.calabi.y, 4.0 / k);
  fmt::print(out, "</g>\n");
  // Labels live outside the flipped group so the text is upright.
  fmt::print(out, "<text id=\"calabi-label\" x=\"{:.4f}\" y=\"{:.4f}\" font-size=\"16\" font-family=\"sans-serif\">I</text>\n",
             (atlas.calabi.x - w.x0) * k + 6.0, (w.y1 - atlas.calabi.y) * k - 6.0);
  fmt::print(out, "</svg>\n");
}

std::vector<Point> read_svg_path(std::string_view svg, std::string_view id) {
  const std::string key = fmt::format("<path id=\"{}\" d=\"", id);
  const auto start = svg.find(key);
  if (start == std::string_view::npos) return {};
  const auto from = start + key.size();
  const auto end = svg.find('"', from);
  std::string_view d = svg.substr(from, end - from);

  std::vector<Point> pts;
  std::vector<double> numbers;
  for (auto token : split_fields(d, ' ')) {
    if (token.empty()) continue;
    if (token.front() == 'M' || token.front() == 'L') token.remove_prefix(1);
    if (token.empty()) continue;
    auto v = parse_double(token);
    if (!v) return {};
    numbers.push_back(*v);
  }
  for (std::size_t i = 0; i + 1 < numbers.size(); i += 2) pts.push_back({numbers[i], numbers[i + 1]});
  return pts;
}

}  // namespace equitri::cli
