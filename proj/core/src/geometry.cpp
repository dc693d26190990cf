#include "equitri/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "equitri/errors.hpp"

namespace equitri {

namespace {

std::string describe_angles(double a, double b, double c) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << a << ", " << b << ", " << c << ")";
  return os.str();
}

}  // namespace

std::optional<SideLabel> parse_side(std::string_view text) {
  if (text.size() != 1) return std::nullopt;
  switch (text[0]) {
    case 'a': case 'A': return SideLabel::A;
    case 'b': case 'B': return SideLabel::B;
    case 'c': case 'C': return SideLabel::C;
    default: return std::nullopt;
  }
}

std::string SideSet::to_string() const {
  if (empty()) return "-";
  std::string out;
  for (SideLabel s : kAllSides) {
    if (!contains(s)) continue;
    if (!out.empty()) out += '|';
    out += side_char(s);
  }
  return out;
}

std::optional<SideSet> SideSet::parse(std::string_view text) {
  SideSet set;
  if (text == "-") return set;
  while (!text.empty()) {
    auto bar = text.find('|');
    auto label = parse_side(text.substr(0, bar));
    if (!label) return std::nullopt;
    set.insert(*label);
    if (bar == std::string_view::npos) break;
    text.remove_prefix(bar + 1);
  }
  return set;
}

AngleTriple AngleTriple::canonical(double first, double second, double third) {
  const std::array<double, 3> in = {first, second, third};
  for (double v : in) {
    if (!std::isfinite(v)) {
      throw InvalidInput("angles must be finite: " + describe_angles(first, second, third));
    }
  }
  for (double v : in) {
    if (v <= 0.0 || v >= 180.0) {
      throw DegenerateTriangle("each angle must lie strictly between 0 and 180 degrees: " +
                               describe_angles(first, second, third));
    }
  }
  if (std::abs(first + second + third - 180.0) > kAngleTolerance) {
    throw InvalidInput("angles must sum to 180 degrees: " + describe_angles(first, second, third));
  }

  std::array<std::size_t, 3> order = {0, 1, 2};
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return in[i] > in[j]; });

  AngleTriple t;
  for (std::size_t k = 0; k < 3; ++k) {
    t.deg_[k] = in[order[k]];
    t.input_to_canonical_[order[k]] = static_cast<SideLabel>(k);
  }
  return t;
}

SideLabel AngleTriple::from_input(std::size_t position) const {
  if (position > 2) throw InvalidInput("input position must be 0, 1 or 2");
  return input_to_canonical_[position];
}

std::array<double, 3> AngleTriple::as_entered() const {
  return {at(input_to_canonical_[0]), at(input_to_canonical_[1]), at(input_to_canonical_[2])};
}

bool AngleTriple::is_equilateral(double tol) const {
  return std::abs(deg_[0] - 60.0) <= tol && std::abs(deg_[1] - 60.0) <= tol &&
         std::abs(deg_[2] - 60.0) <= tol;
}

bool AngleTriple::is_isosceles(double tol) const {
  return deg_[0] - deg_[1] <= tol || deg_[1] - deg_[2] <= tol;
}

ETMetrics et_metrics_from_side(double side) {
  if (!(side > 0.0) || !std::isfinite(side)) {
    throw InvalidInput("equilateral side length must be positive");
  }
  return {side, side * kSqrt3 / 2.0, side * side * kSqrt3 / 4.0};
}

ETMetrics et_metrics_from_height(double height) {
  if (!(height > 0.0) || !std::isfinite(height)) {
    throw InvalidInput("equilateral height must be positive");
  }
  return {2.0 * height * kSqrt3 / 3.0, height, height * height * kSqrt3 / 3.0};
}

std::array<SideLabel, 2> TriangleSpec::side_endpoint_labels(SideLabel s) {
  switch (s) {
    case SideLabel::A: return {SideLabel::B, SideLabel::C};
    case SideLabel::B: return {SideLabel::C, SideLabel::A};
    case SideLabel::C: return {SideLabel::A, SideLabel::B};
  }
  throw InvalidInput("unknown side label");
}

std::array<Point, 2> TriangleSpec::side_endpoints(SideLabel s) const {
  const auto ends = side_endpoint_labels(s);
  return {vertex(ends[0]), vertex(ends[1])};
}

double TriangleSpec::area() const {
  const Point a = vertices_[0];
  return 0.5 * std::abs(cross(vertices_[1] - a, vertices_[2] - a));
}

TriangleSpec TriangleSpec::scaled(double factor) const {
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw InvalidInput("scale factor must be positive");
  }
  std::array<Point, 3> v = vertices_;
  std::array<double, 3> s = sides_;
  for (auto& p : v) p = factor * p;
  for (auto& len : s) len *= factor;
  return TriangleSpec(angles_, v, s);
}

namespace {

// Canonical placement from side lengths: A = (0, 0), B = (c, 0), C = b(cos alpha, sin alpha).
std::array<Point, 3> place_canonical(const AngleTriple& angles, const std::array<double, 3>& sides) {
  const double alpha = deg_to_rad(angles.alpha());
  const double b = sides[1];
  const double c = sides[2];
  return {Point{0.0, 0.0}, Point{c, 0.0}, Point{b * std::cos(alpha), b * std::sin(alpha)}};
}

}  // namespace

TriangleSpec triangle_from_angles(const AngleTriple& angles, SideLabel scale_side, double scale) {
  if (!(scale > 0.0) || !std::isfinite(scale)) throw InvalidInput("scale must be positive");
  if (index_of(scale_side) > 2) throw InvalidInput("unknown side label");

  std::array<double, 3> sines{};
  for (SideLabel s : kAllSides) sines[index_of(s)] = std::sin(deg_to_rad(angles.at(s)));
  const double unit = scale / sines[index_of(angles.from_input(index_of(scale_side)))];

  std::array<double, 3> sides{};
  for (std::size_t k = 0; k < 3; ++k) sides[k] = unit * sines[k];
  return TriangleSpec(angles, place_canonical(angles, sides), sides);
}

TriangleSpec triangle_with_circumdiameter(const AngleTriple& angles, double diameter) {
  if (!(diameter > 0.0) || !std::isfinite(diameter)) {
    throw InvalidInput("circumdiameter must be positive");
  }
  std::array<double, 3> sides{};
  for (SideLabel s : kAllSides) sides[index_of(s)] = diameter * std::sin(deg_to_rad(angles.at(s)));
  return TriangleSpec(angles, place_canonical(angles, sides), sides);
}

double angle_at(Point vertex, Point p, Point q) {
  const Point u = p - vertex;
  const Point v = q - vertex;
  return rad_to_deg(std::atan2(std::abs(cross(u, v)), dot(u, v)));
}

TriangleSpec triangle_from_apex(double x, double y) {
  if (!std::isfinite(x) || !std::isfinite(y)) throw InvalidInput("apex coordinates must be finite");
  if (!(y > 0.0)) throw DegenerateTriangle("apex must lie strictly above the base line (y > 0)");

  const std::array<Point, 3> in = {Point{0.0, 0.0}, Point{1.0, 0.0}, Point{x, y}};
  const double at_a = angle_at(in[0], in[1], in[2]);
  const double at_b = angle_at(in[1], in[2], in[0]);
  const double at_c = angle_at(in[2], in[0], in[1]);
  const AngleTriple angles = AngleTriple::canonical(at_a, at_b, at_c);

  std::array<Point, 3> vertices{};
  for (std::size_t k = 0; k < 3; ++k) vertices[index_of(angles.from_input(k))] = in[k];
  std::array<double, 3> sides{};
  sides[0] = distance(vertices[1], vertices[2]);
  sides[1] = distance(vertices[2], vertices[0]);
  sides[2] = distance(vertices[0], vertices[1]);
  return TriangleSpec(angles, vertices, sides);
}

}  // namespace equitri
