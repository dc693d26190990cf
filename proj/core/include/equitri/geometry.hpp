#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>

namespace equitri {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point operator+(Point p, Point q) { return {p.x + q.x, p.y + q.y}; }
  friend constexpr Point operator-(Point p, Point q) { return {p.x - q.x, p.y - q.y}; }
  friend constexpr Point operator*(double k, Point p) { return {k * p.x, k * p.y}; }
  friend constexpr Point operator*(Point p, double k) { return {k * p.x, k * p.y}; }
  friend constexpr bool operator==(Point, Point) = default;
};

constexpr double dot(Point p, Point q) { return p.x * q.x + p.y * q.y; }
constexpr double cross(Point p, Point q) { return p.x * q.y - p.y * q.x; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double distance(Point p, Point q) { return norm(p - q); }

constexpr double deg_to_rad(double deg) { return deg * (std::numbers::pi / 180.0); }
constexpr double rad_to_deg(double rad) { return rad * (180.0 / std::numbers::pi); }

inline constexpr double kSqrt3 = std::numbers::sqrt3;

// Absolute tolerance, in degrees, for angle-sum validation and for the exact
// equality cases (60, 120, ...) that the angle rules distinguish.
inline constexpr double kAngleTolerance = 1e-9;

// Sides are named after the opposite vertex: a = BC, b = CA, c = AB.  Under the
// canonical ordering a is the long side and c the short one.
enum class SideLabel : std::uint8_t { A = 0, B = 1, C = 2 };

inline constexpr std::array<SideLabel, 3> kAllSides = {SideLabel::A, SideLabel::B, SideLabel::C};

constexpr std::size_t index_of(SideLabel side) { return static_cast<std::size_t>(side); }
constexpr char side_char(SideLabel side) { return static_cast<char>('a' + index_of(side)); }
std::optional<SideLabel> parse_side(std::string_view text);

// Small value set of side labels.  Iterates in a, b, c order.
class SideSet {
 public:
  constexpr SideSet() = default;
  constexpr SideSet(std::initializer_list<SideLabel> sides) {
    for (SideLabel s : sides) insert(s);
  }
  static constexpr SideSet all() { return {SideLabel::A, SideLabel::B, SideLabel::C}; }

  constexpr void insert(SideLabel s) { bits_ |= static_cast<std::uint8_t>(1u << index_of(s)); }
  constexpr bool contains(SideLabel s) const { return (bits_ >> index_of(s)) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>((bits_ & 1u) + ((bits_ >> 1) & 1u) + ((bits_ >> 2) & 1u));
  }
  constexpr bool disjoint(SideSet other) const { return (bits_ & other.bits_) == 0; }
  constexpr std::uint8_t bits() const { return bits_; }

  // "a|c"; "-" when empty.
  std::string to_string() const;
  static std::optional<SideSet> parse(std::string_view text);

  friend constexpr bool operator==(SideSet, SideSet) = default;

 private:
  std::uint8_t bits_ = 0;
};

// Interior angles in degrees, held in canonical order alpha >= beta >= gamma.
// The order the angles were entered in is remembered so callers can map their
// own labels onto canonical ones.
class AngleTriple {
 public:
  // Validates (each angle in (0, 180), sum 180 within kAngleTolerance) and
  // sorts descending.  Ties keep their input order.
  static AngleTriple canonical(double first, double second, double third);

  double alpha() const { return deg_[0]; }
  double beta() const { return deg_[1]; }
  double gamma() const { return deg_[2]; }
  // Angle at the vertex opposite `side`.
  double at(SideLabel side) const { return deg_[index_of(side)]; }

  // Canonical label of the angle (and of its opposite side) entered at `position`.
  SideLabel from_input(std::size_t position) const;
  std::array<double, 3> as_entered() const;

  bool is_equilateral(double tol = kAngleTolerance) const;
  bool is_isosceles(double tol = kAngleTolerance) const;

 private:
  AngleTriple() = default;

  std::array<double, 3> deg_{};
  std::array<SideLabel, 3> input_to_canonical_{};
};

struct ETMetrics {
  double side = 0.0;
  double height = 0.0;
  double area = 0.0;
};

// h = s*sqrt3/2, area = s^2*sqrt3/4.  Throws InvalidInput unless s > 0.
ETMetrics et_metrics_from_side(double side);
// s = 2h*sqrt3/3, area = h^2*sqrt3/3.  Throws InvalidInput unless h > 0.
ETMetrics et_metrics_from_height(double height);

// An immutable planar triangle labeled canonically: vertex A carries alpha,
// side a = BC is opposite it, and a >= b >= c.
class TriangleSpec {
 public:
  const AngleTriple& angles() const { return angles_; }
  double side(SideLabel s) const { return sides_[index_of(s)]; }
  // Vertex opposite the side with the same label.
  Point vertex(SideLabel s) const { return vertices_[index_of(s)]; }
  // Endpoints of a side in cyclic order: a -> (B, C), b -> (C, A), c -> (A, B).
  std::array<Point, 2> side_endpoints(SideLabel s) const;
  // Labels of the vertices at the ends of a side, in the same order.
  static std::array<SideLabel, 2> side_endpoint_labels(SideLabel s);

  double area() const;
  // Longest side; the length unit for all relative tolerances.
  double scale() const { return sides_[0]; }

  SideLabel from_input(std::size_t position) const { return angles_.from_input(position); }
  Point input_vertex(std::size_t position) const { return vertex(from_input(position)); }

  // Uniform scaling about the origin.
  TriangleSpec scaled(double factor) const;

 private:
  friend TriangleSpec triangle_from_angles(const AngleTriple&, SideLabel, double);
  friend TriangleSpec triangle_with_circumdiameter(const AngleTriple&, double);
  friend TriangleSpec triangle_from_apex(double, double);

  TriangleSpec(AngleTriple angles, std::array<Point, 3> vertices, std::array<double, 3> sides)
      : angles_(angles), vertices_(vertices), sides_(sides) {}

  AngleTriple angles_;
  std::array<Point, 3> vertices_;
  std::array<double, 3> sides_;
};

// Law of Sines construction.  `scale_side` names a side in the order the
// angles were entered (the side opposite the first, second or third angle),
// which is then given length `scale`.  Canonical placement: A = (0, 0),
// B = (c, 0), C in the upper half-plane.
TriangleSpec triangle_from_angles(const AngleTriple& angles, SideLabel scale_side = SideLabel::A,
                                  double scale = 1.0);

// Sides equal diameter * sin(opposite angle).
TriangleSpec triangle_with_circumdiameter(const AngleTriple& angles, double diameter = 1.0);

// A = (0, 0), B = (1, 0), C = (x, y) with y > 0; angles measured from the
// coordinates.  The given points are kept as-is and relabeled canonically,
// so input_vertex(2) == (x, y).
TriangleSpec triangle_from_apex(double x, double y);

// Interior angle at `vertex` between rays to p and q, in degrees.
double angle_at(Point vertex, Point p, Point q);

}  // namespace equitri
