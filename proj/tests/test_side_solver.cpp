#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "equitri/side_solver.hpp"

namespace equitri {
namespace {

using std::numbers::sqrt3;

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

TriangleSpec worked_example() {
  return triangle_from_angles(AngleTriple::canonical(45, 75, 60), SideLabel::A, 2.0);
}

TEST(SideSolver, WorkedExampleSharedVertex) {
  const TriangleSpec tri = worked_example();
  // Entered third angle (60) sits opposite the short-labelled side c.
  const SideLabel c = tri.from_input(2);
  const SideETResult r = largest_et_on_side(tri, c);
  EXPECT_EQ(r.mode, PlacementMode::SharedVertex);
  const double want = std::sqrt(6.0) * std::sin(deg_to_rad(45)) / std::sin(deg_to_rad(75));
  EXPECT_LT(rel(r.side_length(), want), 1e-12);
  EXPECT_LT(rel(r.side_length(), 1.793150944336107), 1e-12);
  EXPECT_LT(rel(r.area(), 1.392304845413264), 1e-12);
  // The ET keeps vertex B (entered second), the endpoint with the 75 degree angle.
  const Point b = tri.input_vertex(1);
  ASSERT_TRUE(r.vertices.has_value());
  EXPECT_TRUE(distance((*r.vertices)[0], b) < 1e-12 || distance((*r.vertices)[1], b) < 1e-12);
}

TEST(SideSolver, WorkedExampleMax) {
  const TriangleSpec tri = worked_example();
  const SideETResult a = largest_et_on_side(tri, tri.from_input(0));
  EXPECT_LT(rel(a.side_length(), 2.0), 1e-12);
  EXPECT_LT(rel(a.area(), sqrt3), 1e-12);
  // Side b carries the same triangle BCF.
  const SideETResult b = largest_et_on_side(tri, tri.from_input(1));
  EXPECT_LT(rel(b.area(), sqrt3), 1e-12);
}

TEST(SideSolver, NoInscribedWhenBothAnglesExceedSixty) {
  const TriangleSpec tri = triangle_with_circumdiameter(AngleTriple::canonical(70, 65, 45));
  const SideETResult none = largest_et_on_side(tri, SideLabel::C);
  EXPECT_EQ(none.mode, PlacementMode::None);
  EXPECT_FALSE(none.has_et());
  EXPECT_FALSE(none.inscribed);

  const SideETResult wet = largest_et_on_side(tri, SideLabel::C, true);
  EXPECT_EQ(wet.mode, PlacementMode::Wedged);
  EXPECT_FALSE(wet.inscribed);
  EXPECT_LT(rel(wet.side_length(), std::sin(deg_to_rad(45))), 1e-12);
  EXPECT_NEAR(*wet.ratio, 0.71904, 1e-5);
}

TEST(SideSolver, Equilateral) {
  const TriangleSpec tri = triangle_from_angles(AngleTriple::canonical(60, 60, 60));
  for (SideLabel s : kAllSides) {
    const SideETResult r = largest_et_on_side(tri, s);
    EXPECT_EQ(r.mode, PlacementMode::WholeTriangle);
    EXPECT_LT(rel(r.side_length(), 1.0), 1e-12);
    EXPECT_LT(rel(*r.ratio, 1.0), 1e-12);
  }
}

TEST(SideSolver, ApexAtOppositeVertex) {
  // Side a of 110-40-30 has adjacent angles 40 and 30.
  const TriangleSpec tri = triangle_from_angles(AngleTriple::canonical(110, 40, 30));
  const SideETResult r = largest_et_on_side(tri, SideLabel::A);
  EXPECT_EQ(r.mode, PlacementMode::ApexAtOppositeVertex);
  const double h = 2 * tri.area() / tri.side(SideLabel::A);
  EXPECT_LT(rel(r.side_length(), 2 * h / sqrt3), 1e-12);
  EXPECT_LT(distance((*r.vertices)[2], tri.vertex(SideLabel::A)), 1e-12);
}

TEST(SideSolver, ThirtySixtyNinety) {
  const TriangleETReport rep = analyze_triangle(triangle_from_angles(AngleTriple::canonical(90, 60, 30)));
  EXPECT_EQ(rep.max_sides, (SideSet{SideLabel::A, SideLabel::C}));
  EXPECT_EQ(rep.min_sides, SideSet{SideLabel::B});
  EXPECT_LT(rel(*rep.at(SideLabel::B).ratio, 0.375), 1e-12);
  EXPECT_LT(rel(*rep.at(SideLabel::A).ratio, 0.5), 1e-12);
  EXPECT_LT(rel(*rep.at(SideLabel::C).ratio, 0.5), 1e-12);
}

TEST(SideSolver, AlphaOneTwentyMinTie) {
  const TriangleETReport rep = analyze_triangle(triangle_from_angles(AngleTriple::canonical(120, 35, 25)));
  EXPECT_LT(rel(rep.at(SideLabel::B).area(), rep.at(SideLabel::C).area()), 1e-12);
  EXPECT_EQ(rep.min_sides, (SideSet{SideLabel::B, SideLabel::C}));
}

TEST(SideSolver, OneThirtyMinOnShortSide) {
  const TriangleETReport rep = analyze_triangle(triangle_from_angles(AngleTriple::canonical(130, 30, 20)));
  EXPECT_EQ(rep.max_sides, SideSet{SideLabel::A});
  EXPECT_EQ(rep.min_sides, SideSet{SideLabel::C});
  EXPECT_NEAR(*rep.at(SideLabel::A).ratio, 0.258, 0.01);
  EXPECT_NEAR(*rep.at(SideLabel::C).ratio, 0.193, 0.01);
}

TEST(SideSolver, CalabiTriangleCongruentWets) {
  const TriangleSpec tri = triangle_from_angles(AngleTriple::canonical(80, 80, 20));
  const TriangleETReport rep = analyze_triangle(tri, true);
  EXPECT_TRUE(rep.all_tied());
  const double c = tri.side(SideLabel::C);
  for (SideLabel s : kAllSides) EXPECT_LT(rel(rep.at(s).side_length(), c), 1e-12);
}

TEST(SideSolver, SixtyBoundaryIsContinuous) {
  // At an adjacent angle of exactly 60 the shared-vertex ET spans the whole side.
  const TriangleSpec tri = triangle_from_angles(AngleTriple::canonical(75, 60, 45));
  const SideETResult a = largest_et_on_side(tri, SideLabel::A);
  EXPECT_EQ(a.mode, PlacementMode::SharedVertex);
  EXPECT_LT(rel(a.side_length(), tri.side(SideLabel::C)), 1e-12);
  const SideETResult c = largest_et_on_side(tri, SideLabel::C);
  EXPECT_LT(rel(c.side_length(), tri.side(SideLabel::C)), 1e-12);

  const AngleTriple below = AngleTriple::canonical(75, 60 - 1e-7, 45 + 1e-7);
  const AngleTriple above = AngleTriple::canonical(75 - 1e-7, 60 + 1e-7, 45);
  const double lo = largest_et_on_side(triangle_from_angles(below), SideLabel::A).side_length();
  const double hi = largest_et_on_side(triangle_from_angles(above), SideLabel::A).side_length();
  EXPECT_LT(rel(lo, a.side_length()), 1e-6);
  EXPECT_LT(rel(hi, a.side_length()), 1e-6);
}

TEST(SideSolver, ModeNames) {
  for (PlacementMode m : {PlacementMode::ApexAtOppositeVertex, PlacementMode::SharedVertex,
                          PlacementMode::Wedged, PlacementMode::WholeTriangle, PlacementMode::None}) {
    EXPECT_EQ(parse_placement_mode(to_string(m)), m);
  }
  EXPECT_EQ(to_string(PlacementMode::ApexAtOppositeVertex), "apex_at_opposite_vertex");
  EXPECT_FALSE(parse_placement_mode("sideways").has_value());
}

}  // namespace
}  // namespace equitri
