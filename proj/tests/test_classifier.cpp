#include <gtest/gtest.h>

#include "equitri/classifier.hpp"

namespace equitri {
namespace {

const SideSet kA{SideLabel::A};
const SideSet kB{SideLabel::B};
const SideSet kC{SideLabel::C};
const SideSet kAC{SideLabel::A, SideLabel::C};
const SideSet kBC{SideLabel::B, SideLabel::C};

MinMaxPrediction inscribed(double a, double b, double c) {
  return predict_minmax_inscribed(AngleTriple::canonical(a, b, c));
}

MinMaxPrediction wedged(double a, double b, double c) {
  return predict_minmax_wet(AngleTriple::canonical(a, b, c));
}

TEST(InscribedRules, Examples) {
  auto p = inscribed(130, 30, 20);
  EXPECT_EQ(p.rule, Rule::InscribedA);
  EXPECT_EQ(p.max_sides, kA);
  EXPECT_EQ(p.min_sides, kC);

  p = inscribed(75, 60, 45);
  EXPECT_EQ(p.rule, Rule::InscribedC);
  EXPECT_EQ(p.max_sides, kAC);
  EXPECT_EQ(p.min_sides, kB);
  EXPECT_TRUE(p.absent_sides.empty());

  p = inscribed(110, 40, 30);
  EXPECT_EQ(p.rule, Rule::InscribedB);
  EXPECT_EQ(p.max_sides, kA);
  EXPECT_EQ(p.min_sides, kB);

  p = inscribed(70, 65, 45);
  EXPECT_EQ(p.rule, Rule::InscribedC);
  EXPECT_EQ(p.max_sides, kA);
  EXPECT_EQ(p.min_sides, kB);
  EXPECT_EQ(p.absent_sides, kC);
}

TEST(InscribedRules, AlphaOneTwentyTie) {
  const auto p = inscribed(120, 35, 25);
  EXPECT_EQ(p.rule, Rule::InscribedA);
  EXPECT_EQ(p.min_sides, kBC);
}

TEST(InscribedRules, Equilateral) {
  const auto p = inscribed(60, 60, 60);
  EXPECT_EQ(p.rule, Rule::AllCoincide);
  EXPECT_EQ(p.max_sides, SideSet::all());
  EXPECT_EQ(p.min_sides, SideSet::all());
}

TEST(InscribedRules, IsoscelesIsUnclassified) {
  EXPECT_THROW(inscribed(70, 70, 40), Unclassified);
  try {
    inscribed(100, 40, 40);
    FAIL();
  } catch (const Unclassified& e) {
    EXPECT_EQ(e.angles().alpha(), 100);
  }
}

TEST(WedgedRules, Examples) {
  auto p = wedged(70, 65, 45);
  EXPECT_EQ(p.rule, Rule::Wedged1);
  EXPECT_EQ(p.max_sides, kC);
  EXPECT_EQ(p.min_sides, kB);

  p = wedged(85, 70, 25);
  EXPECT_EQ(p.rule, Rule::Wedged2i);
  EXPECT_EQ(p.max_sides, kAC);
  EXPECT_EQ(p.min_sides, kB);

  p = wedged(100, 75, 5);
  EXPECT_EQ(p.rule, Rule::Wedged3ii);
  EXPECT_EQ(p.max_sides, kA);
  EXPECT_EQ(p.min_sides, kC);

  p = wedged(80, 80, 20);
  EXPECT_EQ(p.rule, Rule::CalabiCongruent);
  EXPECT_EQ(p.max_sides, SideSet::all());
  EXPECT_EQ(rule_id(p.rule), "6");
}

TEST(WedgedRules, FallsBackToInscribedBelowSixty) {
  EXPECT_EQ(wedged(110, 40, 30).rule, Rule::InscribedB);
  EXPECT_EQ(wedged(130, 30, 20).rule, Rule::InscribedA);
  // beta = 60: side c has no wedged ET and ties with a.
  const auto p = wedged(75, 60, 45);
  EXPECT_EQ(p.rule, Rule::InscribedC);
  EXPECT_EQ(p.max_sides, kAC);
}

TEST(WedgedRules, RightAngleGapIsUnclassified) {
  EXPECT_THROW(wedged(90, 70, 20), Unclassified);
  EXPECT_THROW(wedged(70, 70, 40), Unclassified);
}

TEST(ClauseBoundary, Distance) {
  EXPECT_NEAR(clause_boundary_distance(AngleTriple::canonical(85, 70, 25)), 0.0, 1e-12);
  EXPECT_NEAR(clause_boundary_distance(AngleTriple::canonical(75, 60, 45)), 0.0, 1e-12);
  EXPECT_GT(clause_boundary_distance(AngleTriple::canonical(110, 40, 30)), 1.0);
}

TEST(VerifyPrediction, Examples) {
  auto rep = verify_prediction(triangle_from_angles(AngleTriple::canonical(90, 50, 40)), false);
  EXPECT_EQ(rep.status, Agreement::Agree);
  EXPECT_EQ(rep.computed_max, kA);
  EXPECT_EQ(rep.computed_min, kB);

  rep = verify_prediction(triangle_from_angles(AngleTriple::canonical(60, 60, 60)), false);
  EXPECT_EQ(rep.status, Agreement::Agree);
  EXPECT_EQ(rep.prediction->rule, Rule::AllCoincide);

  rep = verify_prediction(triangle_from_angles(AngleTriple::canonical(70, 70, 40)), false);
  EXPECT_EQ(rep.status, Agreement::SolverOnly);
  EXPECT_FALSE(rep.note.empty());
  EXPECT_TRUE(rep.consistent());

  rep = verify_prediction(triangle_from_angles(AngleTriple::canonical(80, 80, 20)), true);
  EXPECT_EQ(rep.status, Agreement::Agree);
}

TEST(VerifyPrediction, TieIdentities) {
  // alpha + beta/2 = 120: the WET on a has side c exactly.
  const TriangleSpec tri = triangle_from_angles(AngleTriple::canonical(85, 70, 25));
  const TriangleETReport rep = analyze_triangle(tri, true);
  const double c = tri.side(SideLabel::C);
  EXPECT_NEAR(rep.at(SideLabel::A).side_length() / c, 1.0, 1e-12);
  EXPECT_EQ(rep.max_sides, kAC);
}

}  // namespace
}  // namespace equitri
