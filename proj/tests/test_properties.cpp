#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "equitri/classifier.hpp"
#include "equitri/random_triangles.hpp"
#include "equitri/side_solver.hpp"
#include "test_support.hpp"

namespace equitri {
namespace {

using testing::distance_to_boundary;
using testing::inside_closed;
using testing::rel_diff;

constexpr std::uint64_t kSeed = 7;
constexpr std::size_t kSuite = 1000;

const std::vector<AngleTriple>& suite() {
  static const std::vector<AngleTriple> triangles = random_scalene_angles(kSuite, kSeed);
  return triangles;
}

TEST(RandomTriangles, RespectConstraints) {
  ASSERT_EQ(suite().size(), kSuite);
  for (const AngleTriple& t : suite()) {
    EXPECT_GE(t.gamma(), 5.0);
    EXPECT_GE(t.alpha() - t.beta(), 0.5);
    EXPECT_GE(t.beta() - t.gamma(), 0.5);
    EXPECT_NEAR(t.alpha() + t.beta() + t.gamma(), 180.0, 1e-9);
  }
  const auto again = random_scalene_angles(10, kSeed);
  for (std::size_t i = 0; i < again.size(); ++i) EXPECT_EQ(again[i].alpha(), suite()[i].alpha());
}

TEST(GeometryProperties, SideOrderMatchesAngleOrder) {
  for (const AngleTriple& t : suite()) {
    const TriangleSpec tri = triangle_from_angles(t);
    EXPECT_GT(tri.side(SideLabel::A), tri.side(SideLabel::B));
    EXPECT_GT(tri.side(SideLabel::B), tri.side(SideLabel::C));
    for (SideLabel s : kAllSides) {
      const double law = tri.side(SideLabel::A) * std::sin(deg_to_rad(t.at(s))) /
                         std::sin(deg_to_rad(t.alpha()));
      EXPECT_LT(rel_diff(tri.side(s), law), 1e-12);
    }
  }
}

TEST(GeometryProperties, AngleSumFromVertices) {
  for (const AngleTriple& t : suite()) {
    const TriangleSpec tri = triangle_from_angles(t);
    const Point a = tri.vertex(SideLabel::A);
    const Point b = tri.vertex(SideLabel::B);
    const Point c = tri.vertex(SideLabel::C);
    const double sum = angle_at(a, b, c) + angle_at(b, c, a) + angle_at(c, a, b);
    EXPECT_NEAR(sum, 180.0, 1e-9);
  }
}

TEST(GeometryProperties, MetricsRoundTrip) {
  for (double s = 1e-6; s < 1e6; s *= 3.7) {
    EXPECT_LT(rel_diff(et_metrics_from_height(et_metrics_from_side(s).height).side, s), 1e-12);
  }
}

TEST(SolverProperties, ContainmentAndIncidence) {
  for (const AngleTriple& t : suite()) {
    const TriangleSpec tri = triangle_from_angles(t);
    const double scale = testing::longest_side(tri);
    for (SideLabel side : kAllSides) {
      const SideETResult r = largest_et_on_side(tri, side, true);
      ASSERT_TRUE(r.vertices.has_value());
      for (const Point& v : *r.vertices) EXPECT_TRUE(inside_closed(tri, v)) << side_char(side);
      EXPECT_GT(*r.ratio, 0.0);
      EXPECT_LE(*r.ratio, 1.0);
      EXPECT_EQ(r.inscribed, r.mode != PlacementMode::Wedged && r.mode != PlacementMode::None);
      if (r.inscribed) {
        for (const Point& v : *r.vertices) EXPECT_LE(distance_to_boundary(tri, v), 1e-9 * scale);
      } else {
        EXPECT_GT(distance_to_boundary(tri, (*r.vertices)[2]), 1e-9 * scale);
      }
      const auto [p, q] = tri.side_endpoints(side);
      EXPECT_LE(testing::distance_to_segment((*r.vertices)[0], p, q), 1e-9 * scale);
      EXPECT_LE(testing::distance_to_segment((*r.vertices)[1], p, q), 1e-9 * scale);
    }
  }
}

TEST(SolverProperties, ModeMatchesAdjacentAngles) {
  for (const AngleTriple& t : suite()) {
    const TriangleSpec tri = triangle_from_angles(t);
    for (SideLabel side : kAllSides) {
      const auto ends = TriangleSpec::side_endpoint_labels(side);
      const double lo = std::min(t.at(ends[0]), t.at(ends[1]));
      const double hi = std::max(t.at(ends[0]), t.at(ends[1]));
      const PlacementMode mode = largest_et_on_side(tri, side).mode;
      if (hi < 60) {
        EXPECT_EQ(mode, PlacementMode::ApexAtOppositeVertex);
      } else if (lo < 60) {
        EXPECT_EQ(mode, PlacementMode::SharedVertex);
      } else {
        EXPECT_EQ(mode, PlacementMode::None);
        EXPECT_EQ(largest_et_on_side(tri, side, true).mode, PlacementMode::Wedged);
      }
    }
  }
}

TEST(SolverProperties, ScaleEquivariance) {
  for (const AngleTriple& t : suite()) {
    const TriangleSpec tri = triangle_from_angles(t);
    for (double lambda : {1e-3, 2.5, 1e4}) {
      const TriangleSpec big = tri.scaled(lambda);
      for (SideLabel side : kAllSides) {
        const SideETResult r = largest_et_on_side(tri, side, true);
        const SideETResult q = largest_et_on_side(big, side, true);
        EXPECT_LT(rel_diff(q.side_length(), lambda * r.side_length()), 1e-12);
        EXPECT_LT(rel_diff(q.area(), lambda * lambda * r.area()), 1e-12);
        EXPECT_LT(rel_diff(*q.ratio, *r.ratio), 1e-12);
      }
    }
  }
}

TEST(SolverProperties, MaxInscribedSharesAVertex) {
  for (const AngleTriple& t : suite()) {
    const TriangleSpec tri = triangle_from_angles(t);
    const TriangleETReport rep = analyze_triangle(tri);
    const double scale = testing::longest_side(tri);
    for (SideLabel side : kAllSides) {
      if (!rep.max_sides.contains(side)) continue;
      bool shares = false;
      for (const Point& v : *rep.at(side).vertices) {
        for (SideLabel corner : kAllSides) shares = shares || distance(v, tri.vertex(corner)) <= 1e-9 * scale;
      }
      EXPECT_TRUE(shares);
    }
  }
}

TEST(SolverProperties, InscribedMaxOnLongSide) {
  for (const AngleTriple& t : suite()) {
    const TriangleETReport rep = analyze_triangle(triangle_from_angles(t));
    EXPECT_EQ(rep.max_sides, SideSet{SideLabel::A});
    if (t.beta() > 60) EXPECT_TRUE(rep.absent_sides.contains(SideLabel::C));
  }
}

TEST(ClassifierProperties, RulesMatchComputation) {
  for (bool wedged : {false, true}) {
    std::size_t agreed = 0;
    for (const AngleTriple& t : suite()) {
      if (clause_boundary_distance(t) < 1e-6) continue;
      const ConsistencyReport rep = verify_prediction(triangle_from_angles(t), wedged);
      EXPECT_EQ(rep.status, Agreement::Agree)
          << t.alpha() << "," << t.beta() << "," << t.gamma() << " " << rep.note;
      agreed += rep.status == Agreement::Agree;
    }
    EXPECT_GT(agreed, kSuite * 9 / 10);
  }
}

TEST(ClassifierProperties, ExactTieFamilies) {
  for (double x = 1.0; x < 60.0; x += 1.37) {
    // alpha = 120: min on b and c tie.
    {
      const double beta = 60 - x / 2 - 0.25;
      if (beta > 60 - beta) {
        const TriangleETReport r = analyze_triangle(triangle_from_angles(AngleTriple::canonical(120, beta, 60 - beta)));
        EXPECT_LT(rel_diff(r.at(SideLabel::B).area(), r.at(SideLabel::C).area()), 1e-12);
      }
    }
    // beta = 60: max on a and c tie.
    {
      const double alpha = 60 + x;
      if (alpha < 119) {
        const TriangleETReport r = analyze_triangle(triangle_from_angles(AngleTriple::canonical(alpha, 60, 120 - alpha)));
        EXPECT_LT(rel_diff(r.at(SideLabel::A).area(), r.at(SideLabel::C).area()), 1e-12);
      }
    }
  }
  // alpha + beta/2 = 120 and alpha/2 + beta = 120 with wedged ETs.
  for (double beta = 61; beta < 80; beta += 0.77) {
    const double alpha = 120 - beta / 2;
    const TriangleETReport r =
        analyze_triangle(triangle_from_angles(AngleTriple::canonical(alpha, beta, 180 - alpha - beta)), true);
    EXPECT_LT(rel_diff(r.at(SideLabel::A).area(), r.at(SideLabel::C).area()), 1e-12) << alpha;
  }
  for (double alpha = 80.5; alpha < 90; alpha += 0.37) {
    const double beta = 120 - alpha / 2;
    const TriangleETReport r =
        analyze_triangle(triangle_from_angles(AngleTriple::canonical(alpha, beta, 180 - alpha - beta)), true);
    EXPECT_LT(rel_diff(r.at(SideLabel::B).area(), r.at(SideLabel::C).area()), 1e-12) << alpha;
  }
}

}  // namespace
}  // namespace equitri
