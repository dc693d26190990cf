#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "equitri/errors.hpp"
#include "equitri/geometry.hpp"
#include "equitri/side_solver.hpp"

namespace equitri {

// Which angle rule produced a prediction.
enum class Rule {
  InscribedA,      // "5A"     alpha >= 120
  InscribedB,      // "5B"     60 < alpha < 120, beta < 60
  InscribedC,      // "5C"     beta >= 60
  Wedged1,         // "5C.1"
  Wedged2i,        // "5C.2i"
  Wedged2ii,       // "5C.2ii"
  Wedged3i,        // "5C.3i"
  Wedged3ii,       // "5C.3ii"
  AllCoincide,     // equilateral: every largest ET is the triangle
  CalabiCongruent  // 80-80-20: the three largest wedged ETs are congruent
};

std::string_view rule_id(Rule rule);

struct MinMaxPrediction {
  SideSet max_sides;
  SideSet min_sides;
  // Sides carrying no inscribed ET.
  SideSet absent_sides;
  Rule rule = Rule::InscribedA;
};

// No rule covers the angles (isosceles input, or a gap between clauses).
class Unclassified : public Error {
 public:
  Unclassified(const std::string& why, const AngleTriple& angles);
  const AngleTriple& angles() const { return angles_; }

 private:
  AngleTriple angles_;
};

// Equalities in the rules (alpha = 120, beta = 60, alpha + beta/2 = 120, ...)
// hold within this many degrees.
inline constexpr double kClauseTolerance = 1e-9;

// Max/min sides among the per-side largest inscribed ETs.
MinMaxPrediction predict_minmax_inscribed(const AngleTriple& angles);

// Same with wedged ETs admitted.  Only differs from the inscribed rules when
// beta > 60; clauses are tried in the order 5C.1, 5C.2i, 5C.2ii, 5C.3.
MinMaxPrediction predict_minmax_wet(const AngleTriple& angles);

// Smallest distance, in degrees, from the angles to any line where a clause
// condition changes truth value (alpha in {60, 80, 90, 120}, beta in {60, 75,
// 80, 90}, alpha + beta/2 = 120, alpha/2 + beta = 120) or to isosceles.
double clause_boundary_distance(const AngleTriple& angles);

enum class Agreement { Agree, Disagree, SolverOnly };
std::string_view to_string(Agreement agreement);

struct ConsistencyReport {
  Agreement status = Agreement::SolverOnly;
  std::optional<MinMaxPrediction> prediction;
  SideSet computed_max;
  SideSet computed_min;
  SideSet computed_absent;
  // Why the rules did not apply, for SolverOnly.
  std::string note;

  bool consistent() const { return status != Agreement::Disagree; }
};

// Cross-checks the angle rules against analyze_triangle (tie tolerance 1e-9
// relative area).  Unclassified angles fall back to the solver's answer.
ConsistencyReport verify_prediction(const TriangleSpec& tri, bool allow_wedged);

}  // namespace equitri
