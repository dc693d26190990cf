#include "equitri/classifier.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace equitri {

std::string_view rule_id(Rule rule) {
  switch (rule) {
    case Rule::InscribedA: return "5A";
    case Rule::InscribedB: return "5B";
    case Rule::InscribedC: return "5C";
    case Rule::Wedged1: return "5C.1";
    case Rule::Wedged2i: return "5C.2i";
    case Rule::Wedged2ii: return "5C.2ii";
    case Rule::Wedged3i: return "5C.3i";
    case Rule::Wedged3ii: return "5C.3ii";
    case Rule::AllCoincide: return "equilateral";
    case Rule::CalabiCongruent: return "6";
  }
  return "?";
}

std::string_view to_string(Agreement agreement) {
  switch (agreement) {
    case Agreement::Agree: return "agree";
    case Agreement::Disagree: return "disagree";
    case Agreement::SolverOnly: return "solver-only";
  }
  return "?";
}

namespace {

std::string with_angles(const std::string& why, const AngleTriple& t) {
  std::ostringstream os;
  os.precision(17);
  os << why << " (alpha=" << t.alpha() << ", beta=" << t.beta() << ", gamma=" << t.gamma() << ")";
  return os.str();
}

// Three-way comparison of an angle expression against a reference, with the
// clause tolerance deciding equality.
int cmp(double value, double ref) {
  if (value < ref - kClauseTolerance) return -1;
  if (value > ref + kClauseTolerance) return 1;
  return 0;
}
bool lt(double v, double ref) { return cmp(v, ref) < 0; }
bool gt(double v, double ref) { return cmp(v, ref) > 0; }
bool ge(double v, double ref) { return cmp(v, ref) >= 0; }
bool le(double v, double ref) { return cmp(v, ref) <= 0; }

constexpr SideLabel kA = SideLabel::A;
constexpr SideLabel kB = SideLabel::B;
constexpr SideLabel kC = SideLabel::C;

MinMaxPrediction all_coincide() {
  return {SideSet::all(), SideSet::all(), {}, Rule::AllCoincide};
}

bool is_calabi(const AngleTriple& t) {
  return cmp(t.alpha(), 80.0) == 0 && cmp(t.beta(), 80.0) == 0 && cmp(t.gamma(), 20.0) == 0;
}

}  // namespace

Unclassified::Unclassified(const std::string& why, const AngleTriple& angles)
    : Error(with_angles(why, angles)), angles_(angles) {}

MinMaxPrediction predict_minmax_inscribed(const AngleTriple& t) {
  if (t.is_equilateral(kClauseTolerance)) return all_coincide();
  if (t.is_isosceles(kClauseTolerance)) {
    throw Unclassified("isosceles triangles have no angle rule", t);
  }
  const double alpha = t.alpha();
  const double beta = t.beta();

  if (ge(beta, 60.0)) {
    MinMaxPrediction p{{kA}, {kB}, {}, Rule::InscribedC};
    if (cmp(beta, 60.0) == 0) p.max_sides.insert(kC);
    if (gt(beta, 60.0)) p.absent_sides.insert(kC);
    return p;
  }
  if (gt(alpha, 120.0)) return {{kA}, {kC}, {}, Rule::InscribedA};
  if (cmp(alpha, 120.0) == 0) return {{kA}, {kB, kC}, {}, Rule::InscribedA};
  if (gt(alpha, 60.0) && lt(alpha, 120.0) && lt(beta, 60.0)) {
    return {{kA}, {kB}, {}, Rule::InscribedB};
  }
  throw Unclassified("no inscribed rule matches", t);
}

MinMaxPrediction predict_minmax_wet(const AngleTriple& t) {
  if (t.is_equilateral(kClauseTolerance)) return all_coincide();
  if (is_calabi(t)) return {SideSet::all(), SideSet::all(), {}, Rule::CalabiCongruent};
  if (t.is_isosceles(kClauseTolerance)) {
    throw Unclassified("isosceles triangles other than 80-80-20 have no wedged rule", t);
  }
  // Side c is wedged only when both of its angles exceed 60; at beta = 60 the
  // inscribed tie on a and c is what holds.
  if (le(t.beta(), 60.0)) return predict_minmax_inscribed(t);

  const double alpha = t.alpha();
  const double beta = t.beta();
  const double long_bisected = alpha + beta / 2.0;   // blue locus at 120
  const double mid_bisected = alpha / 2.0 + beta;    // green locus at 120

  // 5C.1
  if (ge(beta, 60.0) && lt(beta, 80.0) && gt(alpha, 60.0) && lt(alpha, 90.0) &&
      lt(long_bisected, 120.0)) {
    return {{kC}, {kB}, {}, Rule::Wedged1};
  }
  // 5C.2i
  if (gt(beta, 60.0) && lt(beta, 80.0) && gt(alpha, 80.0) && lt(alpha, 90.0) &&
      lt(mid_bisected, 120.0) && ge(long_bisected, 120.0)) {
    MinMaxPrediction p{{kA}, {kB}, {}, Rule::Wedged2i};
    if (cmp(long_bisected, 120.0) == 0) p.max_sides.insert(kC);
    return p;
  }
  // 5C.2ii
  if (gt(beta, 75.0) && lt(beta, 90.0) && gt(alpha, 80.0) && lt(alpha, 90.0) &&
      ge(mid_bisected, 120.0)) {
    MinMaxPrediction p{{kA}, {kC}, {}, Rule::Wedged2ii};
    if (cmp(mid_bisected, 120.0) == 0) p.min_sides.insert(kB);
    return p;
  }
  // 5C.3
  if (gt(beta, 60.0) && lt(beta, 90.0) && gt(alpha, 90.0)) {
    switch (cmp(mid_bisected, 120.0)) {
      case -1: return {{kA}, {kB}, {}, Rule::Wedged3i};
      case 0: return {{kA}, {kB, kC}, {}, Rule::Wedged3i};
      default: return {{kA}, {kC}, {}, Rule::Wedged3ii};
    }
  }
  throw Unclassified("no wedged rule matches", t);
}

double clause_boundary_distance(const AngleTriple& t) {
  const double alpha = t.alpha();
  const double beta = t.beta();
  double d = std::min(alpha - beta, beta - t.gamma());
  for (double ref : {60.0, 80.0, 90.0, 120.0}) d = std::min(d, std::abs(alpha - ref));
  for (double ref : {60.0, 75.0, 80.0, 90.0}) d = std::min(d, std::abs(beta - ref));
  d = std::min(d, std::abs(alpha + beta / 2.0 - 120.0));
  d = std::min(d, std::abs(alpha / 2.0 + beta - 120.0));
  return d;
}

ConsistencyReport verify_prediction(const TriangleSpec& tri, bool allow_wedged) {
  const TriangleETReport computed = analyze_triangle(tri, allow_wedged, kDefaultTieTolerance);
  ConsistencyReport r;
  r.computed_max = computed.max_sides;
  r.computed_min = computed.min_sides;
  r.computed_absent = computed.absent_sides;
  try {
    r.prediction = allow_wedged ? predict_minmax_wet(tri.angles())
                                : predict_minmax_inscribed(tri.angles());
  } catch (const Unclassified& e) {
    r.status = Agreement::SolverOnly;
    r.note = e.what();
    return r;
  }
  const auto& p = *r.prediction;
  const bool same = p.max_sides == r.computed_max && p.min_sides == r.computed_min &&
                    p.absent_sides == r.computed_absent;
  r.status = same ? Agreement::Agree : Agreement::Disagree;
  return r;
}

}  // namespace equitri
