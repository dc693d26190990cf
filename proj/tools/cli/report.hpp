#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "equitri/classifier.hpp"
#include "equitri/side_solver.hpp"

namespace equitri::cli {

struct SideRow {
  SideLabel side = SideLabel::A;
  // Label of this side in the order the angles were entered.
  SideLabel entered_as = SideLabel::A;
  double length = 0.0;
  PlacementMode mode = PlacementMode::None;
  std::optional<double> s;
  std::optional<double> area;
  std::optional<double> ratio;
};

struct ReportRow {
  std::string id;
  std::array<double, 3> angles{};   // canonical alpha, beta, gamma
  std::array<double, 3> entered{};  // as given
  double triangle_area = 0.0;
  bool allow_wedged = false;
  std::array<SideRow, 3> sides;
  SideSet max_sides;
  SideSet min_sides;
  bool all_tied = false;
  std::optional<Rule> rule;
  Agreement agreement = Agreement::SolverOnly;
  TriangleETReport detail;
};

ReportRow make_report_row(const std::string& id, const TriangleSpec& tri, bool allow_wedged,
                          double tie_tol);

// Human-readable report, 6 significant digits.
void write_text(std::ostream& out, const ReportRow& row);

inline constexpr const char* kSideCsvHeader = "id,alpha,beta,gamma,side,s,area,ratio,mode";

// One line per (triangle, side), full precision; empty s/area/ratio for mode none.
void write_side_csv(std::ostream& out, const std::vector<ReportRow>& rows, bool header = true);

struct SideCsvRecord {
  std::string id;
  std::array<double, 3> angles{};
  SideLabel side = SideLabel::A;
  std::optional<double> s;
  std::optional<double> area;
  std::optional<double> ratio;
  PlacementMode mode = PlacementMode::None;
};

// Inverse of write_side_csv; throws InvalidInput on malformed data.
std::vector<SideCsvRecord> read_side_csv(std::istream& in);

// Reference values printed in the measured chart, when known.
struct ChartReference {
  double min_ratio;
  double max_ratio;
};

struct TableRow {
  ReportRow report;
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  std::optional<ChartReference> reference;
};

TableRow make_table_row(ReportRow report, std::optional<ChartReference> reference);

void write_table_csv(std::ostream& out, const std::vector<TableRow>& rows, bool compare);

// Shortest round-tripping decimal form.
std::string full_precision(double v);

}  // namespace equitri::cli
