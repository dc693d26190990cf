#include "cli/report.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "cli/input.hpp"
#include "equitri/errors.hpp"

namespace equitri::cli {

std::string full_precision(double v) { return fmt::format("{}", v); }

ReportRow make_report_row(const std::string& id, const TriangleSpec& tri, bool allow_wedged,
                          double tie_tol) {
  ReportRow row;
  row.id = id;
  const auto& angles = tri.angles();
  row.angles = {angles.alpha(), angles.beta(), angles.gamma()};
  row.entered = angles.as_entered();
  row.triangle_area = tri.area();
  row.allow_wedged = allow_wedged;
  row.detail = analyze_triangle(tri, allow_wedged, tie_tol);

  for (SideLabel s : kAllSides) {
    const auto& r = row.detail.at(s);
    SideRow& out = row.sides[index_of(s)];
    out.side = s;
    for (std::size_t k = 0; k < 3; ++k) {
      if (tri.from_input(k) == s) out.entered_as = static_cast<SideLabel>(k);
    }
    out.length = tri.side(s);
    out.mode = r.mode;
    if (r.has_et()) {
      out.s = r.metrics->side;
      out.area = r.metrics->area;
      out.ratio = r.ratio;
    }
  }
  row.max_sides = row.detail.max_sides;
  row.min_sides = row.detail.min_sides;
  row.all_tied = row.detail.all_tied();

  const ConsistencyReport check = verify_prediction(tri, allow_wedged);
  row.agreement = check.status;
  if (check.prediction) row.rule = check.prediction->rule;
  return row;
}

void write_text(std::ostream& out, const ReportRow& row) {
  fmt::print(out, "triangle {}: alpha={:.6g} beta={:.6g} gamma={:.6g} (entered {:.6g},{:.6g},{:.6g})\n",
             row.id, row.angles[0], row.angles[1], row.angles[2], row.entered[0], row.entered[1],
             row.entered[2]);
  fmt::print(out, "placements: {}   triangle area: {:.6g}\n",
             row.allow_wedged ? "inscribed + wedged" : "inscribed", row.triangle_area);
  fmt::print(out, "{:<5} {:<8} {:<12} {:<24} {:<12} {:<12} {:<10}\n", "side", "entered", "length",
             "mode", "s", "area", "ratio");
  auto opt = [](const std::optional<double>& v) {
    return v ? fmt::format("{:.6g}", *v) : std::string("-");
  };
  for (const auto& s : row.sides) {
    fmt::print(out, "{:<5} {:<8} {:<12.6g} {:<24} {:<12} {:<12} {:<10}\n", side_char(s.side),
               side_char(s.entered_as), s.length, to_string(s.mode), opt(s.s), opt(s.area),
               opt(s.ratio));
  }
  fmt::print(out, "max: {}   min: {}\n", row.max_sides.to_string(), row.min_sides.to_string());
  if (row.all_tied) fmt::print(out, "all three largest ETs are congruent (all sides tied)\n");
  fmt::print(out, "rule: {}   prediction: {}\n", row.rule ? rule_id(*row.rule) : "-",
             to_string(row.agreement));
}

void write_side_csv(std::ostream& out, const std::vector<ReportRow>& rows, bool header) {
  if (header) out << kSideCsvHeader << '\n';
  auto opt = [](const std::optional<double>& v) { return v ? full_precision(*v) : std::string(); };
  for (const auto& row : rows) {
    for (const auto& s : row.sides) {
      out << row.id << ',' << full_precision(row.angles[0]) << ',' << full_precision(row.angles[1])
          << ',' << full_precision(row.angles[2]) << ',' << side_char(s.side) << ',' << opt(s.s)
          << ',' << opt(s.area) << ',' << opt(s.ratio) << ',' << to_string(s.mode) << '\n';
    }
  }
}

std::vector<SideCsvRecord> read_side_csv(std::istream& in) {
  std::vector<SideCsvRecord> out;
  std::string line;
  if (!std::getline(in, line) || line != kSideCsvHeader) {
    throw InvalidInput("missing side CSV header");
  }
  auto number = [](std::string_view f) {
    auto v = parse_double(f);
    if (!v) throw InvalidInput("bad number in side CSV: '" + std::string(f) + "'");
    return *v;
  };
  auto optional_number = [&](std::string_view f) -> std::optional<double> {
    if (f.empty()) return std::nullopt;
    return number(f);
  };
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_fields(line);
    if (f.size() != 9) throw InvalidInput("side CSV rows have 9 fields");
    SideCsvRecord r;
    r.id = std::string(f[0]);
    r.angles = {number(f[1]), number(f[2]), number(f[3])};
    auto side = parse_side(f[4]);
    auto mode = parse_placement_mode(f[8]);
    if (!side || !mode) throw InvalidInput("bad side or mode in side CSV");
    r.side = *side;
    r.s = optional_number(f[5]);
    r.area = optional_number(f[6]);
    r.ratio = optional_number(f[7]);
    r.mode = *mode;
    out.push_back(std::move(r));
  }
  return out;
}

TableRow make_table_row(ReportRow report, std::optional<ChartReference> reference) {
  TableRow row;
  row.min_ratio = std::numeric_limits<double>::infinity();
  row.max_ratio = 0.0;
  for (const auto& s : report.sides) {
    if (!s.ratio) continue;
    row.min_ratio = std::min(row.min_ratio, *s.ratio);
    row.max_ratio = std::max(row.max_ratio, *s.ratio);
  }
  row.report = std::move(report);
  row.reference = reference;
  return row;
}

void write_table_csv(std::ostream& out, const std::vector<TableRow>& rows, bool compare) {
  out << "id,alpha,beta,gamma,min_sides,min_ratio,max_sides,max_ratio,rule,agree";
  if (compare) out << ",chart_min,chart_max,delta_min,delta_max";
  out << '\n';
  for (const auto& row : rows) {
    const auto& r = row.report;
    out << r.id << ',' << full_precision(r.angles[0]) << ',' << full_precision(r.angles[1]) << ','
        << full_precision(r.angles[2]) << ',' << r.min_sides.to_string() << ','
        << full_precision(row.min_ratio) << ',' << r.max_sides.to_string() << ','
        << full_precision(row.max_ratio) << ',' << (r.rule ? rule_id(*r.rule) : "-") << ','
        << to_string(r.agreement);
    if (compare) {
      if (row.reference) {
        out << ',' << full_precision(row.reference->min_ratio) << ','
            << full_precision(row.reference->max_ratio) << ','
            << full_precision(row.min_ratio - row.reference->min_ratio) << ','
            << full_precision(row.max_ratio - row.reference->max_ratio);
      } else {
        out << ",,,,";
      }
    }
    out << '\n';
  }
}

}  // namespace equitri::cli
