#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "cli/report.hpp"

namespace equitri::cli {

struct ChartEntry {
  std::string_view id;
  std::array<double, 3> angles;
  ChartReference measured;
};

// The twelve measured triangles (min and max area ratios of the largest
// inscribed ETs, as printed).
inline constexpr std::array<ChartEntry, 12> kMeasuredChart = {{
    {"70-65-45", {70, 65, 45}, {0.638, 0.677}},
    {"80-65-35", {80, 65, 35}, {0.461, 0.547}},
    {"90-70-20", {90, 70, 20}, {0.288, 0.327}},
    {"90-80-10", {90, 80, 10}, {0.168, 0.173}},
    {"75-60-45", {75, 60, 45}, {0.589, 0.732}},
    {"90-60-30", {90, 60, 30}, {0.378, 0.500}},
    {"100-60-20", {100, 60, 20}, {0.265, 0.348}},
    {"90-50-40", {90, 50, 40}, {0.437, 0.569}},
    {"110-40-30", {110, 40, 30}, {0.297, 0.395}},
    {"120-35-25", {120, 35, 25}, {0.243, 0.325}},
    {"130-30-20", {130, 30, 20}, {0.193, 0.258}},
    {"140-25-15", {140, 25, 15}, {0.150, 0.193}},
}};

// Chart entry with the same canonical angles (within 1e-9 degrees), if any.
std::optional<ChartReference> chart_reference(const std::array<double, 3>& canonical_angles);

// Measured values carry about +-0.01 of drawing-software noise.
inline constexpr double kChartTolerance = 0.01;

}  // namespace equitri::cli
