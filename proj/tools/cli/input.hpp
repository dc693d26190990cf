#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "equitri/geometry.hpp"

namespace equitri::cli {

struct AnglesInput {
  std::array<double, 3> degrees{};
  SideLabel scale_side = SideLabel::A;
  double scale = 1.0;
};

struct ApexInput {
  double x = 0.0;
  double y = 0.0;
};

// One triangle from the command line or a CSV row.
struct TriangleInputRecord {
  std::string id;
  std::variant<AnglesInput, ApexInput> shape;
};

// Builds the triangle; throws InvalidInput / DegenerateTriangle.
TriangleSpec to_triangle(const TriangleInputRecord& record);

// "45,75,60" -> {45, 75, 60}.  Throws InvalidInput unless exactly `count`
// finite numbers are present.
std::vector<double> parse_number_list(std::string_view text, std::size_t count);

// Strict full-string double parse.
std::optional<double> parse_double(std::string_view text);

// Rows `id,alpha,beta,gamma[,scale_side,scale]` or `id,apex_x,apex_y`.  A
// first line starting with "id," is treated as a header.  Blank lines and
// lines starting with '#' are skipped.  Throws InvalidInput naming the line.
std::vector<TriangleInputRecord> read_triangle_csv(std::istream& in);

std::vector<std::string_view> split_fields(std::string_view line, char sep = ',');

}  // namespace equitri::cli
