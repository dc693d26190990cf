#include "cli/input.hpp"

#include <charconv>
#include <cmath>
#include <istream>

#include "equitri/errors.hpp"

namespace equitri::cli {

std::vector<std::string_view> split_fields(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    const auto pos = line.find(sep);
    out.push_back(line.substr(0, pos));
    if (pos == std::string_view::npos) break;
    line.remove_prefix(pos + 1);
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::optional<double> parse_double(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty() || !std::isfinite(value)) return std::nullopt;
  return value;
}

std::vector<double> parse_number_list(std::string_view text, std::size_t count) {
  const auto fields = split_fields(text);
  if (fields.size() != count) {
    throw InvalidInput("expected " + std::to_string(count) + " comma-separated numbers, got '" +
                       std::string(text) + "'");
  }
  std::vector<double> out;
  for (auto f : fields) {
    auto v = parse_double(f);
    if (!v) throw InvalidInput("not a number: '" + std::string(f) + "'");
    out.push_back(*v);
  }
  return out;
}

TriangleSpec to_triangle(const TriangleInputRecord& record) {
  if (const auto* angles = std::get_if<AnglesInput>(&record.shape)) {
    const auto& d = angles->degrees;
    return triangle_from_angles(AngleTriple::canonical(d[0], d[1], d[2]), angles->scale_side,
                                angles->scale);
  }
  const auto& apex = std::get<ApexInput>(record.shape);
  return triangle_from_apex(apex.x, apex.y);
}

std::vector<TriangleInputRecord> read_triangle_csv(std::istream& in) {
  std::vector<TriangleInputRecord> out;
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& why) {
    throw InvalidInput("line " + std::to_string(line_no) + ": " + why);
  };
  auto number = [&](std::string_view field) {
    auto v = parse_double(field);
    if (!v) fail("not a number: '" + std::string(trim(field)) + "'");
    return *v;
  };

  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view view = trim(line);
    if (view.empty() || view.front() == '#') continue;
    if (line_no == 1 && view.starts_with("id,")) continue;

    const auto fields = split_fields(view);
    TriangleInputRecord rec;
    rec.id = std::string(trim(fields[0]));
    if (rec.id.empty()) fail("empty id");
    if (fields.size() == 3) {
      rec.shape = ApexInput{number(fields[1]), number(fields[2])};
    } else if (fields.size() == 4 || fields.size() == 6) {
      AnglesInput a;
      a.degrees = {number(fields[1]), number(fields[2]), number(fields[3])};
      if (fields.size() == 6) {
        auto side = parse_side(trim(fields[4]));
        if (!side) fail("scale_side must be a, b or c");
        a.scale_side = *side;
        a.scale = number(fields[5]);
      }
      rec.shape = a;
    } else {
      fail("expected id,alpha,beta,gamma[,scale_side,scale] or id,apex_x,apex_y");
    }
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace equitri::cli
