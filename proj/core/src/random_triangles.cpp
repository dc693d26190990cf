#include "equitri/random_triangles.hpp"

#include <cmath>
#include <random>

#include "equitri/errors.hpp"

namespace equitri {

std::vector<AngleTriple> random_scalene_angles(std::size_t count, std::uint64_t seed,
                                               const RandomTriangleOptions& options) {
  if (!(options.min_angle > 0.0) || 3.0 * options.min_angle + 3.0 * options.min_gap >= 180.0) {
    throw InvalidInput("random triangle options leave no admissible angles");
  }
  std::mt19937_64 rng(seed);
  // 53 random mantissa bits -> [0, 1).
  auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  const double lo = options.min_angle;
  const double span = 180.0 - 3.0 * lo;

  std::vector<AngleTriple> out;
  out.reserve(count);
  while (out.size() < count) {
    const double first = lo + span * unit();
    const double second = lo + span * unit();
    const double third = 180.0 - first - second;
    if (third < lo) continue;
    if (std::abs(first - second) < options.min_gap || std::abs(second - third) < options.min_gap ||
        std::abs(first - third) < options.min_gap) {
      continue;
    }
    out.push_back(AngleTriple::canonical(first, second, third));
  }
  return out;
}

}  // namespace equitri
