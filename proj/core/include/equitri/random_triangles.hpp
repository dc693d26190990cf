#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "equitri/geometry.hpp"

namespace equitri {

struct RandomTriangleOptions {
  double min_angle = 5.0;
  // Minimum pairwise difference between the three angles.
  double min_gap = 0.5;
};

// Scalene angle triples drawn uniformly over the angle simplex restricted by
// `options` (rejection sampling).  Deterministic for a given seed on every
// platform: uses mt19937_64 and its raw output only.
std::vector<AngleTriple> random_scalene_angles(std::size_t count, std::uint64_t seed,
                                               const RandomTriangleOptions& options = {});

}  // namespace equitri
