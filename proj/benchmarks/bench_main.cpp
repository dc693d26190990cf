#include <benchmark/benchmark.h>

#include "equitri/oracle.hpp"
#include "equitri/random_triangles.hpp"
#include "equitri/region_atlas.hpp"
#include "equitri/side_solver.hpp"

namespace {

using namespace equitri;

const std::vector<AngleTriple>& triangles() {
  static const auto t = random_scalene_angles(256, 7);
  return t;
}

void BM_AnalyzeTriangle(benchmark::State& state) {
  std::size_t i = 0;
  for (auto _ : state) {
    const TriangleSpec tri = triangle_from_angles(triangles()[i++ % triangles().size()]);
    benchmark::DoNotOptimize(analyze_triangle(tri, true));
  }
}
BENCHMARK(BM_AnalyzeTriangle);

void BM_OracleSide(benchmark::State& state) {
  OracleConfig cfg;
  cfg.grid_points = static_cast<std::size_t>(state.range(0));
  std::size_t i = 0;
  for (auto _ : state) {
    const TriangleSpec tri = triangle_from_angles(triangles()[i++ % triangles().size()]);
    benchmark::DoNotOptimize(oracle_largest_et_on_side(tri, SideLabel::B, cfg));
  }
}
BENCHMARK(BM_OracleSide)->Arg(256)->Arg(2048)->Unit(benchmark::kMicrosecond);

void BM_OracleGlobal(benchmark::State& state) {
  std::size_t i = 0;
  for (auto _ : state) {
    const TriangleSpec tri = triangle_from_angles(triangles()[i++ % triangles().size()]);
    benchmark::DoNotOptimize(oracle_global_inscribed_et(tri));
  }
}
BENCHMARK(BM_OracleGlobal)->Unit(benchmark::kMillisecond);

void BM_ClassifyApex(benchmark::State& state) {
  double x = -1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify_apex(x, 1.7));
    x += 1e-4;
    if (x > 1.4) x = -1.0;
  }
}
BENCHMARK(BM_ClassifyApex);

void BM_BuildAtlas(benchmark::State& state) {
  const auto side = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_atlas(256, {}, side, side * 4 / 3));
}
BENCHMARK(BM_BuildAtlas)->Arg(120)->Arg(240)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
