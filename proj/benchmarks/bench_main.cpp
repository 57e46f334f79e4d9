// Copyright 2026 The compactgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "compactgraph/isomorphism.hpp"
#include "compactgraph/metrics.hpp"
#include "compactgraph/oracle.hpp"
#include "compactgraph/projection.hpp"
#include "compactgraph/solver.hpp"

namespace cg = compactgraph;

namespace {

void BM_SolvePetersen(benchmark::State& state) {
  const auto spec = cg::CompactnessSpec::make(10, 3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(cg::solve(spec));
}
BENCHMARK(BM_SolvePetersen)->Unit(benchmark::kMicrosecond);

void BM_SolveCage30(benchmark::State& state) {
  const auto spec = cg::CompactnessSpec::make(30, 3, 4, 8);
  for (auto _ : state) benchmark::DoNotOptimize(cg::solve(spec));
}
BENCHMARK(BM_SolveCage30)->Unit(benchmark::kMillisecond);

void BM_SolveSeeded15(benchmark::State& state) {
  const auto spec = cg::CompactnessSpec::make(15, 4, 2);
  const cg::Graph seed(15, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 5}, {1, 6}, {2, 7},
                            {2, 8}, {3, 9}, {4, 10}, {5, 11}, {6, 12}, {7, 13}, {8, 14}});
  for (auto _ : state) benchmark::DoNotOptimize(cg::solve(spec, seed));
}
BENCHMARK(BM_SolveSeeded15)->Unit(benchmark::kMillisecond);

void BM_BuildProjection(benchmark::State& state) {
  const cg::Graph g = cg::load_fixture(cg::kCageFixture);
  const auto depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cg::build_projection(g, 0, depth));
}
BENCHMARK(BM_BuildProjection)->DenseRange(2, 8, 2);

void BM_GirthViaProjections(benchmark::State& state) {
  const cg::Graph g = cg::load_fixture(cg::kCageFixture);
  for (auto _ : state) benchmark::DoNotOptimize(cg::girth_via_projections(g));
}
BENCHMARK(BM_GirthViaProjections)->Unit(benchmark::kMillisecond);

void BM_GirthBfs(benchmark::State& state) {
  const cg::Graph g = cg::load_fixture(cg::kCageFixture);
  for (auto _ : state) benchmark::DoNotOptimize(cg::girth(g));
}
BENCHMARK(BM_GirthBfs);

void BM_IsomorphismCage(benchmark::State& state) {
  const cg::Graph g = cg::load_fixture(cg::kCageFixture);
  std::vector<cg::Vertex> perm(g.order());
  for (cg::Vertex v = 0; v < g.order(); ++v) perm[v] = (v * 7 + 3) % 30;
  const cg::Graph h = g.relabeled(perm);
  for (auto _ : state) benchmark::DoNotOptimize(cg::is_isomorphic(g, h));
}
BENCHMARK(BM_IsomorphismCage);

}  // namespace

BENCHMARK_MAIN();
