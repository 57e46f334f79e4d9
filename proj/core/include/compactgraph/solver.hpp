// Copyright 2026 The compactgraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include "compactgraph/graph.hpp"
#include "compactgraph/synth_state.hpp"
#include "compactgraph/trace.hpp"

namespace compactgraph {

/// Breadth-first spanning tree numbered in level order: vertex 0 takes
/// min(s, n-1) children, each later vertex up to s-1 while ids remain.
Graph skeleton_seed(const CompactnessSpec& spec);

enum class RowPolicy {
  MostVacancies,  // most vacancies first, lowest id on ties
  LowestRow,      // lowest id with a vacancy
};

struct BranchPoint {
  Vertex row = 0;
  std::vector<std::vector<Vertex>> classes;
  /// (row, lowest member) for each class, in class order.
  std::vector<Edge> representatives;
};

/// nullopt for a solved state. With `symmetry_pruning` off every
/// candidate forms its own class.
std::optional<BranchPoint> choose_branch(const SynthState& state,
                                         RowPolicy policy = RowPolicy::MostVacancies,
                                         bool symmetry_pruning = true);

/// Same as choose_branch but for a fixed row.
BranchPoint branch_on_row(const SynthState& state, Vertex row, bool symmetry_pruning = true);

struct SolveOptions {
  bool symmetry_pruning = true;
  RowPolicy row_policy = RowPolicy::MostVacancies;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct SolveStats {
  std::size_t commits = 0;
  std::size_t backtracks = 0;
  std::size_t forced = 0;  // over all propagations, including abandoned ones
  /// n*s/2 minus the seed's edge count.
  std::size_t missing_edges = 0;
  std::chrono::nanoseconds elapsed{0};
};

struct SolveResult {
  SolveStatus status = SolveStatus::Infeasible;
  std::optional<Graph> graph;
  SynthTrace trace;
  SolveStats stats;
  Graph seed;
};

/// Regular of degree s, diameter <= d and girth >= effective girth, all
/// checked with graph_core.
bool satisfies(const Graph& g, const CompactnessSpec& spec);

/// Depth-first search over the pair table. `seed` defaults to
/// skeleton_seed(spec). Throws SeedDegreeExceeded, SeedDisconnected or
/// InvalidGraph for a bad seed.
SolveResult solve(const CompactnessSpec& spec, const std::optional<Graph>& seed = std::nullopt,
                  const SolveOptions& options = {});

}  // namespace compactgraph
