// Copyright 2026 The compactgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "compactgraph/solver.hpp"

#include "compactgraph/error.hpp"
#include "compactgraph/metrics.hpp"

namespace compactgraph {

Graph skeleton_seed(const CompactnessSpec& spec) {
  const std::size_t n = spec.n;
  std::vector<Edge> edges;
  Vertex next = 1;
  for (Vertex v = 0; v < n && next < n; ++v) {
    const std::size_t kids = v == 0 ? spec.s : spec.s - 1;
    for (std::size_t k = 0; k < kids && next < n; ++k) edges.emplace_back(v, next++);
  }
  return Graph(n, edges);
}

BranchPoint branch_on_row(const SynthState& state, Vertex row, bool symmetry_pruning) {
  BranchPoint bp;
  bp.row = row;
  if (symmetry_pruning) {
    bp.classes = configurations(state, row);
  } else {
    for (Vertex u : state.candidates(row)) bp.classes.push_back({u});
  }
  for (const auto& cls : bp.classes) bp.representatives.emplace_back(row, cls.front());
  return bp;
}

std::optional<BranchPoint> choose_branch(const SynthState& state, RowPolicy policy,
                                         bool symmetry_pruning) {
  std::optional<Vertex> row;
  for (Vertex v = 0; v < state.order(); ++v) {
    const std::size_t vac = state.vacancies(v);
    if (vac == 0) continue;
    if (!row || vac > state.vacancies(*row)) row = v;
    if (policy == RowPolicy::LowestRow) break;
  }
  if (!row) return std::nullopt;
  return branch_on_row(state, *row, symmetry_pruning);
}

bool satisfies(const Graph& g, const CompactnessSpec& spec) {
  if (g.order() != spec.n || !is_regular(g, spec.s) || !is_connected(g)) return false;
  if (diameter(g) > spec.d) return false;
  if (auto gmin = spec.effective_girth()) return girth(g).at_least(*gmin);
  return true;
}

namespace {

struct TimedOut {};

class Search {
 public:
  Search(const SolveOptions& options, SynthTrace& trace, SolveStats& stats)
      : options_(options), trace_(trace), stats_(stats) {}

  // `state` is propagated and live. On success it holds the solution.
  bool run(SynthState& state) {
    if (state.solved()) return true;
    if (options_.deadline && std::chrono::steady_clock::now() >= *options_.deadline) {
      throw TimedOut{};
    }
    auto bp = choose_branch(state, options_.row_policy, options_.symmetry_pruning);
    Vertex row = bp->row;
    while (true) {
      const std::vector<Vertex> cls = bp->classes.front();
      SynthState child = state;
      child.fix(row, cls.front());
      TraceEntry entry;
      entry.kind = TraceEntry::Kind::Commit;
      entry.step = ++step_;
      entry.chosen = Edge(row, cls.front());
      record(child, propagate(child), entry);
      const bool live = !entry.contradiction.has_value();
      trace_.entries.push_back(std::move(entry));
      ++stats_.commits;
      if (live && run(child)) {
        state = std::move(child);
        return true;
      }

      TraceEntry back;
      back.kind = TraceEntry::Kind::Backtrack;
      for (Vertex u : cls) {
        state.forbid(row, u);
        back.removed.emplace_back(row, u);
      }
      record(state, propagate(state), back);
      const bool still_live = !back.contradiction.has_value();
      trace_.entries.push_back(std::move(back));
      ++stats_.backtracks;
      if (!still_live) return false;
      if (state.solved()) return true;
      if (state.vacancies(row) == 0) return run(state);
      bp = branch_on_row(state, row, options_.symmetry_pruning);
    }
  }

 private:
  // Copies the propagation outcome into `entry`, turning a solved table
  // that fails the graph checks into a contradiction.
  void record(const SynthState& state, ChangeReport report, TraceEntry& entry) {
    stats_.forced += report.forced.size();
    entry.forced = std::move(report.forced);
    if (!report.ok()) {
      entry.contradiction = report.contradiction;
      return;
    }
    if (state.solved() && !satisfies(state.fixed_graph(), state.spec())) {
      entry.contradiction = Contradiction{Rule::Verify, 0, std::nullopt};
      return;
    }
    entry.count = combination_count(state);
  }

  const SolveOptions& options_;
  SynthTrace& trace_;
  SolveStats& stats_;
  std::size_t step_ = 0;
};

}  // namespace

SolveResult solve(const CompactnessSpec& spec, const std::optional<Graph>& seed,
                  const SolveOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  SolveResult result;
  result.seed = seed ? *seed : skeleton_seed(spec);
  SynthState state = seeded_state(result.seed, spec);

  SynthTrace& trace = result.trace;
  trace.c0 = combination_count(SynthState(spec));
  {
    SynthState saturated = state;
    saturate(saturated);
    trace.seed_count = combination_count(saturated);
  }
  result.stats.missing_edges = spec.n * spec.s / 2 - result.seed.size();

  ChangeReport init = propagate(state);
  result.stats.forced += init.forced.size();
  trace.init_forced = init.forced;
  bool live = init.ok();
  if (!live) {
    trace.init_contradiction = init.contradiction;
  } else if (state.solved() && !satisfies(state.fixed_graph(), spec)) {
    trace.init_contradiction = Contradiction{Rule::Verify, 0, std::nullopt};
    live = false;
  } else {
    trace.init_count = combination_count(state);
  }

  if (live) {
    Search search(options, trace, result.stats);
    try {
      if (search.run(state)) {
        result.status = SolveStatus::Solved;
        result.graph = state.fixed_graph();
      }
    } catch (const TimedOut&) {
      result.status = SolveStatus::TimedOut;
    }
  }
  trace.outcome = result.status;
  result.stats.elapsed = std::chrono::steady_clock::now() - started;
  return result;
}

}  // namespace compactgraph
