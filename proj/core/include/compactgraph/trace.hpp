// Copyright 2026 The compactgraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "compactgraph/graph.hpp"
#include "compactgraph/synth_state.hpp"

namespace compactgraph {

enum class SolveStatus { Solved, Infeasible, TimedOut };

/// One search event after initialisation.
///
/// Commit: `chosen` was fixed in a child state; `forced` is what
/// propagation then fixed. Backtrack: the child failed, so every pair in
/// `removed` was forbidden in the parent, which was propagated again.
/// `count` is absent when the resulting state contradicts.
struct TraceEntry {
  enum class Kind { Commit, Backtrack };

  Kind kind = Kind::Commit;
  std::size_t step = 0;  // 1-based commit number; 0 for backtracks
  Edge chosen;
  std::vector<Edge> removed;
  std::vector<Edge> forced;
  std::optional<BigInt> count;
  std::optional<Contradiction> contradiction;

  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

struct SynthTrace {
  BigInt c0 = 0;            // empty table
  BigInt seed_count = 0;    // seed after saturation only
  std::vector<Edge> init_forced;
  std::optional<BigInt> init_count;  // after the first full propagation
  std::optional<Contradiction> init_contradiction;
  std::vector<TraceEntry> entries;
  SolveStatus outcome = SolveStatus::Infeasible;

  std::size_t commits() const;
  std::size_t backtracks() const;

  /// c0, seed_count, init_count, then the count after each commit in trace
  /// order. Contradicting commits contribute nothing.
  std::vector<BigInt> milestones() const;

  friend bool operator==(const SynthTrace&, const SynthTrace&) = default;
};

/// Line format:
///   C0=<int>
///   step 0.1: seed C=<int>
///   step 0.2: [forced: a-b,...] C=<int>
///   step K: +u-v [forced: a-b,...] C=<int>
///   backtrack -u-v,-u-w [forced: ...] C=<int>
///   solved | infeasible | timeout
/// `C=<int>` is replaced by `contradiction <rule>` on failure and the
/// forced list is omitted when empty.
void write_trace(std::ostream& out, const SynthTrace& trace);
std::string to_string(const SynthTrace& trace);

/// Throws ParseError.
SynthTrace parse_trace(std::string_view text);

/// Edges the trace ends up with when applied to `seed`: the seed, the
/// initial forced edges and every commit (with its forced edges) that was
/// not undone by a later backtrack.
Graph replay(const Graph& seed, const SynthTrace& trace);

}  // namespace compactgraph
