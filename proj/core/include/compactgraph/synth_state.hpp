// Copyright 2026 The compactgraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "compactgraph/compactness.hpp"
#include "compactgraph/graph.hpp"

namespace compactgraph {

using BigInt = boost::multiprecision::cpp_int;

/// Synthesis target. Build with make(), which rejects (n, s, d) that are
/// not Compact or LimitCompact.
struct CompactnessSpec {
  std::size_t n = 0;
  std::size_t s = 0;
  std::size_t d = 0;
  std::optional<std::size_t> g_min;
  CompactnessClass cls = compactness::TooSmall{};

  /// Throws SpecRejected.
  static CompactnessSpec make(std::size_t n, std::size_t s, std::size_t d,
                              std::optional<std::size_t> g_min = std::nullopt);

  /// moore_bound(s, d) - n.
  std::size_t replicas() const;
  bool limit_compact() const { return std::holds_alternative<compactness::LimitCompact>(cls); }

  /// max(g_min, 2d+1) when limit compact, otherwise g_min.
  std::optional<std::size_t> effective_girth() const;

  friend bool operator==(const CompactnessSpec&, const CompactnessSpec&) = default;
};

enum class PairStatus : std::uint8_t { Candidate, Fixed, Forbidden };

enum class Rule : std::uint8_t {
  Saturation = 1,   // R1
  ShortCycle = 2,   // R2
  ForcedFill = 3,   // R3
  Deficiency = 4,   // R4
  Reach = 5,        // R5
  Verify = 6,       // solved table rejected by the graph checks
};

struct Contradiction {
  Rule rule = Rule::Deficiency;
  Vertex row = 0;
  std::optional<Vertex> other;

  friend bool operator==(const Contradiction&, const Contradiction&) = default;
};

std::ostream& operator<<(std::ostream& out, const Contradiction& c);

/// Result of one propagate() call. `forced` lists R3 edges in the order
/// they were fixed, including any fixed before a contradiction surfaced.
struct ChangeReport {
  std::vector<Edge> forced;
  std::size_t forbidden = 0;
  std::optional<Contradiction> contradiction;

  bool ok() const { return !contradiction.has_value(); }
};

/// Symmetric n x n pair table with per-row counters.
class SynthState {
 public:
  /// Empty table: every off-diagonal pair Candidate.
  explicit SynthState(const CompactnessSpec& spec);

  const CompactnessSpec& spec() const { return spec_; }
  std::size_t order() const { return spec_.n; }

  PairStatus status(Vertex u, Vertex v) const { return table_[u * spec_.n + v]; }
  void fix(Vertex u, Vertex v) { set(u, v, PairStatus::Fixed); }
  void forbid(Vertex u, Vertex v) { set(u, v, PairStatus::Forbidden); }

  /// f(v).
  std::size_t fixed_degree(Vertex v) const { return fixed_[v]; }
  /// s - f(v); negative values are clamped to 0 (overfull rows are reported
  /// by propagate as contradictions).
  std::size_t vacancies(Vertex v) const {
    return fixed_[v] >= spec_.s ? 0 : spec_.s - fixed_[v];
  }
  bool overfull(Vertex v) const { return fixed_[v] > spec_.s; }
  /// |B(v)|.
  std::size_t candidate_count(Vertex v) const { return candidates_[v]; }
  std::vector<Vertex> candidates(Vertex v) const;
  std::vector<Vertex> fixed_neighbors(Vertex v) const;

  bool solved() const;
  std::vector<Edge> fixed_edges() const;
  Graph fixed_graph() const;

  friend bool operator==(const SynthState&, const SynthState&) = default;

 private:
  void set(Vertex u, Vertex v, PairStatus st);

  CompactnessSpec spec_;
  std::vector<PairStatus> table_;
  std::vector<std::size_t> fixed_;
  std::vector<std::size_t> candidates_;
};

/// Seed edges Fixed, diagonal Forbidden, everything else Candidate. No rules
/// applied. Throws SeedDegreeExceeded or SeedDisconnected.
SynthState seeded_state(const Graph& seed, const CompactnessSpec& spec);

/// seeded_state followed by one propagate(). The report, if requested,
/// receives the outcome of that pass.
SynthState init_state(const Graph& seed, const CompactnessSpec& spec,
                      ChangeReport* report = nullptr);

/// R1 only: candidates of saturated rows become Forbidden. Returns the
/// number of pairs forbidden.
std::size_t saturate(SynthState& state);

/// Applies R1-R5 to a fixpoint.
ChangeReport propagate(SynthState& state);

/// Sum over rows with vacancies of binomial(b - b_low, vacancies), b_low
/// being the candidates with a smaller id than the row.
BigInt combination_count(const SynthState& state);

struct Configuration {
  std::vector<Vertex> fixed;
  std::vector<Vertex> candidates;

  friend auto operator<=>(const Configuration&, const Configuration&) = default;
};

Configuration configuration(const SynthState& state, Vertex v);

/// Partition of B(row) into classes of equal configuration. Classes appear
/// in the order of their lowest member; members are ascending.
std::vector<std::vector<Vertex>> configurations(const SynthState& state, Vertex row);

}  // namespace compactgraph
