// Copyright 2026 The compactgraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "compactgraph/graph.hpp"
#include "compactgraph/metrics.hpp"

namespace compactgraph {

/// Index of an occurrence inside Projection::occurrences().
using OccurrenceId = std::size_t;
inline constexpr OccurrenceId kNoOccurrence = std::numeric_limits<OccurrenceId>::max();

struct Occurrence {
  Vertex vertex = 0;
  std::size_t level = 0;
  OccurrenceId parent = kNoOccurrence;
  OccurrenceId first_child = 0;
  std::size_t child_count = 0;
  bool is_replica = false;

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

/// Rooted occurrence tree. Occurrences are stored in level order with the
/// children of each occurrence contiguous and sorted by vertex id, so the
/// root is occurrence 0 and storage order is the canonical scan order used
/// for original/replica marking.
class Projection {
 public:
  /// Lays out a tree given as (vertex, parent) pairs in any order where each
  /// parent precedes its children. Sorts children, recomputes levels and
  /// replica flags. Throws DuplicateChild (offset 0) on a repeated child.
  struct RawNode {
    Vertex vertex;
    std::size_t parent;  // index into the raw list, kNoOccurrence for the root
  };
  static Projection from_tree(std::span<const RawNode> nodes);

  Vertex root() const { return occurrences_.front().vertex; }
  /// Deepest level present.
  std::size_t depth() const { return depth_; }
  std::size_t size() const { return occurrences_.size(); }

  const std::vector<Occurrence>& occurrences() const { return occurrences_; }
  const Occurrence& at(OccurrenceId id) const { return occurrences_.at(id); }
  std::span<const Occurrence> children(OccurrenceId id) const;

  std::size_t replica_count() const;
  /// Occurrence ids of `v`, in scan order; the first one is the original.
  std::vector<OccurrenceId> occurrences_of(Vertex v) const;

  friend bool operator==(const Projection&, const Projection&) = default;

 private:
  friend Projection build_projection(const Graph& g, Vertex root, std::size_t depth);

  void mark_replicas();

  std::vector<Occurrence> occurrences_;
  std::size_t depth_ = 0;
};

/// Occurrence budget for build_projection; exceeding it throws BudgetExceeded.
inline constexpr std::size_t kMaxOccurrences = std::size_t{1} << 24;

/// The children of an occurrence of u are N(u) minus the vertex of its
/// parent occurrence. Growth stops at `depth` levels or when no occurrence
/// has children.
Projection build_projection(const Graph& g, Vertex root, std::size_t depth);

/// Vertex sequence from the root to `occ`.
std::vector<Vertex> route(const Projection& p, OccurrenceId occ);
/// Vertex sequence from `occ` back to the root.
std::vector<Vertex> inverse_route(const Projection& p, OccurrenceId occ);

struct ReplicaCycle {
  Vertex vertex;
  OccurrenceId first;
  OccurrenceId second;
  std::size_t length;

  friend bool operator==(const ReplicaCycle&, const ReplicaCycle&) = default;
};

/// For each pair of occurrences of one vertex whose root paths, taken from
/// their deepest common occurrence, form a simple cycle: the cycle length
/// l1 + l2 - 2*l_common.
std::vector<ReplicaCycle> replica_cycles(const Projection& p);

bool is_vertex_complete(const Projection& p, std::size_t n);

/// Distinct {parent, child} vertex pairs, sorted.
std::vector<Edge> covered_edges(const Projection& p);

bool is_full(const Projection& p, const Graph& g);

/// Throws DisconnectedGraph.
Girth girth_via_projections(const Graph& g);

/// Least depth whose projection from v is vertex complete.
/// Throws DisconnectedGraph.
std::size_t eccentricity_via_projection(const Graph& g, Vertex v);

/// Union of covered edges. The order is one more than the largest vertex
/// id that appears, or `n` when given.
Graph graph_from_projections(std::span<const Projection> projections, std::size_t n = 0);

}  // namespace compactgraph
