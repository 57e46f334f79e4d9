// Copyright 2026 The compactgraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <ostream>
#include <vector>

#include "compactgraph/graph.hpp"

namespace compactgraph {

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

/// Hop distances from `root`; unreachable vertices hold kUnreachable.
std::vector<std::size_t> bfs_distances(const Graph& g, Vertex root);

bool is_connected(const Graph& g);

/// Throws DisconnectedGraph if some vertex is unreachable from v.
std::size_t eccentricity(const Graph& g, Vertex v);

/// Throws DisconnectedGraph on disconnected input. 0 for n <= 1.
std::size_t diameter(const Graph& g);

/// Length of a shortest cycle, or the acyclic marker for forests.
class Girth {
 public:
  static constexpr Girth acyclic() { return Girth(); }
  static constexpr Girth of(std::size_t length) { return Girth(length); }

  constexpr bool is_acyclic() const { return !length_.has_value(); }
  /// Precondition: !is_acyclic().
  constexpr std::size_t value() const { return *length_; }

  /// True when every cycle has length >= k. Forests satisfy any bound.
  constexpr bool at_least(std::size_t k) const { return is_acyclic() || *length_ >= k; }

  friend constexpr bool operator==(const Girth&, const Girth&) = default;

 private:
  constexpr Girth() = default;
  constexpr explicit Girth(std::size_t length) : length_(length) {}

  std::optional<std::size_t> length_;
};

std::ostream& operator<<(std::ostream& out, const Girth& g);

Girth girth(const Graph& g);

/// True iff every vertex has degree exactly s.
bool is_regular(const Graph& g, std::size_t s);

}  // namespace compactgraph
