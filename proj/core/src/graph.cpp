// Copyright 2026 The compactgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "compactgraph/graph.hpp"

#include <algorithm>
#include <string>

#include "compactgraph/error.hpp"

namespace compactgraph {

Graph::Graph(std::size_t n) : adjacency_(n) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
  for (const Edge& e : edges) {
    if (e.u == e.v) {
      throw InvalidGraph("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.v >= n) {
      throw InvalidGraph("vertex " + std::to_string(e.v) + " out of range for n=" +
                         std::to_string(n));
    }
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& nbrs = adjacency_[v];
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) {
      throw InvalidGraph("duplicate edge at vertex " + std::to_string(v));
    }
  }
  edge_count_ = edges.size();
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= order() || v >= order()) return false;
  const auto& nbrs = adjacency_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<std::size_t> Graph::degree_sequence() const {
  std::vector<std::size_t> out;
  out.reserve(order());
  for (const auto& nbrs : adjacency_) out.push_back(nbrs.size());
  return out;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (perm.size() != order()) {
    throw InvalidGraph("relabelling has wrong length");
  }
  std::vector<Edge> mapped;
  mapped.reserve(edge_count_);
  for (const Edge& e : edges()) mapped.emplace_back(perm[e.u], perm[e.v]);
  return Graph(order(), mapped);
}

}  // namespace compactgraph
