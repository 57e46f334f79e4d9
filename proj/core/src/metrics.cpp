// Copyright 2026 The compactgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "compactgraph/metrics.hpp"

#include <algorithm>
#include <queue>

#include "compactgraph/error.hpp"

namespace compactgraph {

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex root) {
  std::vector<std::size_t> dist(g.order(), kUnreachable);
  if (root >= g.order()) throw Error("bfs root out of range");
  std::queue<Vertex> frontier;
  dist[root] = 0;
  frontier.push(root);
  while (!frontier.empty()) {
    Vertex u = frontier.front();
    frontier.pop();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        frontier.push(w);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto dist = bfs_distances(g, 0);
  return std::find(dist.begin(), dist.end(), kUnreachable) == dist.end();
}

std::size_t eccentricity(const Graph& g, Vertex v) {
  auto dist = bfs_distances(g, v);
  std::size_t ecc = *std::max_element(dist.begin(), dist.end());
  if (ecc == kUnreachable) throw DisconnectedGraph();
  return ecc;
}

std::size_t diameter(const Graph& g) {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, eccentricity(g, v));
  return best;
}

std::ostream& operator<<(std::ostream& out, const Girth& g) {
  if (g.is_acyclic()) return out << "acyclic";
  return out << g.value();
}

Girth girth(const Graph& g) {
  const std::size_t n = g.order();
  std::size_t best = kUnreachable;
  std::vector<std::size_t> dist(n);
  std::vector<Vertex> parent(n);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), kUnreachable);
    queue.clear();
    dist[root] = 0;
    parent[root] = root;
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex u = queue[head];
      // Any cycle found from here is at least 2*dist[u]+1 long.
      if (2 * dist[u] + 1 >= best) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] == kUnreachable) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  return best == kUnreachable ? Girth::acyclic() : Girth::of(best);
}

bool is_regular(const Graph& g, std::size_t s) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != s) return false;
  }
  return true;
}

}  // namespace compactgraph
