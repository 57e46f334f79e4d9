// Copyright 2026 The compactgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "compactgraph/isomorphism.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>

#include "compactgraph/error.hpp"
#include "compactgraph/metrics.hpp"

namespace compactgraph {
namespace {

using Mask = std::uint64_t;

constexpr Mask bit(Vertex v) { return Mask{1} << v; }

// Degree followed by the number of vertices at each BFS distance; the
// unreachable count goes last.
using Invariant = std::vector<std::size_t>;

std::vector<Invariant> invariants(const Graph& g) {
  std::vector<Invariant> out(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    auto dist = bfs_distances(g, v);
    std::size_t unreachable = 0;
    Invariant inv{g.degree(v)};
    for (std::size_t d : dist) {
      if (d == kUnreachable) {
        ++unreachable;
        continue;
      }
      if (inv.size() < d + 2) inv.resize(d + 2, 0);
      ++inv[d + 1];
    }
    inv.push_back(unreachable);
    out[v] = std::move(inv);
  }
  return out;
}

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Vertex w : g.neighbors(v)) adj[v] |= bit(w);
  }
  return adj;
}

class Matcher {
 public:
  Matcher(const Graph& g1, const Graph& g2) : n_(g1.order()), adj1_(adjacency_masks(g1)), adj2_(adjacency_masks(g2)) {}

  std::optional<std::vector<Vertex>> run(const std::vector<Invariant>& inv1,
                                         const std::vector<Invariant>& inv2) {
    // Group vertices of each graph by invariant.
    std::map<Invariant, std::vector<Vertex>> classes1;
    std::map<Invariant, Mask> classes2;
    for (Vertex v = 0; v < n_; ++v) {
      classes1[inv1[v]].push_back(v);
      classes2[inv2[v]] |= bit(v);
    }
    for (const auto& [inv, members] : classes1) {
      auto it = classes2.find(inv);
      if (it == classes2.end() || std::popcount(it->second) != static_cast<int>(members.size())) {
        return std::nullopt;
      }
    }
    allowed_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) allowed_[v] = classes2[inv1[v]];

    // Visit g1 in BFS order, starting each component from its vertex with
    // the smallest invariant class.
    std::vector<bool> seen(n_, false);
    while (order_.size() < n_) {
      Vertex start = 0;
      std::size_t best = n_ + 1;
      for (Vertex v = 0; v < n_; ++v) {
        if (seen[v]) continue;
        std::size_t sz = classes1[inv1[v]].size();
        if (sz < best) {
          best = sz;
          start = v;
        }
      }
      std::size_t head = order_.size();
      order_.push_back(start);
      seen[start] = true;
      for (; head < order_.size(); ++head) {
        Mask rest = adj1_[order_[head]];
        while (rest) {
          Vertex w = static_cast<Vertex>(std::countr_zero(rest));
          rest &= rest - 1;
          if (!seen[w]) {
            seen[w] = true;
            order_.push_back(w);
          }
        }
      }
    }
    map_.assign(n_, 0);
    if (!extend(0, 0, 0)) return std::nullopt;
    return map_;
  }

 private:
  bool extend(std::size_t depth, Mask mapped1, Mask image2) {
    if (depth == n_) return true;
    const Vertex x = order_[depth];
    Mask needed = 0;
    Mask candidates = allowed_[x] & ~image2;
    Mask back = adj1_[x] & mapped1;
    while (back) {
      Vertex u = static_cast<Vertex>(std::countr_zero(back));
      back &= back - 1;
      needed |= bit(map_[u]);
      candidates &= adj2_[map_[u]];
    }
    while (candidates) {
      Vertex y = static_cast<Vertex>(std::countr_zero(candidates));
      candidates &= candidates - 1;
      if ((adj2_[y] & image2) != needed) continue;
      map_[x] = y;
      if (extend(depth + 1, mapped1 | bit(x), image2 | bit(y))) return true;
    }
    return false;
  }

  std::size_t n_;
  std::vector<Mask> adj1_;
  std::vector<Mask> adj2_;
  std::vector<Mask> allowed_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
};

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g1, const Graph& g2) {
  for (const Graph* g : {&g1, &g2}) {
    if (g->order() > kMaxIsomorphismOrder) {
      throw SizeLimitExceeded(g->order(), kMaxIsomorphismOrder);
    }
  }
  if (g1.order() != g2.order() || g1.size() != g2.size()) return std::nullopt;
  auto d1 = g1.degree_sequence();
  auto d2 = g2.degree_sequence();
  std::sort(d1.begin(), d1.end());
  std::sort(d2.begin(), d2.end());
  if (d1 != d2) return std::nullopt;
  if (g1.order() == 0) return std::vector<Vertex>{};
  Matcher matcher(g1, g2);
  return matcher.run(invariants(g1), invariants(g2));
}

bool is_isomorphic(const Graph& g1, const Graph& g2) {
  return find_isomorphism(g1, g2).has_value();
}

}  // namespace compactgraph
