// Copyright 2026 The compactgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "compactgraph/projection.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "compactgraph/error.hpp"

namespace compactgraph {

void Projection::mark_replicas() {
  std::unordered_set<Vertex> seen;
  depth_ = 0;
  for (Occurrence& occ : occurrences_) {
    occ.is_replica = !seen.insert(occ.vertex).second;
    depth_ = std::max(depth_, occ.level);
  }
}

Projection Projection::from_tree(std::span<const RawNode> nodes) {
  if (nodes.empty() || nodes.front().parent != kNoOccurrence) {
    throw Error("projection tree needs a root as the first node");
  }
  std::vector<std::vector<std::size_t>> kids(nodes.size());
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    if (nodes[i].parent >= i) throw Error("projection parent must precede child");
    kids[nodes[i].parent].push_back(i);
  }
  for (auto& list : kids) {
    std::sort(list.begin(), list.end(),
              [&](std::size_t a, std::size_t b) { return nodes[a].vertex < nodes[b].vertex; });
    auto dup = std::adjacent_find(list.begin(), list.end(), [&](std::size_t a, std::size_t b) {
      return nodes[a].vertex == nodes[b].vertex;
    });
    if (dup != list.end()) throw DuplicateChild(nodes[*dup].vertex, 0);
  }
  Projection p;
  p.occurrences_.reserve(nodes.size());
  std::vector<std::size_t> raw_of;
  raw_of.reserve(nodes.size());
  p.occurrences_.push_back(Occurrence{nodes[0].vertex, 0, kNoOccurrence, 0, 0, false});
  raw_of.push_back(0);
  for (OccurrenceId head = 0; head < p.occurrences_.size(); ++head) {
    const auto& list = kids[raw_of[head]];
    p.occurrences_[head].first_child = p.occurrences_.size();
    p.occurrences_[head].child_count = list.size();
    const std::size_t level = p.occurrences_[head].level + 1;
    for (std::size_t raw : list) {
      p.occurrences_.push_back(Occurrence{nodes[raw].vertex, level, head, 0, 0, false});
      raw_of.push_back(raw);
    }
  }
  p.mark_replicas();
  return p;
}

std::span<const Occurrence> Projection::children(OccurrenceId id) const {
  const Occurrence& occ = occurrences_.at(id);
  return std::span<const Occurrence>(occurrences_).subspan(occ.first_child, occ.child_count);
}

std::size_t Projection::replica_count() const {
  return static_cast<std::size_t>(std::count_if(
      occurrences_.begin(), occurrences_.end(), [](const Occurrence& o) { return o.is_replica; }));
}

std::vector<OccurrenceId> Projection::occurrences_of(Vertex v) const {
  std::vector<OccurrenceId> out;
  for (OccurrenceId i = 0; i < occurrences_.size(); ++i) {
    if (occurrences_[i].vertex == v) out.push_back(i);
  }
  return out;
}

Projection build_projection(const Graph& g, Vertex root, std::size_t depth) {
  if (root >= g.order()) throw Error("projection root out of range");
  Projection p;
  p.occurrences_.push_back(Occurrence{root, 0, kNoOccurrence, 0, 0, false});
  for (OccurrenceId head = 0; head < p.occurrences_.size(); ++head) {
    const Occurrence cur = p.occurrences_[head];
    p.occurrences_[head].first_child = p.occurrences_.size();
    if (cur.level == depth) continue;
    const bool has_parent = cur.parent != kNoOccurrence;
    const Vertex skip = has_parent ? p.occurrences_[cur.parent].vertex : 0;
    std::size_t count = 0;
    for (Vertex w : g.neighbors(cur.vertex)) {
      if (has_parent && w == skip) continue;
      p.occurrences_.push_back(Occurrence{w, cur.level + 1, head, 0, 0, false});
      ++count;
    }
    p.occurrences_[head].child_count = count;
    if (p.occurrences_.size() > kMaxOccurrences) {
      throw BudgetExceeded("projection exceeds occurrence budget");
    }
  }
  p.mark_replicas();
  return p;
}

std::vector<Vertex> inverse_route(const Projection& p, OccurrenceId occ) {
  std::vector<Vertex> out;
  for (OccurrenceId cur = occ; cur != kNoOccurrence; cur = p.at(cur).parent) {
    out.push_back(p.at(cur).vertex);
  }
  return out;
}

std::vector<Vertex> route(const Projection& p, OccurrenceId occ) {
  auto out = inverse_route(p, occ);
  std::reverse(out.begin(), out.end());
  return out;
}

namespace {

OccurrenceId common_ancestor(const Projection& p, OccurrenceId a, OccurrenceId b) {
  while (p.at(a).level > p.at(b).level) a = p.at(a).parent;
  while (p.at(b).level > p.at(a).level) b = p.at(b).parent;
  while (a != b) {
    a = p.at(a).parent;
    b = p.at(b).parent;
  }
  return a;
}

// The closed walk lca -> a = b -> lca visits every vertex once.
bool is_simple_cycle(const Projection& p, OccurrenceId a, OccurrenceId b, OccurrenceId lca,
                     std::vector<Vertex>& scratch) {
  scratch.clear();
  for (OccurrenceId cur = a; cur != lca; cur = p.at(cur).parent) scratch.push_back(p.at(cur).vertex);
  scratch.push_back(p.at(lca).vertex);
  for (OccurrenceId cur = p.at(b).parent; cur != lca; cur = p.at(cur).parent) {
    scratch.push_back(p.at(cur).vertex);
  }
  std::sort(scratch.begin(), scratch.end());
  return std::adjacent_find(scratch.begin(), scratch.end()) == scratch.end();
}

}  // namespace

std::vector<ReplicaCycle> replica_cycles(const Projection& p) {
  std::vector<std::vector<OccurrenceId>> by_vertex;
  for (OccurrenceId i = 0; i < p.size(); ++i) {
    Vertex v = p.at(i).vertex;
    if (v >= by_vertex.size()) by_vertex.resize(v + 1);
    by_vertex[v].push_back(i);
  }
  std::vector<ReplicaCycle> out;
  std::vector<Vertex> scratch;
  for (Vertex v = 0; v < by_vertex.size(); ++v) {
    const auto& occs = by_vertex[v];
    for (std::size_t i = 0; i < occs.size(); ++i) {
      for (std::size_t j = i + 1; j < occs.size(); ++j) {
        OccurrenceId a = occs[i];
        OccurrenceId b = occs[j];
        OccurrenceId lca = common_ancestor(p, a, b);
        if (lca == a || lca == b) continue;
        if (!is_simple_cycle(p, a, b, lca, scratch)) continue;
        out.push_back(ReplicaCycle{v, a, b, p.at(a).level + p.at(b).level - 2 * p.at(lca).level});
      }
    }
  }
  return out;
}

bool is_vertex_complete(const Projection& p, std::size_t n) {
  std::vector<bool> seen(n, false);
  std::size_t count = 0;
  for (const Occurrence& occ : p.occurrences()) {
    if (occ.vertex < n && !seen[occ.vertex]) {
      seen[occ.vertex] = true;
      ++count;
    }
  }
  return count == n;
}

std::vector<Edge> covered_edges(const Projection& p) {
  std::vector<Edge> out;
  for (const Occurrence& occ : p.occurrences()) {
    if (occ.parent != kNoOccurrence) out.emplace_back(p.at(occ.parent).vertex, occ.vertex);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_full(const Projection& p, const Graph& g) { return covered_edges(p) == g.edges(); }

Girth girth_via_projections(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedGraph();
  std::size_t best = kUnreachable;
  for (Vertex v = 0; v < g.order(); ++v) {
    Projection p = build_projection(g, v, eccentricity(g, v) + 1);
    for (const ReplicaCycle& c : replica_cycles(p)) best = std::min(best, c.length);
  }
  return best == kUnreachable ? Girth::acyclic() : Girth::of(best);
}

std::size_t eccentricity_via_projection(const Graph& g, Vertex v) {
  if (!is_connected(g)) throw DisconnectedGraph();
  // Each extra level reveals at least one new vertex until complete, so
  // n - 1 levels always suffice.
  for (std::size_t depth = 0;; ++depth) {
    if (is_vertex_complete(build_projection(g, v, depth), g.order())) return depth;
  }
}

Graph graph_from_projections(std::span<const Projection> projections, std::size_t n) {
  std::vector<Edge> edges;
  std::size_t order = n;
  for (const Projection& p : projections) {
    for (const Occurrence& occ : p.occurrences()) {
      order = std::max<std::size_t>(order, std::size_t{occ.vertex} + 1);
    }
    auto part = covered_edges(p);
    edges.insert(edges.end(), part.begin(), part.end());
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(order, edges);
}

}  // namespace compactgraph
