// Copyright 2026 The compactgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "compactgraph/oracle.hpp"

#include <algorithm>
#include <array>
#include <cstdint>

#include "compactgraph/bracket.hpp"
#include "compactgraph/error.hpp"
#include "fixture_data.hpp"

namespace compactgraph {

std::ostream& operator<<(std::ostream& out, const VerifyReport& r) {
  out << "n: " << r.n << '\n';
  out << "edges: " << r.edges << '\n';
  out << "regular(" << r.s << "): " << (r.regular ? "yes" : "no") << '\n';
  out << "diameter: ";
  if (r.diameter) {
    out << *r.diameter;
  } else {
    out << "disconnected";
  }
  out << '\n';
  out << "girth: " << r.girth;
  if (r.required_girth) out << " (required >= " << *r.required_girth << ')';
  out << '\n';
  out << "class: " << r.cls << '\n';
  std::size_t complete = 0;
  std::size_t min_rep = r.roots.empty() ? 0 : r.roots.front().replicas;
  std::size_t max_rep = min_rep;
  for (const RootSummary& root : r.roots) {
    complete += root.vertex_complete ? 1 : 0;
    min_rep = std::min(min_rep, root.replicas);
    max_rep = std::max(max_rep, root.replicas);
  }
  out << "vertex-complete projections: " << complete << '/' << r.roots.size() << '\n';
  out << "replicas per projection: " << min_rep;
  if (max_rep != min_rep) out << ".." << max_rep;
  out << '\n';
  for (const std::string& f : r.failures) out << "failure: " << f << '\n';
  out << (r.pass ? "pass" : "fail") << '\n';
  return out;
}

VerifyReport verify_spec(const Graph& g, const CompactnessSpec& spec) {
  VerifyReport r;
  r.n = g.order();
  r.edges = g.size();
  r.s = spec.s;
  r.order_matches = g.order() == spec.n;
  r.regular = is_regular(g, spec.s);
  r.cls = classify_compactness(std::max<std::size_t>(g.order(), 1), spec.s, spec.d);
  r.required_girth = spec.effective_girth();
  if (is_connected(g)) r.diameter = diameter(g);
  r.girth = girth(g);
  for (Vertex v = 0; v < g.order(); ++v) {
    Projection p = build_projection(g, v, spec.d);
    r.roots.push_back(RootSummary{v, is_vertex_complete(p, g.order()), p.replica_count()});
  }

  if (!r.order_matches) {
    r.failures.push_back("order " + std::to_string(g.order()) + " != " + std::to_string(spec.n));
  }
  if (!r.regular) r.failures.push_back("not " + std::to_string(spec.s) + "-regular");
  if (!r.diameter) {
    r.failures.push_back("disconnected");
  } else if (*r.diameter > spec.d) {
    r.failures.push_back("diameter " + std::to_string(*r.diameter) + " > " +
                         std::to_string(spec.d));
  }
  if (r.required_girth && !r.girth.at_least(*r.required_girth)) {
    r.failures.push_back("girth below " + std::to_string(*r.required_girth));
  }
  for (const RootSummary& root : r.roots) {
    if (!root.vertex_complete) {
      r.failures.push_back("projection of " + std::to_string(root.root) + " is not vertex complete");
      break;
    }
  }
  r.pass = r.failures.empty();
  return r;
}

std::vector<std::string_view> fixture_names() {
  return {kPetersenFixture, kCageFixture, kCompactFixture};
}

std::vector<Projection> fixture_projections(std::string_view name) {
  if (name == kPetersenFixture) return read_proj(detail::kPetersenProj);
  if (name == kCageFixture) return read_proj(detail::kCage30Proj);
  if (name == kCompactFixture) return read_proj(detail::kCompact15Proj);
  throw UnknownFixture(std::string(name));
}

CompactnessSpec fixture_spec(std::string_view name) {
  if (name == kPetersenFixture) return CompactnessSpec::make(10, 3, 2);
  if (name == kCageFixture) return CompactnessSpec::make(30, 3, 4, 8);
  if (name == kCompactFixture) return CompactnessSpec::make(15, 4, 2);
  throw UnknownFixture(std::string(name));
}

namespace {

// Each depth >= 1 projection states its root's neighbourhood on level 1.
// Those lists must agree with each other and with the union graph.
void check_neighbourhoods(const std::vector<Projection>& projections, const Graph& g) {
  for (const Projection& p : projections) {
    if (p.depth() < 1) continue;
    std::vector<Vertex> first;
    for (const Occurrence& occ : p.children(0)) first.push_back(occ.vertex);
    auto nbrs = g.neighbors(p.root());
    if (!std::equal(first.begin(), first.end(), nbrs.begin(), nbrs.end())) {
      throw Error("fixture neighbour list of " + std::to_string(p.root()) +
                  " disagrees with its other projections");
    }
  }
}

}  // namespace

Graph load_fixture(std::string_view name) {
  auto projections = fixture_projections(name);
  Graph g = graph_from_projections(projections);
  if (name == kCompactFixture) check_neighbourhoods(projections, g);
  return g;
}

namespace {

using Mask = std::uint16_t;

class Exhaustive {
 public:
  Exhaustive(std::size_t n, std::size_t s, std::optional<std::size_t> d_max,
             std::optional<std::size_t> g_min, std::uint64_t budget)
      : n_(n), s_(s), d_max_(d_max), g_min_(g_min.value_or(0)), budget_(budget) {}

  bool run() {
    if (s_ == 0) return n_ == 1 || !d_max_;
    if ((n_ * s_) % 2 != 0 || s_ >= n_) return false;
    // Relabel so that vertex 0 is adjacent to 1..s.
    for (std::size_t v = 1; v <= s_; ++v) {
      if (!can_add(0, static_cast<int>(v))) return false;
      add(0, static_cast<int>(v));
    }
    return extend();
  }

 private:
  bool extend() {
    if (++nodes_ > budget_) throw BudgetExceeded("exhaustive search node budget exhausted");
    int u = -1;
    for (std::size_t v = 0; v < n_; ++v) {
      if (deg_[v] < s_) {
        u = static_cast<int>(v);
        break;
      }
    }
    if (u < 0) return accept();
    int start = u + 1;
    for (int w = 0; w < static_cast<int>(n_); ++w) {
      if (adj_[u] & bit(w)) start = std::max(start, w + 1);
    }
    for (int w = start; w < static_cast<int>(n_); ++w) {
      if (deg_[w] >= s_ || !can_add(u, w)) continue;
      add(u, w);
      if (extend()) return true;
      remove(u, w);
    }
    return false;
  }

  bool can_add(int u, int w) const {
    if (g_min_ <= 3) return true;
    return distance(u, w, g_min_ - 2) > g_min_ - 2;
  }

  // BFS distance capped at limit + 1.
  std::size_t distance(int from, int to, std::size_t limit) const {
    Mask seen = bit(from);
    Mask frontier = seen;
    for (std::size_t d = 1; d <= limit; ++d) {
      Mask next = 0;
      for (int v = 0; v < static_cast<int>(n_); ++v) {
        if (frontier & bit(v)) next |= adj_[v];
      }
      next &= static_cast<Mask>(~seen);
      if (next & bit(to)) return d;
      if (next == 0) break;
      seen |= next;
      frontier = next;
    }
    return limit + 1;
  }

  bool accept() const {
    if (!d_max_) return true;
    for (int root = 0; root < static_cast<int>(n_); ++root) {
      Mask seen = bit(root);
      Mask frontier = seen;
      for (std::size_t d = 0; d < *d_max_ && frontier; ++d) {
        Mask next = 0;
        for (int v = 0; v < static_cast<int>(n_); ++v) {
          if (frontier & bit(v)) next |= adj_[v];
        }
        frontier = next & static_cast<Mask>(~seen);
        seen |= next;
      }
      if (seen != all()) return false;
    }
    return true;
  }

  static Mask bit(int v) { return static_cast<Mask>(1u << v); }
  Mask all() const { return static_cast<Mask>((1u << n_) - 1); }

  void add(int u, int w) {
    adj_[u] |= bit(w);
    adj_[w] |= bit(u);
    ++deg_[u];
    ++deg_[w];
  }
  void remove(int u, int w) {
    adj_[u] &= static_cast<Mask>(~bit(w));
    adj_[w] &= static_cast<Mask>(~bit(u));
    --deg_[u];
    --deg_[w];
  }

  std::size_t n_;
  std::size_t s_;
  std::optional<std::size_t> d_max_;
  std::size_t g_min_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::array<Mask, kExhaustiveMaxOrder> adj_{};
  std::array<std::size_t, kExhaustiveMaxOrder> deg_{};
};

}  // namespace

bool exhaustive_exists(std::size_t n, std::size_t s, std::optional<std::size_t> d_max,
                       std::optional<std::size_t> g_min, std::uint64_t node_budget) {
  if (n > kExhaustiveMaxOrder || s > kExhaustiveMaxDegree) {
    throw BudgetExceeded("exhaustive search is limited to n <= 14 and s <= 4");
  }
  if (n == 0) return false;
  return Exhaustive(n, s, d_max, g_min, node_budget).run();
}

}  // namespace compactgraph
