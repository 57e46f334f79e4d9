// Copyright 2026 The compactgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "compactgraph/synth_state.hpp"

#include <sstream>

#include "compactgraph/error.hpp"
#include "compactgraph/metrics.hpp"

namespace compactgraph {

CompactnessSpec CompactnessSpec::make(std::size_t n, std::size_t s, std::size_t d,
                                      std::optional<std::size_t> g_min) {
  if (n < 1 || s < 2 || d < 1) {
    throw SpecRejected("spec requires n >= 1, s >= 2, d >= 1");
  }
  CompactnessSpec spec;
  spec.n = n;
  spec.s = s;
  spec.d = d;
  spec.g_min = g_min;
  spec.cls = classify_compactness(n, s, d);
  if (std::holds_alternative<compactness::TooSmall>(spec.cls) ||
      std::holds_alternative<compactness::Impossible>(spec.cls)) {
    std::ostringstream msg;
    msg << "(" << n << "," << s << "," << d << ") is " << spec.cls
        << ": order must lie in (" << moore_bound(s, d - 1) << ", " << moore_bound(s, d) << "]";
    throw SpecRejected(msg.str());
  }
  return spec;
}

std::size_t CompactnessSpec::replicas() const { return replica_count(cls); }

std::optional<std::size_t> CompactnessSpec::effective_girth() const {
  if (limit_compact()) return std::max(g_min.value_or(0), 2 * d + 1);
  return g_min;
}

std::ostream& operator<<(std::ostream& out, const Contradiction& c) {
  if (c.rule == Rule::Verify) return out << "verify";
  out << 'R' << static_cast<int>(c.rule) << " row " << c.row;
  if (c.other) out << " vertex " << *c.other;
  return out;
}

SynthState::SynthState(const CompactnessSpec& spec)
    : spec_(spec),
      table_(spec.n * spec.n, PairStatus::Candidate),
      fixed_(spec.n, 0),
      candidates_(spec.n, spec.n == 0 ? 0 : spec.n - 1) {
  for (std::size_t v = 0; v < spec.n; ++v) table_[v * spec.n + v] = PairStatus::Forbidden;
}

void SynthState::set(Vertex u, Vertex v, PairStatus st) {
  const std::size_t n = spec_.n;
  PairStatus old = table_[u * n + v];
  if (old == st) return;
  if (u == v) throw Error("diagonal cells are always forbidden");
  for (Vertex x : {u, v}) {
    if (old == PairStatus::Candidate) --candidates_[x];
    if (old == PairStatus::Fixed) --fixed_[x];
    if (st == PairStatus::Candidate) ++candidates_[x];
    if (st == PairStatus::Fixed) ++fixed_[x];
  }
  table_[u * n + v] = st;
  table_[v * n + u] = st;
}

std::vector<Vertex> SynthState::candidates(Vertex v) const {
  std::vector<Vertex> out;
  out.reserve(candidates_[v]);
  for (Vertex u = 0; u < spec_.n; ++u) {
    if (status(v, u) == PairStatus::Candidate) out.push_back(u);
  }
  return out;
}

std::vector<Vertex> SynthState::fixed_neighbors(Vertex v) const {
  std::vector<Vertex> out;
  out.reserve(fixed_[v]);
  for (Vertex u = 0; u < spec_.n; ++u) {
    if (status(v, u) == PairStatus::Fixed) out.push_back(u);
  }
  return out;
}

bool SynthState::solved() const {
  for (std::size_t v = 0; v < spec_.n; ++v) {
    if (fixed_[v] != spec_.s) return false;
  }
  return true;
}

std::vector<Edge> SynthState::fixed_edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < spec_.n; ++u) {
    for (Vertex v = u + 1; v < spec_.n; ++v) {
      if (status(u, v) == PairStatus::Fixed) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph SynthState::fixed_graph() const {
  auto edges = fixed_edges();
  return Graph(spec_.n, edges);
}

SynthState seeded_state(const Graph& seed, const CompactnessSpec& spec) {
  if (seed.order() != spec.n) {
    throw InvalidGraph("seed has " + std::to_string(seed.order()) + " vertices, expected " +
                       std::to_string(spec.n));
  }
  for (Vertex v = 0; v < seed.order(); ++v) {
    if (seed.degree(v) > spec.s) {
      throw SeedDegreeExceeded("seed vertex " + std::to_string(v) + " has degree " +
                               std::to_string(seed.degree(v)) + " > " + std::to_string(spec.s));
    }
  }
  if (!is_connected(seed)) throw SeedDisconnected();
  SynthState state(spec);
  for (const Edge& e : seed.edges()) state.fix(e.u, e.v);
  return state;
}

SynthState init_state(const Graph& seed, const CompactnessSpec& spec, ChangeReport* report) {
  SynthState state = seeded_state(seed, spec);
  ChangeReport r = propagate(state);
  if (report != nullptr) *report = std::move(r);
  return state;
}

std::size_t saturate(SynthState& state) {
  std::size_t count = 0;
  const std::size_t n = state.order();
  for (Vertex v = 0; v < n; ++v) {
    if (state.fixed_degree(v) < state.spec().s || state.candidate_count(v) == 0) continue;
    for (Vertex u = 0; u < n; ++u) {
      if (state.status(v, u) == PairStatus::Candidate) {
        state.forbid(v, u);
        ++count;
      }
    }
  }
  return count;
}

namespace {

// R2: forbid candidates whose endpoints are within `limit` hops over Fixed
// edges.
std::size_t ban_short_cycles(SynthState& state, std::size_t limit) {
  const std::size_t n = state.order();
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex v = 0; v < n; ++v) adj[v] = state.fixed_neighbors(v);
  std::size_t count = 0;
  std::vector<std::size_t> dist(n);
  std::vector<Vertex> queue;
  for (Vertex root = 0; root < n; ++root) {
    if (state.candidate_count(root) == 0) continue;
    std::fill(dist.begin(), dist.end(), kUnreachable);
    queue.assign(1, root);
    dist[root] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex x = queue[head];
      if (dist[x] == limit) continue;
      for (Vertex y : adj[x]) {
        if (dist[y] == kUnreachable) {
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        }
      }
    }
    for (Vertex w = root + 1; w < n; ++w) {
      if (dist[w] != kUnreachable && state.status(root, w) == PairStatus::Candidate) {
        state.forbid(root, w);
        ++count;
      }
    }
  }
  return count;
}

std::optional<Contradiction> check_deficiency(const SynthState& state) {
  for (Vertex v = 0; v < state.order(); ++v) {
    if (state.overfull(v) || state.candidate_count(v) < state.vacancies(v)) {
      return Contradiction{Rule::Deficiency, v, std::nullopt};
    }
  }
  return std::nullopt;
}

// R3 on the first qualifying row. Returns false when no row qualifies.
bool forced_fill(SynthState& state, std::vector<Edge>& forced) {
  for (Vertex v = 0; v < state.order(); ++v) {
    const std::size_t vac = state.vacancies(v);
    if (vac == 0 || state.candidate_count(v) != vac) continue;
    for (Vertex u : state.candidates(v)) {
      state.fix(v, u);
      forced.emplace_back(v, u);
    }
    return true;
  }
  return false;
}

// R5: every vertex within d hops of every root over Fixed plus Candidate.
std::optional<Contradiction> check_reach(const SynthState& state) {
  const std::size_t n = state.order();
  const std::size_t d = state.spec().d;
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (state.status(u, v) != PairStatus::Forbidden) adj[u].push_back(v);
    }
  }
  std::vector<std::size_t> dist(n);
  std::vector<Vertex> queue;
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), kUnreachable);
    queue.assign(1, root);
    dist[root] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex x = queue[head];
      if (dist[x] == d) continue;
      for (Vertex y : adj[x]) {
        if (dist[y] == kUnreachable) {
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        }
      }
    }
    if (queue.size() != n) {
      for (Vertex u = 0; u < n; ++u) {
        if (dist[u] == kUnreachable) return Contradiction{Rule::Reach, root, u};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

ChangeReport propagate(SynthState& state) {
  ChangeReport report;
  const auto girth = state.spec().effective_girth();
  while (true) {
    report.forbidden += saturate(state);
    if (girth && *girth >= 3) report.forbidden += ban_short_cycles(state, *girth - 2);
    if (auto c = check_deficiency(state)) {
      report.contradiction = c;
      return report;
    }
    if (!forced_fill(state, report.forced)) break;
  }
  report.contradiction = check_reach(state);
  return report;
}

BigInt combination_count(const SynthState& state) {
  BigInt total = 0;
  for (Vertex v = 0; v < state.order(); ++v) {
    const std::size_t vac = state.vacancies(v);
    if (vac == 0) continue;
    std::size_t above = 0;
    for (Vertex u = v + 1; u < state.order(); ++u) {
      if (state.status(v, u) == PairStatus::Candidate) ++above;
    }
    if (above < vac) continue;
    BigInt binom = 1;
    for (std::size_t i = 0; i < vac; ++i) {
      binom *= above - i;
      binom /= i + 1;
    }
    total += binom;
  }
  return total;
}

Configuration configuration(const SynthState& state, Vertex v) {
  return Configuration{state.fixed_neighbors(v), state.candidates(v)};
}

std::vector<std::vector<Vertex>> configurations(const SynthState& state, Vertex row) {
  std::vector<std::vector<Vertex>> classes;
  std::vector<Configuration> keys;
  for (Vertex u : state.candidates(row)) {
    Configuration key = configuration(state, u);
    std::size_t k = 0;
    while (k < keys.size() && keys[k] != key) ++k;
    if (k == keys.size()) {
      keys.push_back(std::move(key));
      classes.emplace_back();
    }
    classes[k].push_back(u);
  }
  return classes;
}

}  // namespace compactgraph
