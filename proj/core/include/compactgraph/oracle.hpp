// Copyright 2026 The compactgraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "compactgraph/compactness.hpp"
#include "compactgraph/graph.hpp"
#include "compactgraph/metrics.hpp"
#include "compactgraph/projection.hpp"
#include "compactgraph/synth_state.hpp"

namespace compactgraph {

struct RootSummary {
  Vertex root = 0;
  bool vertex_complete = false;
  std::size_t replicas = 0;
};

/// Everything here is computed with graph_core and projection code only.
struct VerifyReport {
  std::size_t n = 0;
  std::size_t edges = 0;
  std::size_t s = 0;
  bool order_matches = false;
  bool regular = false;
  std::optional<std::size_t> diameter;  // nullopt when disconnected
  Girth girth = Girth::acyclic();
  std::optional<std::size_t> required_girth;
  CompactnessClass cls = compactness::TooSmall{};
  /// Depth-d projection of every vertex.
  std::vector<RootSummary> roots;
  bool pass = false;
  std::vector<std::string> failures;
};

std::ostream& operator<<(std::ostream& out, const VerifyReport& report);

/// pass iff g has spec.n vertices, is spec.s-regular, has diameter <= d,
/// girth >= effective girth, and every depth-d projection is vertex
/// complete.
VerifyReport verify_spec(const Graph& g, const CompactnessSpec& spec);

inline constexpr std::string_view kPetersenFixture = "petersen-10-3-2";
inline constexpr std::string_view kCageFixture = "cage-30-3-4";
inline constexpr std::string_view kCompactFixture = "compact-15-4-2";

std::vector<std::string_view> fixture_names();

/// The bracket projections the fixture is recorded as. Throws
/// UnknownFixture.
std::vector<Projection> fixture_projections(std::string_view name);

/// Union of the fixture projections' covered edges. The 15(4,2) fixture is
/// additionally checked for symmetric neighbour lists across its per-vertex
/// projections. Throws UnknownFixture, or Error if a fixture is internally
/// inconsistent.
Graph load_fixture(std::string_view name);

/// (n, s, d, g_min) the fixture was built for.
CompactnessSpec fixture_spec(std::string_view name);

inline constexpr std::size_t kExhaustiveMaxOrder = 14;
inline constexpr std::size_t kExhaustiveMaxDegree = 4;
inline constexpr std::uint64_t kExhaustiveNodeBudget = 200'000'000;

/// Brute-force search over edge sets: true iff some s-regular graph on n
/// vertices has girth >= g_min and, when d_max is given, is connected with
/// diameter <= d_max. Throws BudgetExceeded when n > 14, s > 4, or the
/// search visits more than `node_budget` partial graphs.
bool exhaustive_exists(std::size_t n, std::size_t s, std::optional<std::size_t> d_max = std::nullopt,
                       std::optional<std::size_t> g_min = std::nullopt,
                       std::uint64_t node_budget = kExhaustiveNodeBudget);

}  // namespace compactgraph
