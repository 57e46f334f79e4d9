// Copyright 2026 The compactgraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "compactgraph/graph.hpp"

namespace compactgraph {

inline constexpr std::size_t kMaxIsomorphismOrder = 64;

/// Returns `m` with g1.has_edge(u,v) == g2.has_edge(m[u],m[v]) for all u,v,
/// or nullopt. Throws SizeLimitExceeded when either graph has more than
/// kMaxIsomorphismOrder vertices.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g1, const Graph& g2);

bool is_isomorphic(const Graph& g1, const Graph& g2);

}  // namespace compactgraph
