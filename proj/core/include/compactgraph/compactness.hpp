// Copyright 2026 The compactgraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <ostream>
#include <variant>

namespace compactgraph {

/// 1 + s * sum_{i=1..d} (s-1)^(i-1). d = 0 yields 1.
/// Throws std::invalid_argument for s < 2 and std::overflow_error if the
/// result does not fit in 64 bits.
std::uint64_t moore_bound(std::uint64_t s, std::uint64_t d);

namespace compactness {
struct TooSmall {
  friend bool operator==(const TooSmall&, const TooSmall&) = default;
};
struct Compact {
  std::uint64_t replicas = 0;
  friend bool operator==(const Compact&, const Compact&) = default;
};
struct LimitCompact {
  friend bool operator==(const LimitCompact&, const LimitCompact&) = default;
};
struct Impossible {
  friend bool operator==(const Impossible&, const Impossible&) = default;
};
}  // namespace compactness

using CompactnessClass = std::variant<compactness::TooSmall, compactness::Compact,
                                      compactness::LimitCompact, compactness::Impossible>;

/// Requires n >= 1, s >= 2, d >= 1.
CompactnessClass classify_compactness(std::uint64_t n, std::uint64_t s, std::uint64_t d);

/// Replicas in a d-level projection: moore_bound(s, d) - n, or 0 when
/// the class is not Compact.
std::uint64_t replica_count(const CompactnessClass& cls);

std::ostream& operator<<(std::ostream& out, const CompactnessClass& cls);

}  // namespace compactgraph
