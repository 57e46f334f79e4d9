// Copyright 2026 The compactgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "compactgraph/compactness.hpp"

#include <limits>
#include <stdexcept>

namespace compactgraph {
namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    throw std::overflow_error("moore bound overflows 64 bits");
  }
  return a * b;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (b > std::numeric_limits<std::uint64_t>::max() - a) {
    throw std::overflow_error("moore bound overflows 64 bits");
  }
  return a + b;
}

}  // namespace

std::uint64_t moore_bound(std::uint64_t s, std::uint64_t d) {
  if (s < 2) throw std::invalid_argument("moore_bound requires s >= 2");
  std::uint64_t total = 1;
  std::uint64_t level = s;  // vertices on level i: s * (s-1)^(i-1)
  for (std::uint64_t i = 1; i <= d; ++i) {
    total = checked_add(total, level);
    if (i < d) level = checked_mul(level, s - 1);
  }
  return total;
}

CompactnessClass classify_compactness(std::uint64_t n, std::uint64_t s, std::uint64_t d) {
  if (n < 1) throw std::invalid_argument("classify_compactness requires n >= 1");
  if (d < 1) throw std::invalid_argument("classify_compactness requires d >= 1");
  const std::uint64_t upper = moore_bound(s, d);
  const std::uint64_t lower = moore_bound(s, d - 1);
  if (n > upper) return compactness::Impossible{};
  if (n == upper) return compactness::LimitCompact{};
  if (n <= lower) return compactness::TooSmall{};
  return compactness::Compact{upper - n};
}

std::uint64_t replica_count(const CompactnessClass& cls) {
  if (const auto* c = std::get_if<compactness::Compact>(&cls)) return c->replicas;
  return 0;
}

std::ostream& operator<<(std::ostream& out, const CompactnessClass& cls) {
  struct Printer {
    std::ostream& out;
    void operator()(const compactness::TooSmall&) const { out << "too-small"; }
    void operator()(const compactness::Compact& c) const { out << "compact(c=" << c.replicas << ')'; }
    void operator()(const compactness::LimitCompact&) const { out << "limit-compact"; }
    void operator()(const compactness::Impossible&) const { out << "impossible"; }
  };
  std::visit(Printer{out}, cls);
  return out;
}

}  // namespace compactgraph
