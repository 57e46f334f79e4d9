// Copyright 2026 The compactgraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace compactgraph::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,       // bad flags, unreadable or malformed input
  kNegative = 2,    // verification failed, graphs not isomorphic
  kInfeasible = 3,
  kTimeout = 4,
};

/// Runs one command line. `args[0]` is the program name. Results go to
/// `out`, diagnostics (and `--trace` without a file) to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace compactgraph::cli
