// Copyright 2026 The compactgraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace compactgraph {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An edge list violates the simple-graph invariants (loop, duplicate, id >= n).
class InvalidGraph : public Error {
 public:
  using Error::Error;
};

class DisconnectedGraph : public Error {
 public:
  DisconnectedGraph() : Error("graph is disconnected") {}
};

class SizeLimitExceeded : public Error {
 public:
  SizeLimitExceeded(std::size_t n, std::size_t limit)
      : Error("graph order " + std::to_string(n) + " exceeds supported limit " +
              std::to_string(limit)) {}
};

/// Malformed text input. `offset` is the byte offset into the parsed text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A bracket group lists the same vertex twice under one parent.
class DuplicateChild : public ParseError {
 public:
  DuplicateChild(std::size_t vertex, std::size_t offset)
      : ParseError("duplicate child " + std::to_string(vertex), offset), vertex_(vertex) {}

  std::size_t vertex() const noexcept { return vertex_; }

 private:
  std::size_t vertex_;
};

class SeedDegreeExceeded : public Error {
 public:
  using Error::Error;
};

class SeedDisconnected : public Error {
 public:
  SeedDisconnected() : Error("seed graph must be a connected spanning subgraph") {}
};

/// (n, s, d) is not synthesizable: a smaller diameter suffices or n exceeds
/// the Moore bound.
class SpecRejected : public Error {
 public:
  using Error::Error;
};

class UnknownFixture : public Error {
 public:
  explicit UnknownFixture(const std::string& name) : Error("unknown fixture '" + name + "'") {}
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace compactgraph
