// Copyright 2026 The compactgraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "compactgraph/projection.hpp"

namespace compactgraph {

/// Compact form, e.g. `0(1(4,5),2(6,7),3(8,9))`: children ascending, no
/// whitespace.
std::string to_bracket(const Projection& p);

/// One occurrence per line, indented two spaces per level, replicas
/// suffixed with `*`.
std::string to_outline(const Projection& p);

/// Grammar: proj := id group? ; group := '(' proj (',' proj)* ')'.
/// Whitespace between tokens is ignored. Children are re-sorted, so any
/// input order is accepted. Throws ParseError / DuplicateChild with the
/// byte offset of the offending token.
Projection parse_bracket(std::string_view text);

/// A `.proj` document: one bracket expression per non-blank line, `#`
/// starts a comment running to end of line. Offsets in errors are relative
/// to the whole document.
std::vector<Projection> read_proj(std::string_view text);

}  // namespace compactgraph
