// Copyright 2026 The compactgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "compactgraph/bracket.hpp"

#include <cctype>
#include <charconv>
#include <set>
#include <string>

#include "compactgraph/error.hpp"

namespace compactgraph {
namespace {

void print(const Projection& p, OccurrenceId id, std::string& out) {
  const Occurrence& occ = p.at(id);
  out += std::to_string(occ.vertex);
  if (occ.child_count == 0) return;
  out += '(';
  for (std::size_t k = 0; k < occ.child_count; ++k) {
    if (k != 0) out += ',';
    print(p, occ.first_child + k, out);
  }
  out += ')';
}

void outline(const Projection& p, OccurrenceId id, std::string& out) {
  const Occurrence& occ = p.at(id);
  out.append(2 * occ.level, ' ');
  out += std::to_string(occ.vertex);
  if (occ.is_replica) out += '*';
  out += '\n';
  for (std::size_t k = 0; k < occ.child_count; ++k) outline(p, occ.first_child + k, out);
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Projection parse() {
    enum class State { Id, AfterItem };
    State state = State::Id;
    while (true) {
      skip_space();
      if (state == State::Id) {
        read_node();
        skip_space();
        if (peek() == '(') {
          open_.push_back(Group{nodes_.size() - 1, {}});
          ++pos_;
          state = State::Id;
        } else {
          state = State::AfterItem;
        }
        continue;
      }
      if (open_.empty()) break;
      char c = peek();
      if (c == ',') {
        ++pos_;
        state = State::Id;
      } else if (c == ')') {
        ++pos_;
        open_.pop_back();
      } else {
        fail(pos_ == text_.size() ? "unterminated group" : "expected ',' or ')'");
      }
    }
    if (pos_ != text_.size()) fail("unexpected trailing text");
    return Projection::from_tree(nodes_);
  }

 private:
  struct Group {
    std::size_t node;
    std::set<Vertex> children;
  };

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void read_node() {
    const std::size_t start = pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected vertex id");
    Vertex v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
    if (ec != std::errc()) fail("vertex id out of range");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    std::size_t parent = kNoOccurrence;
    if (!open_.empty()) {
      Group& g = open_.back();
      if (!g.children.insert(v).second) throw DuplicateChild(v, start);
      parent = g.node;
    }
    nodes_.push_back(Projection::RawNode{v, parent});
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<Projection::RawNode> nodes_;
  std::vector<Group> open_;
};

}  // namespace

std::string to_bracket(const Projection& p) {
  std::string out;
  print(p, 0, out);
  return out;
}

std::string to_outline(const Projection& p) {
  std::string out;
  outline(p, 0, out);
  return out;
}

Projection parse_bracket(std::string_view text) { return Parser(text).parse(); }

std::vector<Projection> read_proj(std::string_view text) {
  std::vector<Projection> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    bool blank = true;
    for (char c : line) blank = blank && is_space(c);
    if (!blank) {
      try {
        out.push_back(parse_bracket(line));
      } catch (const DuplicateChild& e) {
        throw DuplicateChild(e.vertex(), pos + e.offset());
      } catch (const ParseError& e) {
        throw ParseError("malformed projection", pos + e.offset());
      }
    }
    pos = end + 1;
  }
  return out;
}

}  // namespace compactgraph
