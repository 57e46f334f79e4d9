// Copyright 2026 The compactgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "compactgraph/trace.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>

#include "compactgraph/error.hpp"

namespace compactgraph {

std::size_t SynthTrace::commits() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const auto& e) {
    return e.kind == TraceEntry::Kind::Commit;
  }));
}

std::size_t SynthTrace::backtracks() const { return entries.size() - commits(); }

std::vector<BigInt> SynthTrace::milestones() const {
  std::vector<BigInt> out{c0, seed_count};
  if (init_count) out.push_back(*init_count);
  for (const TraceEntry& e : entries) {
    if (e.kind == TraceEntry::Kind::Commit && e.count) out.push_back(*e.count);
  }
  return out;
}

namespace {

void write_edges(std::ostream& out, const std::vector<Edge>& edges, char prefix) {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i != 0) out << ',';
    if (prefix != '\0') out << prefix;
    out << edges[i].u << '-' << edges[i].v;
  }
}

void write_tail(std::ostream& out, const std::vector<Edge>& forced,
                const std::optional<BigInt>& count,
                const std::optional<Contradiction>& contradiction) {
  if (!forced.empty()) {
    out << " [forced: ";
    write_edges(out, forced, '\0');
    out << ']';
  }
  if (contradiction) {
    out << " contradiction " << *contradiction;
  } else if (count) {
    out << " C=" << *count;
  }
  out << '\n';
}

const char* outcome_word(SolveStatus s) {
  switch (s) {
    case SolveStatus::Solved:
      return "solved";
    case SolveStatus::Infeasible:
      return "infeasible";
    case SolveStatus::TimedOut:
      return "timeout";
  }
  return "infeasible";
}

// Cursor over one line. Offsets reported in errors are document offsets.
class Cursor {
 public:
  Cursor(std::string_view line, std::size_t base) : line_(line), base_(base) {}

  bool done() const { return pos_ == line_.size(); }
  bool accept(std::string_view token) {
    if (line_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }
  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }
  template <typename T>
  T number() {
    T value{};
    auto [ptr, ec] = std::from_chars(line_.data() + pos_, line_.data() + line_.size(), value);
    if (ec != std::errc() || ptr == line_.data() + pos_) fail("expected number");
    pos_ = static_cast<std::size_t>(ptr - line_.data());
    return value;
  }
  BigInt big() {
    std::size_t end = pos_;
    while (end < line_.size() && line_[end] >= '0' && line_[end] <= '9') ++end;
    if (end == pos_) fail("expected number");
    BigInt value(std::string(line_.substr(pos_, end - pos_)));
    pos_ = end;
    return value;
  }
  Edge edge() {
    Vertex u = number<Vertex>();
    expect("-");
    Vertex v = number<Vertex>();
    if (u == v) fail("edge endpoints must differ");
    return Edge(u, v);
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, base_ + pos_); }

 private:
  std::string_view line_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

std::vector<Edge> read_edge_list(Cursor& cur, bool prefixed) {
  std::vector<Edge> out;
  do {
    if (prefixed) cur.expect("-");
    out.push_back(cur.edge());
  } while (cur.accept(","));
  return out;
}

// Parses ` [forced: ...]` and then ` C=<int>` or ` contradiction ...`.
void read_tail(Cursor& cur, std::vector<Edge>& forced, std::optional<BigInt>& count,
               std::optional<Contradiction>& contradiction) {
  if (cur.accept(" [forced: ")) {
    forced = read_edge_list(cur, false);
    cur.expect("]");
  }
  if (cur.accept(" C=")) {
    count = cur.big();
  } else if (cur.accept(" contradiction ")) {
    Contradiction c;
    if (cur.accept("verify")) {
      c.rule = Rule::Verify;
    } else {
      cur.expect("R");
      int rule = cur.number<int>();
      if (rule < 1 || rule > 5) cur.fail("unknown rule");
      c.rule = static_cast<Rule>(rule);
      cur.expect(" row ");
      c.row = cur.number<Vertex>();
      if (cur.accept(" vertex ")) c.other = cur.number<Vertex>();
    }
    contradiction = c;
  } else {
    cur.fail("expected ' C=' or ' contradiction'");
  }
  if (!cur.done()) cur.fail("unexpected trailing text");
}

}  // namespace

void write_trace(std::ostream& out, const SynthTrace& trace) {
  out << "C0=" << trace.c0 << '\n';
  out << "step 0.1: seed C=" << trace.seed_count << '\n';
  out << "step 0.2:";
  write_tail(out, trace.init_forced, trace.init_count, trace.init_contradiction);
  for (const TraceEntry& e : trace.entries) {
    if (e.kind == TraceEntry::Kind::Commit) {
      out << "step " << e.step << ": +" << e.chosen.u << '-' << e.chosen.v;
    } else {
      out << "backtrack ";
      write_edges(out, e.removed, '-');
    }
    write_tail(out, e.forced, e.count, e.contradiction);
  }
  out << outcome_word(trace.outcome) << '\n';
}

std::string to_string(const SynthTrace& trace) {
  std::ostringstream out;
  write_trace(out, trace);
  return out.str();
}

SynthTrace parse_trace(std::string_view text) {
  std::vector<std::pair<std::string_view, std::size_t>> lines;
  for (std::size_t pos = 0; pos < text.size();) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) lines.emplace_back(line, pos);
    pos = end + 1;
  }
  if (lines.size() < 4) throw ParseError("trace is truncated", text.size());

  SynthTrace trace;
  {
    Cursor cur(lines[0].first, lines[0].second);
    cur.expect("C0=");
    trace.c0 = cur.big();
    if (!cur.done()) cur.fail("unexpected trailing text");
  }
  {
    Cursor cur(lines[1].first, lines[1].second);
    cur.expect("step 0.1: seed C=");
    trace.seed_count = cur.big();
    if (!cur.done()) cur.fail("unexpected trailing text");
  }
  {
    Cursor cur(lines[2].first, lines[2].second);
    cur.expect("step 0.2:");
    read_tail(cur, trace.init_forced, trace.init_count, trace.init_contradiction);
  }
  const auto& [last, last_offset] = lines.back();
  if (last == "solved") {
    trace.outcome = SolveStatus::Solved;
  } else if (last == "infeasible") {
    trace.outcome = SolveStatus::Infeasible;
  } else if (last == "timeout") {
    trace.outcome = SolveStatus::TimedOut;
  } else {
    throw ParseError("expected final outcome line", last_offset);
  }
  for (std::size_t i = 3; i + 1 < lines.size(); ++i) {
    Cursor cur(lines[i].first, lines[i].second);
    TraceEntry e;
    if (cur.accept("step ")) {
      e.kind = TraceEntry::Kind::Commit;
      e.step = cur.number<std::size_t>();
      cur.expect(": +");
      e.chosen = cur.edge();
    } else if (cur.accept("backtrack ")) {
      e.kind = TraceEntry::Kind::Backtrack;
      e.removed = read_edge_list(cur, true);
    } else {
      cur.fail("expected 'step' or 'backtrack'");
    }
    read_tail(cur, e.forced, e.count, e.contradiction);
    trace.entries.push_back(std::move(e));
  }
  return trace;
}

Graph replay(const Graph& seed, const SynthTrace& trace) {
  std::vector<std::vector<Edge>> frames(1, seed.edges());
  frames[0].insert(frames[0].end(), trace.init_forced.begin(), trace.init_forced.end());
  for (const TraceEntry& e : trace.entries) {
    if (e.kind == TraceEntry::Kind::Commit) {
      std::vector<Edge> frame{e.chosen};
      frame.insert(frame.end(), e.forced.begin(), e.forced.end());
      frames.push_back(std::move(frame));
    } else {
      if (frames.size() < 2) throw Error("trace backtracks past the seed");
      frames.pop_back();
      frames.back().insert(frames.back().end(), e.forced.begin(), e.forced.end());
    }
  }
  std::vector<Edge> edges;
  for (const auto& frame : frames) edges.insert(edges.end(), frame.begin(), frame.end());
  return Graph(seed.order(), edges);
}

}  // namespace compactgraph
