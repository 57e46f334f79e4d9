// Copyright 2026 The compactgraph Authors
// SPDX-License-Identifier: Apache-2.0
//
// Prints one PASS/FAIL line per acceptance criterion and exits nonzero when
// any of criteria 1 to 8 fails. Criterion 9 is reported only.

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "compactgraph/bracket.hpp"
#include "compactgraph/compactness.hpp"
#include "compactgraph/error.hpp"
#include "compactgraph/graph_io.hpp"
#include "compactgraph/isomorphism.hpp"
#include "compactgraph/metrics.hpp"
#include "compactgraph/oracle.hpp"
#include "compactgraph/projection.hpp"
#include "compactgraph/solver.hpp"
#include "oracles.hpp"

#ifndef COMPACTGRAPH_FIXTURE_DIR
#error "COMPACTGRAPH_FIXTURE_DIR must be defined"
#endif

namespace cg = compactgraph;
namespace ts = testing_support;
using cg::Graph;
using cg::Vertex;
using Clock = std::chrono::steady_clock;

namespace {

struct Checker {
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string str(const cg::BigInt& v) { return v.str(); }

std::string count_at(const std::vector<cg::BigInt>& m, std::size_t i) {
  return i < m.size() ? str(m[i]) : std::string("missing");
}

bool graph_shape(const Graph& g, std::size_t n, std::size_t s, std::size_t d, std::size_t girth,
                 Checker& c) {
  c.expect(g.order() == n, "order " + std::to_string(g.order()));
  c.expect(cg::is_regular(g, s), "not " + std::to_string(s) + "-regular");
  const bool connected = cg::is_connected(g);
  c.expect(connected, "disconnected");
  if (connected) {
    const std::size_t diam = cg::diameter(g);
    c.expect(diam == d, "diameter " + std::to_string(diam));
  }
  if (girth != 0) {
    auto gi = cg::girth(g);
    c.expect(gi == cg::Girth::of(girth), "girth mismatch");
  }
  return c.failures.empty();
}

int report(int id, const std::string& title, const Checker& c, const std::string& detail) {
  std::cout << (c.failures.empty() ? "PASS" : "FAIL") << " criterion " << id << ": " << title;
  if (!detail.empty()) std::cout << " [" << detail << ']';
  for (const auto& f : c.failures) std::cout << "; " << f;
  std::cout << '\n';
  return c.failures.empty() ? 0 : 1;
}

int petersen(cg::SolveResult& out) {
  Checker c;
  auto start = Clock::now();
  out = cg::solve(cg::CompactnessSpec::make(10, 3, 2));
  const double secs = seconds_since(start);
  c.expect(out.status == cg::SolveStatus::Solved, "not solved");
  if (out.graph) {
    graph_shape(*out.graph, 10, 3, 2, 5, c);
    c.expect(cg::is_isomorphic(*out.graph, cg::load_fixture(cg::kPetersenFixture)),
             "not isomorphic to fixture");
  }
  c.expect(out.stats.commits <= 6, "commits " + std::to_string(out.stats.commits) + " > 6");
  c.expect(out.stats.backtracks == 0, "backtracks " + std::to_string(out.stats.backtracks));
  c.expect(secs < 1.0, "runtime " + std::to_string(secs) + " s");
  std::ostringstream detail;
  detail << "commits=" << out.stats.commits << " backtracks=" << out.stats.backtracks
         << " seconds=" << secs;
  return report(1, "Petersen reproduction", c, detail.str());
}

int petersen_counts(const cg::SolveResult& r) {
  Checker c;
  // C0, C0.1, C0.2, C1, C2 from the run.
  const auto m = r.trace.milestones();
  const std::vector<int> want = {210, 20, 14, 9, 8};
  const char* names[] = {"C0", "C0.1", "C0.2", "C1", "C2"};
  std::ostringstream detail;
  for (std::size_t i = 0; i < want.size(); ++i) {
    const std::string got = count_at(m, i);
    detail << (i ? " " : "") << names[i] << '=' << got;
    c.expect(i < m.size() && m[i] == want[i],
             std::string(names[i]) + " expected " + std::to_string(want[i]) + " got " + got);
  }
  return report(2, "(10,3,2) combination-count trajectory", c, detail.str());
}

int cage() {
  Checker c;
  auto start = Clock::now();
  auto r = cg::solve(cg::CompactnessSpec::make(30, 3, 4, 8));
  const double secs = seconds_since(start);
  c.expect(r.status == cg::SolveStatus::Solved, "not solved");
  if (r.graph) {
    graph_shape(*r.graph, 30, 3, 4, 8, c);
    c.expect(r.graph->size() == 45, "edges " + std::to_string(r.graph->size()));
    c.expect(cg::is_isomorphic(*r.graph, cg::load_fixture(cg::kCageFixture)),
             "not isomorphic to fixture");
  }
  c.expect(r.trace.c0 == 27405, "C0 expected 27405 got " + str(r.trace.c0));
  c.expect(r.trace.seed_count == 1140, "C0.1 expected 1140 got " + str(r.trace.seed_count));
  c.expect(secs < 30.0, "runtime " + std::to_string(secs) + " s");
  std::ostringstream detail;
  detail << "C0=" << r.trace.c0 << " C0.1=" << r.trace.seed_count << " seconds=" << secs;
  return report(3, "(3,8)-cage reproduction", c, detail.str());
}

int seeded() {
  Checker c;
  Graph seed = cg::read_graph_file(std::string(COMPACTGRAPH_FIXTURE_DIR) + "/seed-15-4-2.edges");
  auto start = Clock::now();
  auto r = cg::solve(cg::CompactnessSpec::make(15, 4, 2), seed);
  const double secs = seconds_since(start);
  c.expect(r.status == cg::SolveStatus::Solved, "not solved");
  if (r.graph) {
    graph_shape(*r.graph, 15, 4, 2, 0, c);
    c.expect(cg::is_isomorphic(*r.graph, cg::load_fixture(cg::kCompactFixture)),
             "not isomorphic to fixture");
  }
  c.expect(r.trace.c0 == 3003, "C0 expected 3003 got " + str(r.trace.c0));
  c.expect(r.trace.seed_count == 170, "C0.1 expected 170 got " + str(r.trace.seed_count));
  c.expect(secs < 10.0, "runtime " + std::to_string(secs) + " s");
  std::ostringstream detail;
  detail << "C0=" << r.trace.c0 << " C0.1=" << r.trace.seed_count << " seconds=" << secs;
  return report(4, "seeded (15,4,2) synthesis", c, detail.str());
}

int infeasible() {
  Checker c;
  auto start = Clock::now();
  auto r = cg::solve(cg::CompactnessSpec::make(10, 3, 2, 6));
  const bool exists = cg::exhaustive_exists(10, 3, std::nullopt, 6);
  const double secs = seconds_since(start);
  c.expect(r.status == cg::SolveStatus::Infeasible, "solver did not report infeasible");
  c.expect(!exists, "exhaustive search found a graph");
  c.expect(secs < 60.0, "runtime " + std::to_string(secs) + " s");
  return report(5, "(10,3,2,g>=6) infeasibility", c, "seconds=" + std::to_string(secs));
}

int projection_oracles() {
  Checker c;
  std::mt19937_64 rng(2026);
  std::size_t graphs = 0;
  std::size_t mismatches = 0;
  while (graphs < 240) {
    const std::size_t n = 2 + graphs % 19;
    const double p = 0.08 + 0.04 * static_cast<double>(graphs % 9);
    Graph g = ts::random_connected_graph(rng, n, p);
    ++graphs;
    if (!(cg::girth_via_projections(g) == cg::girth(g))) ++mismatches;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (cg::eccentricity_via_projection(g, v) != cg::eccentricity(g, v)) ++mismatches;
    }
  }
  c.expect(graphs >= 200, "only " + std::to_string(graphs) + " graphs");
  c.expect(mismatches == 0, std::to_string(mismatches) + " mismatches");
  return report(6, "projection oracle equivalence", c,
                "graphs=" + std::to_string(graphs) + " mismatches=" + std::to_string(mismatches));
}

int parser_round_trip() {
  Checker c;
  std::size_t fixtures = 0;
  std::size_t failures = 0;
  for (auto name : cg::fixture_names()) {
    for (const auto& p : cg::fixture_projections(name)) {
      ++fixtures;
      if (!(cg::parse_bracket(cg::to_bracket(p)) == p)) ++failures;
    }
  }
  std::mt19937_64 rng(7);
  std::size_t fuzzed = 0;
  for (int i = 0; i < 1200; ++i) {
    auto p = ts::random_projection(rng, 1 + i % 60, static_cast<Vertex>(3 + i % 40));
    ++fuzzed;
    const std::string text = cg::to_bracket(p);
    try {
      auto q = cg::parse_bracket(text);
      if (!(q == p) || cg::to_bracket(q) != text) ++failures;
    } catch (const cg::Error&) {
      ++failures;
    }
  }
  c.expect(failures == 0, std::to_string(failures) + " round-trip failures");
  c.expect(fuzzed >= 1000, "only " + std::to_string(fuzzed) + " fuzzed cases");
  auto p0 = cg::parse_bracket("0(1(3(2,7),5(4,7)),2(3(1,7),6(4,7)),4(5(1,7),6(2,7)))");
  auto p5 = cg::parse_bracket("5(1(0,3),4(0,6),7(3,6))");
  c.expect(cg::graph_from_projections(std::vector{p0, p5}, 8) == ts::cube3(),
           "cube projections do not rebuild the 3-cube");
  return report(7, "parser round-trip", c,
                "fixtures=" + std::to_string(fixtures) + " fuzzed=" + std::to_string(fuzzed));
}

int moore_arithmetic() {
  Checker c;
  const std::tuple<std::uint64_t, std::uint64_t, std::uint64_t> values[] = {
      {3, 2, 10}, {3, 3, 22}, {3, 4, 46}, {4, 2, 17}};
  for (auto [s, d, want] : values) {
    const auto got = cg::moore_bound(s, d);
    c.expect(got == want, "M(" + std::to_string(s) + "," + std::to_string(d) + ")=" +
                              std::to_string(got));
  }
  using namespace cg::compactness;
  std::size_t checked = 0;
  for (std::uint64_t s = 3; s <= 6; ++s) {
    for (std::uint64_t d = 1; d <= 4; ++d) {
      const std::uint64_t lower = ts::moore_closed_form(s, d - 1);
      const std::uint64_t upper = ts::moore_closed_form(s, d);
      const std::string at = " at s=" + std::to_string(s) + " d=" + std::to_string(d);
      c.expect(std::holds_alternative<TooSmall>(cg::classify_compactness(lower, s, d)),
               "lower edge" + at);
      auto first = cg::classify_compactness(lower + 1, s, d);
      c.expect(std::holds_alternative<Compact>(first) &&
                   std::get<Compact>(first).replicas == upper - lower - 1,
               "first compact" + at);
      auto last = cg::classify_compactness(upper - 1, s, d);
      c.expect(std::holds_alternative<Compact>(last) && std::get<Compact>(last).replicas == 1,
               "last compact" + at);
      c.expect(std::holds_alternative<LimitCompact>(cg::classify_compactness(upper, s, d)),
               "limit" + at);
      c.expect(std::holds_alternative<Impossible>(cg::classify_compactness(upper + 1, s, d)),
               "beyond" + at);
      ++checked;
    }
  }
  return report(8, "Moore bound and compactness arithmetic", c,
                "pairs=" + std::to_string(checked));
}

void step_economy() {
  std::cout << "REPORT criterion 9: step economy";
  struct Run {
    const char* name;
    cg::CompactnessSpec spec;
    std::optional<Graph> seed;
  };
  const Run runs[] = {
      {"10(3,2)", cg::CompactnessSpec::make(10, 3, 2), std::nullopt},
      {"30(3,4) g>=8", cg::CompactnessSpec::make(30, 3, 4, 8), std::nullopt},
      {"15(4,2) seeded", cg::CompactnessSpec::make(15, 4, 2),
       cg::read_graph_file(std::string(COMPACTGRAPH_FIXTURE_DIR) + "/seed-15-4-2.edges")},
  };
  for (const auto& run : runs) {
    auto r = cg::solve(run.spec, run.seed);
    std::cout << "; " << run.name << ": steps=" << r.stats.commits
              << " missing=" << r.stats.missing_edges
              << (r.stats.commits <= r.stats.missing_edges ? " (steps <= missing)"
                                                           : " (steps > missing)");
  }
  std::cout << '\n';
}

}  // namespace

int main() {
  int failed = 0;
  cg::SolveResult petersen_run;
  failed += petersen(petersen_run);
  failed += petersen_counts(petersen_run);
  failed += cage();
  failed += seeded();
  failed += infeasible();
  failed += projection_oracles();
  failed += parser_round_trip();
  failed += moore_arithmetic();
  step_economy();
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << '\n';
  return failed == 0 ? 0 : 1;
}
