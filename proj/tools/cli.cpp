// Copyright 2026 The compactgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>

#include "compactgraph/bracket.hpp"
#include "compactgraph/compactness.hpp"
#include "compactgraph/error.hpp"
#include "compactgraph/graph_io.hpp"
#include "compactgraph/isomorphism.hpp"
#include "compactgraph/metrics.hpp"
#include "compactgraph/oracle.hpp"
#include "compactgraph/projection.hpp"
#include "compactgraph/solver.hpp"

namespace compactgraph::cli {
namespace {

struct SynthesizeArgs {
  std::size_t n = 0;
  std::size_t s = 0;
  std::size_t d = 0;
  std::optional<std::size_t> g;
  std::string seed_file;
  std::string out = "-";
  std::string format = "edges";
  std::string trace;
};

struct ProjectArgs {
  std::string in;
  Vertex root = 0;
  std::optional<std::size_t> depth;
  std::string format = "bracket";
};

struct VerifyArgs {
  std::string in;
  std::size_t n = 0;
  std::size_t s = 0;
  std::size_t d = 0;
  std::optional<std::size_t> g;
};

// Reads COMPACTGRAPH_BUDGET_MS. Throws CLI::ValidationError on junk.
std::optional<std::chrono::milliseconds> budget_from_env() {
  const char* raw = std::getenv("COMPACTGRAPH_BUDGET_MS");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  long long ms = std::strtoll(raw, &end, 10);
  if (*end != '\0' || ms < 0) {
    throw CLI::ValidationError("COMPACTGRAPH_BUDGET_MS", "expected a non-negative integer");
  }
  return std::chrono::milliseconds(ms);
}

void write_to(const std::string& path, std::ostream& fallback, const std::string& text) {
  if (path.empty() || path == "-") {
    fallback << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot write " + path);
  file << text;
  if (!file) throw Error("cannot write " + path);
}

int synthesize(const SynthesizeArgs& a, bool want_trace, std::ostream& out, std::ostream& err) {
  CompactnessSpec spec = CompactnessSpec::make(a.n, a.s, a.d, a.g);
  std::optional<Graph> seed;
  if (!a.seed_file.empty()) seed = read_graph_file(a.seed_file);
  SolveOptions options;
  if (auto budget = budget_from_env()) {
    options.deadline = std::chrono::steady_clock::now() + *budget;
  }
  SolveResult result = solve(spec, seed, options);
  if (want_trace) write_to(a.trace, err, to_string(result.trace));
  switch (result.status) {
    case SolveStatus::Solved:
      break;
    case SolveStatus::Infeasible:
      err << "infeasible\n";
      return kInfeasible;
    case SolveStatus::TimedOut:
      err << "timeout\n";
      return kTimeout;
  }
  const Graph& g = *result.graph;
  write_to(a.out, out, a.format == "dot" ? to_dot(g) : to_edge_list(g));
  return kOk;
}

int analyze(const std::string& in, std::ostream& out) {
  Graph g = read_graph_file(in);
  out << "n: " << g.order() << '\n';
  out << "m: " << g.size() << '\n';
  out << "degrees:";
  for (std::size_t deg : g.degree_sequence()) out << ' ' << deg;
  out << '\n';
  const bool connected = is_connected(g);
  std::optional<std::size_t> diam;
  if (connected) diam = diameter(g);
  out << "diameter: ";
  if (diam) {
    out << *diam;
  } else {
    out << "disconnected";
  }
  out << '\n';
  out << "girth: " << girth(g) << '\n';
  out << "class: ";
  const std::size_t s = g.order() == 0 ? 0 : g.degree(0);
  if (g.order() == 0 || !is_regular(g, s)) {
    out << "n/a (not regular)";
  } else if (s < 2 || !diam || *diam < 1) {
    out << "n/a (degree " << s << ')';
  } else {
    out << classify_compactness(g.order(), s, *diam) << " for (s=" << s << ", d=" << *diam << ')';
  }
  out << '\n';
  return kOk;
}

int project(const ProjectArgs& a, std::ostream& out) {
  Graph g = read_graph_file(a.in);
  if (a.root >= g.order()) {
    throw CLI::ValidationError("--root", "vertex " + std::to_string(a.root) + " not in graph");
  }
  std::size_t depth = a.depth ? *a.depth : eccentricity(g, a.root);
  Projection p = build_projection(g, a.root, depth);
  out << (a.format == "lines" ? to_outline(p) : to_bracket(p) + '\n');
  return kOk;
}

int verify(const VerifyArgs& a, std::ostream& out) {
  Graph g = read_graph_file(a.in);
  CompactnessSpec spec;
  try {
    spec = CompactnessSpec::make(a.n, a.s, a.d, a.g);
  } catch (const SpecRejected& e) {
    out << "failure: " << e.what() << "\nfail\n";
    return kNegative;
  }
  VerifyReport report = verify_spec(g, spec);
  out << report;
  return report.pass ? kOk : kNegative;
}

int iso(const std::string& in1, const std::string& in2, std::ostream& out) {
  Graph g1 = read_graph_file(in1);
  Graph g2 = read_graph_file(in2);
  if (is_isomorphic(g1, g2)) {
    out << "isomorphic\n";
    return kOk;
  }
  out << "not isomorphic\n";
  return kNegative;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Synthesize and check degree/diameter/girth constrained regular graphs",
               "compactgraph"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  SynthesizeArgs syn;
  auto* syn_cmd = app.add_subcommand("synthesize", "Search for an n-vertex s-regular graph");
  syn_cmd->add_option("--n", syn.n, "Vertex count")->required()->check(CLI::PositiveNumber);
  syn_cmd->add_option("--s", syn.s, "Degree")->required()->check(CLI::Range(2, 64));
  syn_cmd->add_option("--d", syn.d, "Diameter bound")->required()->check(CLI::PositiveNumber);
  syn_cmd->add_option("--g", syn.g, "Minimum girth")->check(CLI::Range(3, 1000));
  syn_cmd->add_option("--seed-file", syn.seed_file, "Seed graph (edge list or .proj)")
      ->check(CLI::ExistingFile);
  syn_cmd->add_option("--out", syn.out, "Output file, '-' for stdout");
  syn_cmd->add_option("--format", syn.format, "Output format")
      ->check(CLI::IsMember({"edges", "dot"}));
  auto* trace_opt =
      syn_cmd->add_option("--trace", syn.trace, "Write the search trace (to stderr without a file)")
          ->expected(0, 1);

  std::string analyze_in;
  auto* analyze_cmd = app.add_subcommand("analyze", "Report order, degrees, diameter and girth");
  analyze_cmd->add_option("in", analyze_in, "Graph file")->required()->check(CLI::ExistingFile);

  ProjectArgs proj;
  auto* project_cmd = app.add_subcommand("project", "Print the projection of a vertex");
  project_cmd->add_option("in", proj.in, "Graph file")->required()->check(CLI::ExistingFile);
  project_cmd->add_option("--root", proj.root, "Root vertex");
  project_cmd->add_option("--depth", proj.depth, "Levels (default: eccentricity of the root)");
  project_cmd->add_option("--format", proj.format, "Output format")
      ->check(CLI::IsMember({"bracket", "lines"}));

  VerifyArgs ver;
  auto* verify_cmd = app.add_subcommand("verify", "Check a graph against (n, s, d, g)");
  verify_cmd->add_option("in", ver.in, "Graph file")->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("--n", ver.n, "Vertex count")->required()->check(CLI::PositiveNumber);
  verify_cmd->add_option("--s", ver.s, "Degree")->required()->check(CLI::Range(2, 64));
  verify_cmd->add_option("--d", ver.d, "Diameter bound")->required()->check(CLI::PositiveNumber);
  verify_cmd->add_option("--g", ver.g, "Minimum girth")->check(CLI::Range(3, 1000));

  std::string iso_a;
  std::string iso_b;
  auto* iso_cmd = app.add_subcommand("iso", "Test two graphs for isomorphism");
  iso_cmd->add_option("in1", iso_a, "First graph file")->required()->check(CLI::ExistingFile);
  iso_cmd->add_option("in2", iso_b, "Second graph file")->required()->check(CLI::ExistingFile);

  std::vector<std::string> reversed;
  for (std::size_t i = args.size(); i > 1; --i) reversed.push_back(args[i - 1]);
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*syn_cmd) return synthesize(syn, trace_opt->count() > 0, out, err);
    if (*analyze_cmd) return analyze(analyze_in, out);
    if (*project_cmd) return project(proj, out);
    if (*verify_cmd) return verify(ver, out);
    if (*iso_cmd) return iso(iso_a, iso_b, out);
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace compactgraph::cli
