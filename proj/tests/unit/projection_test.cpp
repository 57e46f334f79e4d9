// Copyright 2026 The compactgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "compactgraph/bracket.hpp"
#include "compactgraph/compactness.hpp"
#include "compactgraph/error.hpp"
#include "compactgraph/graph_io.hpp"
#include "compactgraph/metrics.hpp"
#include "compactgraph/oracle.hpp"
#include "compactgraph/projection.hpp"
#include "oracles.hpp"

namespace cg = compactgraph;
namespace ts = testing_support;
using cg::Edge;
using cg::Graph;
using cg::OccurrenceId;
using cg::Vertex;

namespace {

constexpr const char* kCubeP0 = "0(1(3(2,7),5(4,7)),2(3(1,7),6(4,7)),4(5(1,7),6(2,7)))";
constexpr const char* kCubeP5 = "5(1(0,3),4(0,6),7(3,6))";

OccurrenceId find_by_route(const cg::Projection& p, const std::vector<Vertex>& want) {
  for (OccurrenceId i = 0; i < p.size(); ++i) {
    if (cg::route(p, i) == want) return i;
  }
  return cg::kNoOccurrence;
}

TEST(Build, CubeProjection) {
  EXPECT_EQ(cg::to_bracket(cg::build_projection(ts::cube3(), 0, 3)), kCubeP0);
}

TEST(Build, PetersenDepthTwoHasNoReplicas) {
  Graph p = cg::load_fixture(cg::kPetersenFixture);
  auto proj = cg::build_projection(p, 0, 2);
  EXPECT_EQ(cg::to_bracket(proj), "0(1(4,5),2(6,7),3(8,9))");
  EXPECT_EQ(proj.replica_count(), 0u);
  EXPECT_EQ(proj.depth(), 2u);
}

TEST(Build, DepthZeroIsRootOnly) {
  auto proj = cg::build_projection(ts::cube3(), 6, 0);
  EXPECT_EQ(proj.size(), 1u);
  EXPECT_EQ(cg::to_bracket(proj), "6");
  EXPECT_TRUE(cg::covered_edges(proj).empty());
}

TEST(Build, StopsWhenTreeIsExhausted) {
  auto proj = cg::build_projection(ts::path(3), 0, 10);
  EXPECT_EQ(cg::to_bracket(proj), "0(1(2))");
  EXPECT_EQ(proj.depth(), 2u);
}

TEST(Build, MarksFirstLevelOrderOccurrenceAsOriginal) {
  auto proj = cg::build_projection(cg::load_fixture(cg::kPetersenFixture), 0, 3);
  auto occs = proj.occurrences_of(6);
  ASSERT_GE(occs.size(), 2u);
  EXPECT_FALSE(proj.at(occs[0]).is_replica);
  EXPECT_EQ(proj.at(occs[0]).level, 2u);
  for (std::size_t k = 1; k < occs.size(); ++k) EXPECT_TRUE(proj.at(occs[k]).is_replica);
}

TEST(Bracket, ParsesCubeP5) {
  auto p = cg::parse_bracket(kCubeP5);
  ASSERT_EQ(p.children(0).size(), 3u);
  EXPECT_EQ(p.children(0)[0].vertex, 1u);
  EXPECT_EQ(p.children(0)[1].vertex, 4u);
  EXPECT_EQ(p.children(0)[2].vertex, 7u);
  EXPECT_EQ(p.depth(), 2u);
}

TEST(Bracket, RejectsEmptyGroup) {
  try {
    cg::parse_bracket("0()");
    FAIL();
  } catch (const cg::ParseError& e) {
    EXPECT_EQ(e.offset(), 2u);
  }
}

TEST(Bracket, RejectsMalformedInput) {
  for (const char* bad : {"", "(", "0(", "0(1", "0(1,)", "0,1", "0(1))", "x", "0(1)2", "0 1",
                          "0(1(2)3)", "99999999999"}) {
    EXPECT_THROW(cg::parse_bracket(bad), cg::ParseError) << bad;
  }
}

TEST(Bracket, DuplicateChildCarriesOffset) {
  try {
    cg::parse_bracket("0(1,2, 1)");
    FAIL();
  } catch (const cg::DuplicateChild& e) {
    EXPECT_EQ(e.offset(), 7u);
    EXPECT_EQ(e.vertex(), 1u);
  }
  // The same vertex under different parents is fine.
  EXPECT_NO_THROW(cg::parse_bracket("0(1(2),2(1))"));
}

TEST(Bracket, NormalisesChildOrderAndWhitespace) {
  auto p = cg::parse_bracket(" 7 ( 10 ,9,\n13 ) ");
  EXPECT_EQ(cg::to_bracket(p), "7(9,10,13)");
}

TEST(Bracket, ProjFileSkipsCommentsAndReportsDocumentOffsets) {
  auto list = cg::read_proj("# header\n\n0(1,2) # tail\n  \n3(4)\n");
  ASSERT_EQ(list.size(), 2u);
  EXPECT_EQ(cg::to_bracket(list[1]), "3(4)");
  try {
    cg::read_proj("0(1)\n0()\n");
    FAIL();
  } catch (const cg::ParseError& e) {
    EXPECT_EQ(e.offset(), 7u);
  }
}

TEST(Bracket, OutlineFormat) {
  auto p = cg::parse_bracket("0(1(0),2)");
  EXPECT_EQ(cg::to_outline(p), "0\n  1\n    0*\n  2\n");
}

TEST(Bracket, CubeStringsReconstructTheCube) {
  auto p0 = cg::parse_bracket(kCubeP0);
  EXPECT_EQ(cg::graph_from_projections(std::vector{p0}), ts::cube3());
  // P(5) at depth 2 only covers edges at distance <= 1 from 5's
  // neighbours; together with P(0) it still yields the cube.
  auto p5 = cg::parse_bracket(kCubeP5);
  Graph from_p5 = cg::graph_from_projections(std::vector{p5}, 8);
  for (const Edge& e : from_p5.edges()) EXPECT_TRUE(ts::cube3().has_edge(e.u, e.v));
  EXPECT_EQ(cg::graph_from_projections(std::vector{p0, p5}), ts::cube3());
}

TEST(VertexComplete, Examples) {
  Graph p = cg::load_fixture(cg::kPetersenFixture);
  for (Vertex v = 0; v < 10; ++v) EXPECT_TRUE(cg::is_vertex_complete(cg::build_projection(p, v, 2), 10));
  // Depth one holds the root and its neighbours: 4 of 10 by distance count.
  auto fw = ts::floyd_warshall(p);
  std::size_t within_one = std::count_if(fw[0].begin(), fw[0].end(), [](std::size_t d) { return d <= 1; });
  EXPECT_EQ(within_one, 4u);
  EXPECT_FALSE(cg::is_vertex_complete(cg::build_projection(p, 0, 1), 10));
  EXPECT_TRUE(cg::is_vertex_complete(cg::build_projection(Graph(1), 0, 0), 1));
}

TEST(CoveredEdges, CompactFixtureProjectionOfZero) {
  Graph g = cg::load_fixture(cg::kCompactFixture);
  auto full = cg::build_projection(g, 0, 3);
  EXPECT_EQ(cg::covered_edges(full).size(), 30u);
  EXPECT_EQ(cg::graph_from_projections(std::vector{full}), g);
  // Two levels of a 4-regular vertex reach 4 + 4*3 edges.
  EXPECT_EQ(cg::covered_edges(cg::build_projection(g, 0, 2)).size(), 15u);
}

TEST(CoveredEdges, PetersenFullProjection) {
  Graph g = cg::load_fixture(cg::kPetersenFixture);
  auto p = cg::build_projection(g, 0, 3);
  EXPECT_EQ(cg::covered_edges(p), g.edges());
  EXPECT_EQ(cg::covered_edges(p).size(), 15u);
}

TEST(IsFull, Examples) {
  Graph g = cg::load_fixture(cg::kPetersenFixture);
  EXPECT_TRUE(cg::is_full(cg::build_projection(g, 0, 3), g));
  auto shallow = cg::build_projection(g, 0, 2);
  EXPECT_FALSE(cg::is_full(shallow, g));
  auto covered = cg::covered_edges(shallow);
  EXPECT_EQ(std::find(covered.begin(), covered.end(), Edge(4, 6)), covered.end());
  Graph k2(2, {{0, 1}});
  EXPECT_TRUE(cg::is_full(cg::build_projection(k2, 0, 1), k2));
}

TEST(Route, CubeOccurrence) {
  auto p = cg::build_projection(ts::cube3(), 0, 3);
  OccurrenceId occ = find_by_route(p, {0, 1, 3, 7});
  ASSERT_NE(occ, cg::kNoOccurrence);
  EXPECT_EQ(p.at(occ).vertex, 7u);
  EXPECT_EQ(cg::inverse_route(p, occ), (std::vector<Vertex>{7, 3, 1, 0}));
  EXPECT_EQ(cg::route(p, 0), std::vector<Vertex>{0});
}

TEST(Route, InverseIsReversalAndLengthIsLevel) {
  auto p = cg::build_projection(cg::load_fixture(cg::kCageFixture), 5, 5);
  for (OccurrenceId i = 0; i < p.size(); ++i) {
    auto fwd = cg::route(p, i);
    auto back = cg::inverse_route(p, i);
    std::reverse(back.begin(), back.end());
    ASSERT_EQ(fwd, back);
    ASSERT_EQ(fwd.size(), p.at(i).level + 1);
  }
}

TEST(ReplicaCycles, PetersenSixClosesAPentagon) {
  auto p = cg::build_projection(cg::load_fixture(cg::kPetersenFixture), 0, 3);
  OccurrenceId original = find_by_route(p, {0, 2, 6});
  OccurrenceId replica = find_by_route(p, {0, 1, 4, 6});
  ASSERT_NE(original, cg::kNoOccurrence);
  ASSERT_NE(replica, cg::kNoOccurrence);
  EXPECT_FALSE(p.at(original).is_replica);
  EXPECT_TRUE(p.at(replica).is_replica);
  auto cycles = cg::replica_cycles(p);
  auto it = std::find(cycles.begin(), cycles.end(), cg::ReplicaCycle{6, original, replica, 5});
  EXPECT_NE(it, cycles.end());
  for (const auto& c : cycles) EXPECT_GE(c.length, 5u);
}

TEST(ReplicaCycles, TriangleAndReplicaFree) {
  auto tri = cg::build_projection(ts::complete(3), 0, 2);
  auto cycles = cg::replica_cycles(tri);
  ASSERT_FALSE(cycles.empty());
  EXPECT_EQ(cycles.front().length, 3u);
  EXPECT_EQ(ts::girth_by_edge_removal(ts::complete(3)), 3u);
  auto petersen2 = cg::build_projection(cg::load_fixture(cg::kPetersenFixture), 0, 2);
  EXPECT_TRUE(cg::replica_cycles(petersen2).empty());
}

TEST(ReplicaCycles, SkipsClosedWalksThatAreNotCycles) {
  // Deep triangle projections pair occurrences whose joined routes wind
  // around twice; those length-6 walks must not be reported.
  auto p = cg::build_projection(ts::complete(3), 0, 4);
  for (const auto& c : cg::replica_cycles(p)) EXPECT_EQ(c.length, 3u);
}

TEST(ProjectionMetrics, Girth) {
  EXPECT_EQ(cg::girth_via_projections(cg::load_fixture(cg::kPetersenFixture)), cg::Girth::of(5));
  EXPECT_EQ(cg::girth_via_projections(cg::load_fixture(cg::kCageFixture)), cg::Girth::of(8));
  EXPECT_TRUE(cg::girth_via_projections(ts::star(4)).is_acyclic());
  EXPECT_THROW(cg::girth_via_projections(Graph(3)), cg::DisconnectedGraph);
}

TEST(ProjectionMetrics, Eccentricity) {
  Graph p = cg::load_fixture(cg::kPetersenFixture);
  for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(cg::eccentricity_via_projection(p, v), 2u);
  EXPECT_EQ(cg::eccentricity_via_projection(ts::star(5), 0), 1u);
  EXPECT_EQ(cg::eccentricity_via_projection(cg::load_fixture(cg::kCageFixture), 0), 4u);
  EXPECT_THROW(cg::eccentricity_via_projection(Graph(2), 0), cg::DisconnectedGraph);
}

TEST(Fixtures, StoredProjectionsMatchRebuiltOnes) {
  for (auto name : cg::fixture_names()) {
    Graph g = cg::load_fixture(name);
    for (const auto& stored : cg::fixture_projections(name)) {
      auto rebuilt = cg::build_projection(g, stored.root(), stored.depth());
      EXPECT_EQ(cg::to_bracket(rebuilt), cg::to_bracket(stored)) << name;
    }
  }
}

TEST(Fixtures, FilesOnDiskMatchEmbeddedData) {
  struct Files {
    std::string_view name;
    const char* edges;
    const char* proj;
  };
  const Files files[] = {{cg::kPetersenFixture, "petersen.edges", "petersen.proj"},
                         {cg::kCageFixture, "cage-30-3-4.edges", "cage-30-3-4.proj"},
                         {cg::kCompactFixture, "compact-15-4-2.edges", "compact-15-4-2.proj"}};
  const std::string dir = COMPACTGRAPH_FIXTURE_DIR;
  for (const Files& f : files) {
    Graph expected = cg::load_fixture(f.name);
    EXPECT_EQ(cg::read_graph_file(dir + "/" + f.edges), expected) << f.edges;
    EXPECT_EQ(cg::read_graph_file(dir + "/" + f.proj), expected) << f.proj;
  }
}

}  // namespace
