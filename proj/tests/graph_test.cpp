#include "gdom/graph.hpp"
#include "gdom/counting.hpp"
#include "gdom/symmetry.hpp"

#include <gtest/gtest.h>

namespace {

using gdom::Edge;
using gdom::Multigraph;
using gdom::Rational;
using gdom::VertexSet;
namespace graphs = gdom::graphs;

VertexSet set(std::vector<gdom::Vertex> v) { return VertexSet(std::move(v)); }

TEST(Multigraph, RejectsLoopsAndDisconnectedInput) {
  EXPECT_THROW(Multigraph::create(2, {Edge{0, 0, 1, 1}, Edge{0, 1, 1, 1}}), gdom::Error);
  try {
    Multigraph::create(3, {Edge{0, 1, 1, 1}});
    FAIL();
  } catch (const gdom::Error& e) {
    EXPECT_EQ(e.kind(), gdom::ErrorKind::disconnected);
  }
  EXPECT_THROW(Multigraph::create(2, {Edge{0, 1, 1, Rational(0)}}), gdom::Error);
}

TEST(Multigraph, MergesParallelBundles) {
  const auto g = Multigraph::create(2, {Edge{0, 1, 1, 1}, Edge{1, 0, 1, 1}});
  EXPECT_EQ(g.edge_units(), 2U);
  EXPECT_EQ(g.multiplicity(0, 1), 2U);
  EXPECT_FALSE(g.is_simple());
}

TEST(ContractVertices, PathEndsBecomeParallelPair) {
  const auto g = gdom::contract_vertices(graphs::path(3), set({0, 2}));
  EXPECT_EQ(g.size(), 2U);
  EXPECT_EQ(g.multiplicity(0, 1), 2U);
}

TEST(ContractVertices, SingletonIsIdentity) {
  const auto g = graphs::cycle(5);
  EXPECT_TRUE(gdom::isomorphic(gdom::contract_vertices(g, set({3})), g));
}

TEST(ContractVertices, TriangleEdgeBecomesDiscardedLoop) {
  gdom::SurgeryLog log;
  const auto g = gdom::contract_vertices(graphs::complete(3), set({0, 1}), &log);
  EXPECT_EQ(g.size(), 2U);
  EXPECT_EQ(g.multiplicity(0, 1), 2U);
  EXPECT_EQ(gdom::count_spanning_trees(g), 2);
}

TEST(ContractComplement, Examples) {
  EXPECT_TRUE(gdom::isomorphic(gdom::contract_complement(graphs::path(3), set({0, 1})), graphs::path(3)));
  EXPECT_TRUE(gdom::isomorphic(gdom::contract_complement(graphs::cycle(6), VertexSet::range(6)), graphs::cycle(6)));
  const auto k = gdom::contract_complement(graphs::complete(4), set({2}));
  EXPECT_EQ(k.size(), 2U);
  EXPECT_EQ(k.multiplicity(0, 1), 3U);
}

TEST(ContractSubgraphEdges, Examples) {
  gdom::Subgraph tri{set({0, 1, 2}), {Edge{0, 1, 1, 1}, Edge{0, 2, 1, 1}, Edge{1, 2, 1, 1}}};
  const auto k = gdom::contract_subgraph_edges(graphs::complete(4), tri);
  EXPECT_EQ(k.size(), 2U);
  EXPECT_EQ(k.multiplicity(0, 1), 3U);

  gdom::Subgraph lone{set({1}), {}};
  EXPECT_TRUE(gdom::isomorphic(gdom::contract_subgraph_edges(graphs::cycle(5), lone), graphs::cycle(5)));

  gdom::Subgraph middle{set({1, 2}), {Edge{1, 2, 1, 1}}};
  EXPECT_TRUE(gdom::isomorphic(gdom::contract_subgraph_edges(graphs::path(4), middle), graphs::path(3)));

  gdom::Subgraph bogus{set({0, 2}), {Edge{0, 2, 1, 1}}};
  EXPECT_THROW(gdom::contract_subgraph_edges(graphs::path(4), bogus), gdom::Error);
}

TEST(SubdivideEdge, Examples) {
  EXPECT_TRUE(gdom::isomorphic(gdom::subdivide_edge(graphs::edge(), 0), graphs::path(3)));
  EXPECT_EQ(gdom::count_spanning_trees(graphs::complete(3)), 3);
  EXPECT_EQ(gdom::count_spanning_trees(gdom::subdivide_edge(graphs::complete(3), 0)), 4);
}

TEST(Laplacian, Examples) {
  const auto e = gdom::laplacian(graphs::edge());
  EXPECT_EQ(e(0, 0), 1);
  EXPECT_EQ(e(0, 1), -1);
  const auto k3 = gdom::laplacian(graphs::complete(3));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(k3(i, j), i == j ? 2 : -1);
  }
  const auto pp = gdom::laplacian(graphs::parallel_pair(2));
  EXPECT_EQ(pp(0, 0), 2);
  EXPECT_EQ(pp(0, 1), -2);
}

TEST(Laplacian, WeightsEnterLinearly) {
  const auto g = Multigraph::create(2, {Edge{0, 1, 2, gdom::make_rational(3, 2)}});
  EXPECT_EQ(gdom::laplacian(g)(0, 0), 3);
}

TEST(CutEdge, Examples) {
  EXPECT_TRUE(gdom::has_cut_edge(graphs::path(3)));
  EXPECT_FALSE(gdom::has_cut_edge(graphs::cycle(4)));
  EXPECT_FALSE(gdom::has_cut_edge(graphs::parallel_pair(2)));
  EXPECT_TRUE(gdom::has_cut_edge(graphs::edge()));
}

TEST(Builders, Sizes) {
  EXPECT_EQ(graphs::hypercube(3).size(), 8U);
  EXPECT_EQ(graphs::hypercube(3).edge_units(), 12U);
  EXPECT_EQ(graphs::grid(4, 4).edge_units(), 24U);
  EXPECT_EQ(graphs::star(4).size(), 5U);
  EXPECT_EQ(graphs::circulant(8, {1, 4}).edge_units(), 12U);
}

}  // namespace
