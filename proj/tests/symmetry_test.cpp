#include "gdom/graph_io.hpp"
#include "gdom/generators.hpp"
#include "gdom/symmetry.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace {

using gdom::Rational;
namespace graphs = gdom::graphs;

TEST(Automorphisms, Examples) {
  const auto k4 = gdom::automorphisms(graphs::complete(4));
  EXPECT_EQ(k4.order, 24);
  EXPECT_EQ(k4.orbits.size(), 1U);
  const auto p3 = gdom::automorphisms(graphs::path(3));
  EXPECT_EQ(p3.order, 2);
  ASSERT_EQ(p3.orbits.size(), 2U);
  EXPECT_EQ(gdom::automorphisms(graphs::single_vertex()).order, 1);
}

TEST(Automorphisms, MatchBruteForceOnSmallGraphs) {
  for (const auto& g : gdom::connected_graphs_up_to(6)) {
    const auto info = gdom::automorphisms(g);
    EXPECT_EQ(info.order, oracle::automorphism_count(g)) << gdom::serialize_graph(g, gdom::GraphFormat::edge_list);
    const auto rep = oracle::orbit_representatives(g);
    for (gdom::Vertex u = 0; u < g.size(); ++u) {
      for (gdom::Vertex v = 0; v < g.size(); ++v) {
        EXPECT_EQ(info.orbit_of[u] == info.orbit_of[v], rep[u] == rep[v]);
      }
    }
  }
}

TEST(Automorphisms, MultiplicitiesAndWeightsBreakSymmetry) {
  const auto g = gdom::Multigraph::create(3, {gdom::Edge{0, 1, 2, 1}, gdom::Edge{1, 2, 1, 1}});
  EXPECT_EQ(gdom::automorphisms(g).order, oracle::automorphism_count(g));
  const auto w = gdom::Multigraph::create(3, {gdom::Edge{0, 1, 1, 2}, gdom::Edge{1, 2, 1, 1}});
  EXPECT_EQ(gdom::automorphisms(w).order, 1);
}

TEST(Transitive, Examples) {
  EXPECT_TRUE(gdom::is_transitive(graphs::cycle(5)));
  EXPECT_FALSE(gdom::is_transitive(graphs::star(3)));
  EXPECT_TRUE(gdom::is_transitive(graphs::complete(4)));
  EXPECT_TRUE(gdom::is_transitive(graphs::hypercube(4)));
}

TEST(CanonicalCode, InvariantUnderRelabeling) {
  gdom::SplitMix64 rng(9);
  for (int i = 0; i < 200; ++i) {
    const auto g = gdom::random_connected_graph(rng, rng.between(1, 9));
    std::vector<gdom::Vertex> p(g.size());
    std::iota(p.begin(), p.end(), 0);
    rng.shuffle(p);
    EXPECT_EQ(gdom::canonical_code(g), gdom::canonical_code(gdom::relabel(g, p)));
  }
}

TEST(CanonicalCode, SeparatesNonIsomorphicGraphs) {
  const auto all = gdom::connected_graphs_up_to(6);
  std::set<gdom::CanonicalCode> codes;
  for (const auto& g : all) codes.insert(gdom::canonical_code(g));
  EXPECT_EQ(codes.size(), all.size());
  EXPECT_EQ(all.size(), 1U + 1U + 2U + 6U + 21U + 112U);
}

TEST(LocalStatistics, Examples) {
  const auto zero = gdom::local_statistics(graphs::star(3), 0);
  ASSERT_EQ(zero.size(), 1U);
  EXPECT_EQ(zero.begin()->second, 1);
  EXPECT_EQ(gdom::local_statistics(graphs::cycle(3), 1).size(), 1U);
  const auto p3 = gdom::local_statistics(graphs::path(3), 1);
  ASSERT_EQ(p3.size(), 2U);
  std::vector<Rational> probs;
  for (const auto& [code, p] : p3) probs.push_back(p);
  std::sort(probs.begin(), probs.end());
  EXPECT_EQ(probs[0], gdom::make_rational(1, 3));
  EXPECT_EQ(probs[1], gdom::make_rational(2, 3));
}

TEST(TvDistance, Examples) {
  const auto c3 = gdom::local_statistics(graphs::cycle(3), 1);
  const auto c4 = gdom::local_statistics(graphs::cycle(4), 1);
  EXPECT_EQ(gdom::tv_distance(c3, c4), 1);
  EXPECT_EQ(gdom::tv_distance(gdom::local_statistics(graphs::cycle(3), 0), gdom::local_statistics(graphs::star(4), 0)), 0);
}

}  // namespace
