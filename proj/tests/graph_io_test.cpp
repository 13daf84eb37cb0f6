#include "gdom/graph_io.hpp"
#include "gdom/generators.hpp"
#include "gdom/symmetry.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace {

using gdom::GraphFormat;
namespace graphs = gdom::graphs;

TEST(EdgeList, ParsesPathAndParallelPair) {
  const auto p = gdom::parse_graph("3; 0 1; 1 2", GraphFormat::edge_list);
  EXPECT_TRUE(gdom::isomorphic(p, graphs::path(3)));
  const auto pp = gdom::parse_graph("2; 0 1; 0 1", GraphFormat::edge_list);
  EXPECT_EQ(pp.multiplicity(0, 1), 2U);
}

TEST(EdgeList, SerializesCanonically) {
  EXPECT_EQ(gdom::serialize_graph(graphs::path(3), GraphFormat::edge_list), "3; 0 1; 1 2");
}

TEST(EdgeList, ErrorsCarryKinds) {
  auto kind_of = [](const std::string& text) {
    try {
      gdom::parse_graph(text, GraphFormat::edge_list);
    } catch (const gdom::Error& e) {
      return e.kind();
    }
    return gdom::ErrorKind::invalid_argument;
  };
  EXPECT_EQ(kind_of("3; 0 1"), gdom::ErrorKind::disconnected);
  EXPECT_EQ(kind_of("2; 0 0; 0 1"), gdom::ErrorKind::loop_in_input);
  EXPECT_EQ(kind_of("2; 0 x"), gdom::ErrorKind::syntax);
}

TEST(Graph6, DecodesCompleteGraph) {
  const auto k4 = gdom::parse_graph("C~", GraphFormat::graph6);
  EXPECT_EQ(k4.size(), 4U);
  EXPECT_EQ(k4.edge_units(), 6U);
}

TEST(Graph6, EncodesTriangle) { EXPECT_EQ(gdom::serialize_graph(graphs::complete(3), GraphFormat::graph6), "Bw"); }

TEST(Graph6, RefusesMultigraphs) {
  EXPECT_THROW(gdom::serialize_graph(graphs::parallel_pair(2), GraphFormat::graph6), gdom::Error);
}

TEST(Graph6, AgreesWithReferenceDecoderOnSmallGraphs) {
  for (const auto& g : gdom::connected_graphs_up_to(5)) {
    const std::string code = gdom::serialize_graph(g, GraphFormat::graph6);
    std::size_t n = 0;
    const auto edges = oracle::graph6_edges(code, n);
    ASSERT_EQ(n, g.size());
    ASSERT_EQ(edges.size(), g.edge_units());
    for (const auto& [u, v] : edges) EXPECT_EQ(g.multiplicity(u, v), 1U);
    EXPECT_TRUE(gdom::isomorphic(gdom::parse_graph(code, GraphFormat::graph6), g));
  }
}

TEST(Json, RoundTripsWeightsAndMultiplicities) {
  const auto g = gdom::Multigraph::create(3, {gdom::Edge{0, 1, 2, gdom::make_rational(1, 3)}, gdom::Edge{1, 2, 1, 5}});
  const auto back = gdom::parse_graph(gdom::serialize_graph(g, GraphFormat::json), GraphFormat::json);
  EXPECT_EQ(back.edges(), g.edges());
}

TEST(Sniff, DetectsFormats) {
  EXPECT_EQ(gdom::sniff_graph_format("3; 0 1; 1 2"), GraphFormat::edge_list);
  EXPECT_EQ(gdom::sniff_graph_format("{\"n\": 1, \"edges\": []}"), GraphFormat::json);
  EXPECT_EQ(gdom::sniff_graph_format("Bw"), GraphFormat::graph6);
}

}  // namespace
