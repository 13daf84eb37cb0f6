#include "gdom/generators.hpp"
#include "gdom/relations.hpp"

#include <gtest/gtest.h>

namespace {

using gdom::Decision;
namespace graphs = gdom::graphs;

TEST(Tiling, GridByFourCycles) {
  const auto r = gdom::check_tiling(graphs::grid(4, 4), graphs::cycle(4));
  ASSERT_EQ(r.decision, Decision::holds);
  EXPECT_EQ(r.certificate->copies.size(), 4U);
  EXPECT_TRUE(gdom::verify_certificate(graphs::grid(4, 4), graphs::cycle(4), *r.certificate));
}

TEST(Tiling, Examples) {
  EXPECT_EQ(gdom::check_tiling(graphs::complete(4), graphs::complete(3)).decision, Decision::fails);
  const auto self = gdom::check_tiling(graphs::cycle(6), graphs::cycle(6));
  ASSERT_EQ(self.decision, Decision::holds);
  EXPECT_EQ(self.certificate->copies.size(), 1U);
}

TEST(FractionalTiling, CompleteGraphByTriangles) {
  const auto r = gdom::check_fractional_tiling(graphs::complete(4), graphs::complete(3));
  ASSERT_EQ(r.decision, Decision::holds);
  EXPECT_EQ(r.certificate->coverage, 3);
  EXPECT_EQ(r.certificate->copies.size(), 4U);
  for (const auto& m : r.certificate->multiplicities) EXPECT_EQ(m, 1);
}

TEST(FractionalTiling, Examples) {
  EXPECT_EQ(gdom::check_fractional_tiling(graphs::path(3), graphs::edge()).decision, Decision::fails);
  const auto c5 = gdom::check_fractional_tiling(graphs::cycle(5), graphs::edge());
  ASSERT_EQ(c5.decision, Decision::holds);
  EXPECT_EQ(c5.certificate->coverage, 2);
  EXPECT_EQ(c5.certificate->copies.size(), 5U);
}

TEST(FractionalEdgeTiling, Examples) {
  const auto c6 = gdom::check_fractional_edge_tiling(graphs::cycle(6), graphs::path(3));
  ASSERT_EQ(c6.decision, Decision::holds);
  EXPECT_TRUE(gdom::verify_certificate(graphs::cycle(6), graphs::path(3), *c6.certificate));
  const auto k4 = gdom::check_fractional_edge_tiling(graphs::complete(4), graphs::complete(3));
  ASSERT_EQ(k4.decision, Decision::holds);
  EXPECT_EQ(k4.certificate->copies.size(), 4U);
  EXPECT_EQ(k4.certificate->coverage, 2);
  EXPECT_EQ(gdom::check_fractional_edge_tiling(graphs::path(3), graphs::complete(3)).decision, Decision::fails);
}

TEST(Domination, Examples) {
  const auto k4 = gdom::check_domination(graphs::complete(4), graphs::complete(3));
  ASSERT_TRUE(k4);
  EXPECT_TRUE(gdom::verify_certificate(graphs::complete(4), graphs::complete(3), *k4));
  const auto star = gdom::check_domination(graphs::star(4), graphs::edge());
  ASSERT_TRUE(star);
  EXPECT_TRUE(gdom::verify_certificate(graphs::star(4), graphs::edge(), *star));
  EXPECT_FALSE(gdom::check_domination(graphs::edge(), graphs::complete(3)));
}

TEST(VerifyCertificate, RejectsTamperedCertificates) {
  auto coupling = *gdom::check_domination(graphs::complete(4), graphs::complete(3));
  coupling.entries.front().mass += gdom::make_rational(1, 100);
  EXPECT_FALSE(gdom::verify_certificate(graphs::complete(4), graphs::complete(3), coupling));

  auto frac = *gdom::check_fractional_tiling(graphs::complete(4), graphs::complete(3)).certificate;
  frac.multiplicities.front() -= 1;
  EXPECT_FALSE(gdom::verify_certificate(graphs::complete(4), graphs::complete(3), frac));
}

TEST(HallCondition, Examples) {
  EXPECT_TRUE(gdom::domination_hall_condition(graphs::complete(4), graphs::complete(3)).first);
  const auto [ok, witness] = gdom::domination_hall_condition(graphs::cycle(4), graphs::complete(3));
  EXPECT_FALSE(ok);
  EXPECT_TRUE(witness.has_value());
}

TEST(Domination, FlowAgreesWithHallOnSmallPairs) {
  const auto hs = gdom::connected_graphs_up_to(4);
  const auto gs = gdom::connected_graphs_up_to(6);
  for (const auto& g : gs) {
    for (const auto& h : hs) {
      if (h.size() > g.size()) continue;
      const auto flow = gdom::check_domination(g, h);
      EXPECT_EQ(flow.has_value(), gdom::domination_hall_condition(g, h).first);
      if (flow) EXPECT_TRUE(gdom::verify_certificate(g, h, *flow));
    }
  }
}

TEST(Relations, HierarchyOnRandomPairs) {
  // tiling => fractional tiling => domination.
  gdom::SplitMix64 rng(4);
  const auto hs = gdom::connected_graphs_up_to(4);
  for (int i = 0; i < 300; ++i) {
    const auto g = gdom::random_connected_graph(rng, rng.between(2, 7), 1, 2);
    const auto& h = hs[rng.below(hs.size())];
    if (h.size() > g.size()) continue;
    const bool tiled = gdom::check_tiling(g, h).decision == Decision::holds;
    const auto frac = gdom::check_fractional_tiling(g, h);
    const bool dominated = gdom::check_domination(g, h).has_value();
    if (tiled) EXPECT_EQ(frac.decision, Decision::holds);
    if (frac.decision == Decision::holds) {
      EXPECT_TRUE(dominated);
      EXPECT_TRUE(gdom::verify_certificate(g, h, *frac.certificate));
    }
  }
}

}  // namespace
