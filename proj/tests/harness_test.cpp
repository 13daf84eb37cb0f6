#include "gdom/harness.hpp"
#include "gdom/report_json.hpp"

#include <gtest/gtest.h>

namespace {

using gdom::CheckParams;
using gdom::InequalityId;
using gdom::Rational;
using gdom::Verdict;
using gdom::VertexSet;
namespace graphs = gdom::graphs;

VertexSet set(std::vector<gdom::Vertex> v) { return VertexSet(std::move(v)); }

TEST(Check, SpanningTreeOnCompleteGraphs) {
  const auto r = gdom::check(InequalityId::spanning_tree, graphs::complete(4), graphs::complete(3));
  EXPECT_EQ(r.verdict, Verdict::holds);
  EXPECT_EQ(*r.lhs->exact, 16);
  EXPECT_EQ(r.lhs->root, 4U);
  EXPECT_EQ(*r.rhs->exact, 3);
  EXPECT_EQ(r.rhs->root, 3U);
  EXPECT_TRUE(r.theorem_applies);
}

TEST(Check, KoteljanskiiStepOnPathReportsRawValues) {
  CheckParams p;
  p.set_a = set({0, 1});
  p.set_b = set({1, 2});
  const auto r = gdom::check(InequalityId::koteljanskii_step, graphs::path(3), std::nullopt, p);
  EXPECT_EQ(r.verdict, Verdict::hypothesis_failed);
  ASSERT_TRUE(r.raw_verdict);
  EXPECT_EQ(*r.raw_verdict, Verdict::violated);
  EXPECT_EQ(*r.lhs->exact, 1);
  EXPECT_EQ(*r.rhs->exact, 2);
}

TEST(Check, KoteljanskiiNeedsSets) {
  EXPECT_THROW(gdom::check(InequalityId::koteljanskii_step, graphs::path(3), std::nullopt), gdom::Error);
}

TEST(Check, IndependentSetsStarVersusEdge) {
  CheckParams p;
  p.family = "independent_sets";
  const auto r = gdom::check(InequalityId::vertex_counting, graphs::star(4), graphs::edge(), p);
  EXPECT_EQ(r.verdict, Verdict::violated);
  EXPECT_EQ(*r.lhs->exact, 17);
  EXPECT_EQ(*r.rhs->exact, 3);
  EXPECT_FALSE(r.theorem_applies);
  EXPECT_EQ(r.status, gdom::Status::known_false_under_domination);
  const auto eq = gdom::check(InequalityId::vertex_counting, graphs::star(3), graphs::edge(), p);
  EXPECT_EQ(eq.verdict, Verdict::holds_with_equality);
}

TEST(Check, MatchingsLowerStarVersusEdge) {
  const auto r = gdom::check(InequalityId::matchings_lower, graphs::star(4), graphs::edge());
  EXPECT_EQ(r.verdict, Verdict::violated);
  EXPECT_EQ(*r.lhs->exact, 5);
  EXPECT_EQ(*r.rhs->exact, 2);
  EXPECT_EQ(gdom::check(InequalityId::matchings_lower, graphs::star(3), graphs::edge()).verdict,
            Verdict::holds_with_equality);
}

TEST(Check, FracTilingTreeNeedsTiling) {
  const auto r = gdom::check(InequalityId::frac_tiling_tree, graphs::path(3), graphs::edge());
  EXPECT_EQ(r.verdict, Verdict::hypothesis_failed);
}

TEST(Check, HeatTraceEqualityAndStrictness) {
  const auto self = gdom::check(InequalityId::heat_trace_frac, graphs::cycle(5), graphs::cycle(5));
  EXPECT_EQ(self.verdict, Verdict::holds_with_equality);
  for (const auto& p : self.grid) EXPECT_EQ(p.verdict, Verdict::holds_with_equality);
  const auto k = gdom::check(InequalityId::heat_trace_frac, graphs::complete(4), graphs::complete(3));
  EXPECT_EQ(k.verdict, Verdict::holds);
  ASSERT_EQ(k.grid.size(), 13U);
  for (const auto& p : k.grid) EXPECT_EQ(p.verdict, Verdict::holds);
}

TEST(Check, SpectralNeedsDecreasingConvexFunctional) {
  CheckParams p;
  p.functionals = {gdom::FunctionalSpec::make(gdom::FunctionalFamily::shifted_log, 1)};
  EXPECT_THROW(gdom::check(InequalityId::spectral_decreasing_convex, graphs::complete(4), graphs::complete(3), p),
               gdom::Error);
}

TEST(Check, OperatorMonotoneDirections) {
  CheckParams p;
  const auto log = gdom::check(InequalityId::op_monotone, graphs::complete(4), graphs::complete(3), p);
  EXPECT_EQ(log.direction, gdom::Direction::at_least);
  EXPECT_EQ(log.verdict, Verdict::holds);
  p.monotone_family = gdom::FunctionalFamily::shifted_inverse;
  const auto inv = gdom::check(InequalityId::op_monotone, graphs::complete(4), graphs::complete(3), p);
  EXPECT_EQ(inv.direction, gdom::Direction::at_most);
  EXPECT_EQ(inv.verdict, Verdict::holds);
}

TEST(Check, CharPolyIsExact) {
  const auto r = gdom::check(InequalityId::char_poly, graphs::star(4), graphs::edge());
  EXPECT_EQ(r.verdict, Verdict::holds);
  for (const auto& p : r.grid) EXPECT_TRUE(p.lhs.exact.has_value());
}

TEST(Check, EdgeCountingNeedsEdges) {
  CheckParams p;
  p.family = "forests";
  EXPECT_EQ(gdom::check(InequalityId::edge_counting, graphs::cycle(4), graphs::single_vertex(), p).verdict,
            Verdict::hypothesis_failed);
  EXPECT_EQ(gdom::check(InequalityId::edge_counting, graphs::complete(4), graphs::complete(3), p).verdict, Verdict::holds);
}

TEST(Check, CoverProductWithExplicitCover) {
  CheckParams p;
  p.cover = std::vector<VertexSet>{set({0, 1}), set({1, 2}), set({2, 3}), set({3, 0})};
  const auto r = gdom::check(InequalityId::cover_product, graphs::cycle(4), std::nullopt, p);
  EXPECT_TRUE(r.hypothesis_holds);
  EXPECT_EQ(r.verdict, Verdict::holds);
  p.cover = std::vector<VertexSet>{set({0, 1}), set({1, 2})};
  EXPECT_EQ(gdom::check(InequalityId::cover_product, graphs::cycle(4), std::nullopt, p).verdict, Verdict::hypothesis_failed);
}

TEST(Check, WeightedCoverFromTiling) {
  const auto r = gdom::check(InequalityId::weighted_cover_heat, graphs::cycle(6), graphs::edge());
  EXPECT_TRUE(r.hypothesis_holds);
  EXPECT_EQ(r.verdict, Verdict::holds);
}

TEST(Check, TutteIdsOnTreeH) {
  const auto p = gdom::check(InequalityId::tutte_pointwise, graphs::cycle(5), graphs::path(3));
  EXPECT_TRUE(p.theorem_applies);
  EXPECT_EQ(p.verdict, Verdict::holds);
  const auto c = gdom::check(InequalityId::tutte_coefficients, graphs::complete(4), graphs::complete(3));
  EXPECT_NE(c.verdict, Verdict::violated);
  CheckParams tight;
  tight.coefficient_term_cap = 10;
  EXPECT_THROW(gdom::check(InequalityId::tutte_coefficients, graphs::complete(4), graphs::complete(3), tight), gdom::Error);
}

TEST(Check, TransitiveGStrictCase) {
  const auto r = gdom::check(InequalityId::transitive_G, graphs::cycle(6), graphs::path(3));
  EXPECT_TRUE(r.theorem_applies);
  EXPECT_EQ(r.verdict, Verdict::holds);
  const auto same = gdom::check(InequalityId::transitive_G, graphs::cycle(6), graphs::cycle(6));
  EXPECT_EQ(same.verdict, Verdict::holds_with_equality);
}

TEST(Check, UnknownIdsAreRejected) { EXPECT_THROW(gdom::parse_inequality_id("nonsense"), gdom::Error); }

TEST(Check, ReportSerializesToJson) {
  const auto r = gdom::check(InequalityId::spanning_tree, graphs::complete(4), graphs::complete(3));
  const auto j = gdom::report_to_json(r);
  EXPECT_EQ(j["verdict"], "holds");
  EXPECT_EQ(j["lhs"]["exact"], "16");
  EXPECT_EQ(j["certificate"]["type"], "domination");
  const auto cert = gdom::certificate_from_json(j["certificate"]);
  EXPECT_TRUE(gdom::verify_certificate(graphs::complete(4), graphs::complete(3), cert));
}

TEST(Shearer, Examples) {
  using Law = std::map<gdom::JointDistribution::Outcome, Rational>;
  const Rational q = gdom::make_rational(1, 4);
  const gdom::JointDistribution independent(2, Law{{{0, 0}, q}, {{0, 1}, q}, {{1, 0}, q}, {{1, 1}, q}});
  EXPECT_EQ(gdom::check_shearer(independent, {{0}, {1}}, 1).verdict, Verdict::holds_with_equality);
  const Rational h = gdom::make_rational(1, 2);
  const gdom::JointDistribution correlated(2, Law{{{0, 0}, h}, {{1, 1}, h}});
  EXPECT_EQ(gdom::check_shearer(correlated, {{0}, {1}}, 1).verdict, Verdict::holds);
  try {
    gdom::check_shearer(correlated, {{0, 1}, {0}, {1}}, 1);
    FAIL();
  } catch (const gdom::Error& e) {
    EXPECT_EQ(e.kind(), gdom::ErrorKind::cover_not_regular);
  }
}

TEST(Generators, Examples) {
  for (auto s : {gdom::PairStrategy::overlay_copies, gdom::PairStrategy::transitive_catalog,
                 gdom::PairStrategy::random_connected_pair}) {
    gdom::PairGenerator gen;
    gen.strategy = s;
    gen.seed = 42;
    for (std::uint64_t t = 0; t < 20; ++t) {
      const auto a = gdom::generate_pair(gen, t);
      const auto b = gdom::generate_pair(gen, t);
      EXPECT_EQ(a.g.edges(), b.g.edges());
      EXPECT_EQ(a.h.edges(), b.h.edges());
      EXPECT_TRUE(gdom::verify_certificate(a.g, a.h, a.certificate));
      EXPECT_TRUE(gdom::has_copy(a.g, a.h));
      if (s == gdom::PairStrategy::transitive_catalog) EXPECT_TRUE(gdom::is_transitive(a.g));
    }
  }
}

TEST(Generators, OverlayOfTrianglesIsCoveredByTriangles) {
  gdom::SplitMix64 rng(1);
  const auto g = gdom::detail::overlay_copies(rng, graphs::complete(3), 7);
  EXPECT_TRUE(gdom::covers_every_vertex(g, graphs::complete(3)));
  EXPECT_TRUE(gdom::check_domination(g, graphs::complete(3)).has_value());
}

TEST(Hunt, TreeProductHasNoViolations) {
  gdom::PairGenerator gen;
  gen.strategy = gdom::PairStrategy::random_connected_pair;
  const auto r = gdom::hunt(InequalityId::tree_product, gen, 200);
  EXPECT_TRUE(r.violations.empty());
  EXPECT_EQ(r.errors, 0U);
}

TEST(Hunt, FindsStarTypeIndependentSetViolations) {
  gdom::PairGenerator gen;
  gen.strategy = gdom::PairStrategy::random_connected_pair;
  gen.seed = 1;
  gen.max_n = 7;
  const auto r = gdom::hunt(InequalityId::vertex_counting, gen, 300);
  ASSERT_FALSE(r.violations.empty());
  for (const auto& f : r.violations) {
    EXPECT_EQ(f.report.verdict, Verdict::violated);
    EXPECT_FALSE(f.report.theorem_applies);
  }
}

TEST(Hunt, ResultDoesNotDependOnThreadCount) {
  gdom::PairGenerator gen;
  gen.strategy = gdom::PairStrategy::overlay_copies;
  gen.seed = 3;
  const auto one = gdom::hunt(InequalityId::vertex_counting, gen, 150, {}, 1);
  const auto many = gdom::hunt(InequalityId::vertex_counting, gen, 150, {}, 4);
  EXPECT_EQ(gdom::hunt_summary_to_json(one), gdom::hunt_summary_to_json(many));
}

}  // namespace
