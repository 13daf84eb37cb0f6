#pragma once

// Inequality checkers, Shearer's entropy inequality, and the counterexample
// hunt engine.

#include "gdom/counting.hpp"
#include "gdom/embedding.hpp"
#include "gdom/generators.hpp"
#include "gdom/graph.hpp"
#include "gdom/graph_io.hpp"
#include "gdom/numeric.hpp"
#include "gdom/relations.hpp"
#include "gdom/spectral.hpp"
#include "gdom/symmetry.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace gdom {

enum class InequalityId {
  spanning_tree,
  tree_product,
  minor_power,
  transitive_G,
  transitive_H,
  frac_tiling_tree,
  koteljanskii_step,
  cover_product,
  heat_trace_frac,
  heat_trace_dom,
  weighted_cover_heat,
  spectral_decreasing_convex,
  spectral_convex_transitive_h,
  op_monotone,
  char_poly,
  vertex_counting,
  edge_counting,
  matchings_lower,
  packing_lower,
  tutte_pointwise,
  tutte_coefficients,
};

enum class Status { proven, conjectured, known_false_under_domination };
enum class Direction { at_least, at_most };
enum class Verdict { holds, holds_with_equality, violated, hypothesis_failed, inconclusive };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::proven: return "proven";
    case Status::conjectured: return "conjectured";
    case Status::known_false_under_domination: return "known_false_under_domination";
  }
  return "?";
}

inline const char* to_string(Direction d) { return d == Direction::at_least ? ">=" : "<="; }

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::holds_with_equality: return "holds_with_equality";
    case Verdict::violated: return "violated";
    case Verdict::hypothesis_failed: return "hypothesis_failed";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

/// Static description of each checker.
struct InequalityInfo {
  InequalityId id;
  const char* name;
  /// Relation that must be certified before the comparison counts.
  const char* hypothesis;
  /// Setting in which a violation would contradict a proof.
  const char* theorem_regime;
  Status status;
  Direction direction;
  bool needs_h;
};

inline const std::vector<InequalityInfo>& inequality_table() {
  static const std::vector<InequalityInfo> table = {
      {InequalityId::spanning_tree, "spanning_tree", "domination",
       "fractional tiling, or G transitive, or H transitive", Status::conjectured, Direction::at_least, true},
      {InequalityId::tree_product, "tree_product", "subgraph", "subgraph", Status::proven, Direction::at_most, true},
      {InequalityId::minor_power, "minor_power", "G transitive and H a subgraph", "G transitive and H a subgraph",
       Status::proven, Direction::at_least, true},
      {InequalityId::transitive_G, "transitive_G", "G transitive and domination", "G transitive and domination",
       Status::proven, Direction::at_least, true},
      {InequalityId::transitive_H, "transitive_H", "H transitive and domination", "H transitive and domination",
       Status::proven, Direction::at_least, true},
      {InequalityId::frac_tiling_tree, "frac_tiling_tree", "fractional tiling", "fractional tiling", Status::proven,
       Direction::at_least, true},
      {InequalityId::koteljanskii_step, "koteljanskii_step", "A union B proper, or an edge between A-B and B-A",
       "A union B proper, or an edge between A-B and B-A", Status::proven, Direction::at_least, false},
      {InequalityId::cover_product, "cover_product", "regular cover", "regular cover", Status::proven,
       Direction::at_least, false},
      {InequalityId::heat_trace_frac, "heat_trace_frac", "fractional tiling", "fractional tiling", Status::proven,
       Direction::at_most, true},
      {InequalityId::heat_trace_dom, "heat_trace_dom", "domination", "fractional tiling", Status::conjectured,
       Direction::at_most, true},
      {InequalityId::weighted_cover_heat, "weighted_cover_heat", "regular weighted cover with weight-average bound",
       "regular weighted cover with weight-average bound", Status::proven, Direction::at_most, false},
      {InequalityId::spectral_decreasing_convex, "spectral_decreasing_convex", "domination", "fractional tiling",
       Status::known_false_under_domination, Direction::at_most, true},
      {InequalityId::spectral_convex_transitive_h, "spectral_convex_transitive_h", "domination and H transitive",
       "fractional tiling", Status::conjectured, Direction::at_most, true},
      {InequalityId::op_monotone, "op_monotone", "domination", "domination", Status::proven, Direction::at_least, true},
      {InequalityId::char_poly, "char_poly", "domination", "domination", Status::proven, Direction::at_least, true},
      {InequalityId::vertex_counting, "vertex_counting", "domination", "fractional tiling",
       Status::known_false_under_domination, Direction::at_most, true},
      {InequalityId::edge_counting, "edge_counting", "fractional edge-tiling", "fractional edge-tiling",
       Status::proven, Direction::at_most, true},
      {InequalityId::matchings_lower, "matchings_lower", "domination", "fractional tiling with H an edge",
       Status::known_false_under_domination, Direction::at_least, true},
      {InequalityId::packing_lower, "packing_lower", "domination",
       "fractional tiling of a simple G with H and K edges", Status::conjectured, Direction::at_least, true},
      {InequalityId::tutte_pointwise, "tutte_pointwise", "domination", "H a tree", Status::conjectured,
       Direction::at_least, true},
      {InequalityId::tutte_coefficients, "tutte_coefficients", "domination", "H a tree", Status::conjectured,
       Direction::at_least, true},
  };
  return table;
}

inline const InequalityInfo& info(InequalityId id) {
  for (const auto& row : inequality_table()) {
    if (row.id == id) return row;
  }
  throw Error(ErrorKind::unknown_id, "unknown inequality id");
}

inline const char* to_string(InequalityId id) { return info(id).name; }

inline InequalityId parse_inequality_id(std::string_view name) {
  for (const auto& row : inequality_table()) {
    if (name == row.name) return row.id;
  }
  throw Error(ErrorKind::unknown_id, "unknown inequality id: " + std::string(name));
}

/// Exact default grids: t in {2^k : -6 <= k <= 6}, (x, y) in {1, 3/2, 2, 3}^2.
inline std::vector<Rational> default_t_grid() {
  std::vector<Rational> grid;
  for (int k = -6; k <= 6; ++k) grid.push_back(k < 0 ? make_rational(1, ipow(BigInt(2), -k)) : Rational(ipow(BigInt(2), k)));
  return grid;
}

inline std::vector<std::pair<Rational, Rational>> default_xy_grid() {
  const std::vector<Rational> axis = {Rational(1), make_rational(3, 2), Rational(2), Rational(3)};
  std::vector<std::pair<Rational, Rational>> grid;
  for (const auto& x : axis) {
    for (const auto& y : axis) grid.emplace_back(x, y);
  }
  return grid;
}

struct CheckParams {
  std::vector<Rational> t_grid = default_t_grid();
  std::string t_grid_name = "2^k, -6<=k<=6";
  std::vector<std::pair<Rational, Rational>> xy_grid = default_xy_grid();
  std::string xy_grid_name = "{1,3/2,2,3}^2";
  /// Spectral ids; defaults to hinge(4).
  std::vector<FunctionalSpec> functionals;
  /// op_monotone: shifted_log or shifted_inverse.
  FunctionalFamily monotone_family = FunctionalFamily::shifted_log;
  /// vertex_counting: independent_sets | colorings | homomorphisms;
  /// edge_counting: acyclic_orientations | forests | matchings.
  std::string family;
  std::uint64_t colors = 3;
  std::optional<LoopedGraph> hom_target;
  WeightFunction hom_weights;
  /// packing_lower: the packed graph K (defaults to H).
  std::optional<Multigraph> packing_graph;
  std::optional<VertexSet> set_a;
  std::optional<VertexSet> set_b;
  std::optional<std::vector<VertexSet>> cover;
  /// tree_product / minor_power: explicit copy of H in G.
  std::optional<Subgraph> subgraph;
  /// weighted_cover_heat: weighted subgraphs of G.
  std::optional<std::vector<Subgraph>> weighted_cover;
  double error_budget = 1e-9;
  std::uint64_t tutte_bound = kDefaultTutteBound;
  std::size_t coefficient_term_cap = 4'000'000;
};

/// One side of a comparison: exact base with a root index, or a float with an error bound.
struct Quantity {
  std::string expression;
  std::optional<Rational> exact;
  std::uint64_t root = 1;
  double approx = 0;
  double error = 0;
};

struct GridPoint {
  std::string parameter;
  Quantity lhs;
  Quantity rhs;
  Verdict verdict = Verdict::holds;
};

struct CheckReport {
  InequalityId id = InequalityId::spanning_tree;
  std::string variant;
  std::string g;
  std::string h;
  std::string hypothesis;
  bool hypothesis_holds = false;
  std::optional<RelationCertificate> certificate;
  std::string theorem_regime;
  bool theorem_applies = false;
  Status status = Status::conjectured;
  Direction direction = Direction::at_least;
  std::optional<Quantity> lhs;
  std::optional<Quantity> rhs;
  std::string grid_name;
  std::vector<GridPoint> grid;
  Verdict verdict = Verdict::hypothesis_failed;
  /// Comparison outcome ignoring the hypothesis, when it could be computed.
  std::optional<Verdict> raw_verdict;
  std::string note;
};

inline constexpr std::size_t kFactsCopyLimit = 5000;

/// Relation facts about (G, H), computed on first use.
class PairFacts {
 public:
  PairFacts(Multigraph g, std::optional<Multigraph> h) : g_(std::move(g)), h_(std::move(h)) {}

  [[nodiscard]] const Multigraph& g() const { return g_; }
  [[nodiscard]] bool has_h() const { return h_.has_value(); }
  [[nodiscard]] const Multigraph& h() const {
    if (!h_) throw Error(ErrorKind::missing_params, "this inequality needs a second graph H");
    return *h_;
  }

  const std::optional<CouplingCertificate>& domination() {
    if (!domination_) domination_ = check_domination(g_, h());
    return *domination_;
  }
  /// LP decision over at most kFactsCopyLimit copies; inconclusive past the limit.
  const FractionalTilingResult& fractional_tiling() {
    if (!frac_) frac_ = check_fractional_tiling(g_, h(), RelationOptions{kFactsCopyLimit});
    return *frac_;
  }
  const FractionalTilingResult& fractional_edge_tiling() {
    if (!frac_edge_) frac_edge_ = check_fractional_edge_tiling(g_, h(), RelationOptions{kFactsCopyLimit});
    return *frac_edge_;
  }
  /// A transitive G containing H is fractionally tiled by the Aut(G)-orbit of
  /// one copy, so the LP is skipped there.
  bool fractionally_tiled() {
    if (g_transitive() && first_copy()) return true;
    return fractional_tiling().decision == Decision::holds;
  }
  bool g_transitive() {
    if (!g_transitive_) g_transitive_ = is_transitive(g_);
    return *g_transitive_;
  }
  bool h_transitive() {
    if (!h_transitive_) h_transitive_ = is_transitive(h());
    return *h_transitive_;
  }
  bool isomorphic_pair() {
    if (!iso_) iso_ = isomorphic(g_.unweighted(), h().unweighted()) && g_.is_unweighted() && h().is_unweighted();
    return *iso_;
  }
  const std::optional<Subgraph>& first_copy() {
    if (!copy_) {
      copy_ = std::optional<Subgraph>{};
      if (h().size() <= g_.size()) {
        for_each_embedding(g_, h(), [&](const Embedding& emb) {
          *copy_ = detail::trace_copy(h(), emb);
          return false;
        });
      }
    }
    return *copy_;
  }
  bool h_is_tree() { return h().edge_units() + 1 == h().size(); }
  bool h_is_edge() { return h().size() == 2 && h().edge_units() == 1; }

 private:
  Multigraph g_;
  std::optional<Multigraph> h_;
  std::optional<std::optional<CouplingCertificate>> domination_;
  std::optional<FractionalTilingResult> frac_;
  std::optional<FractionalTilingResult> frac_edge_;
  std::optional<bool> g_transitive_;
  std::optional<bool> h_transitive_;
  std::optional<bool> iso_;
  std::optional<std::optional<Subgraph>> copy_;
};

namespace detail {

inline double log_of(const BigInt& v) {
  if (v <= 0) return -INFINITY;
  const std::size_t bits = boost::multiprecision::msb(v);
  if (bits < 1000) return std::log(to_double(v));
  const std::size_t shift = bits - 900;
  return std::log(to_double(BigInt(v >> shift))) + static_cast<double>(shift) * std::log(2.0);
}

inline double log_of(const Rational& v) {
  return log_of(BigInt(boost::multiprecision::numerator(v))) - log_of(BigInt(boost::multiprecision::denominator(v)));
}

inline Quantity exact_quantity(std::string expression, const Rational& base, std::uint64_t root) {
  Quantity q;
  q.expression = std::move(expression);
  q.exact = base;
  q.root = root;
  q.approx = base == 0 ? 0.0 : std::exp(log_of(base) / static_cast<double>(root));
  return q;
}

inline Quantity float_quantity(std::string expression, double value, double error) {
  Quantity q;
  q.expression = std::move(expression);
  q.approx = value;
  q.error = error;
  return q;
}

inline Verdict verdict_from_sign(int cmp, Direction dir, bool strict) {
  if (cmp == 0) return strict ? Verdict::violated : Verdict::holds_with_equality;
  const bool good = dir == Direction::at_least ? cmp > 0 : cmp < 0;
  return good ? Verdict::holds : Verdict::violated;
}

inline Verdict compare_exact(const Quantity& lhs, const Quantity& rhs, Direction dir, bool strict) {
  return verdict_from_sign(compare_roots(*lhs.exact, lhs.root, *rhs.exact, rhs.root), dir, strict);
}

/// Differences inside the combined error bound are inconclusive, never violations.
inline Verdict compare_float(const Quantity& lhs, const Quantity& rhs, Direction dir, double budget) {
  const double diff = lhs.approx - rhs.approx;
  if (std::abs(diff) <= budget + lhs.error + rhs.error) return Verdict::inconclusive;
  return verdict_from_sign(diff > 0 ? 1 : -1, dir, false);
}

inline Verdict combine(const std::vector<GridPoint>& points) {
  bool inconclusive = false;
  bool all_equal = !points.empty();
  for (const auto& p : points) {
    if (p.verdict == Verdict::violated) return Verdict::violated;
    if (p.verdict == Verdict::inconclusive) inconclusive = true;
    if (p.verdict != Verdict::holds_with_equality) all_equal = false;
  }
  if (inconclusive) return Verdict::inconclusive;
  return all_equal ? Verdict::holds_with_equality : Verdict::holds;
}

/// Stores the raw verdict and demotes it when the hypothesis is not certified.
inline void settle(CheckReport& r, Verdict raw) {
  r.raw_verdict = raw;
  r.verdict = r.hypothesis_holds ? raw : Verdict::hypothesis_failed;
}

inline void settle_single(CheckReport& r, Quantity lhs, Quantity rhs, bool strict) {
  const Verdict raw = compare_exact(lhs, rhs, r.direction, strict);
  if (strict && raw == Verdict::violated && compare_roots(*lhs.exact, lhs.root, *rhs.exact, rhs.root) == 0) {
    r.note = "strict inequality expected but both sides are equal";
  }
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  settle(r, raw);
}

inline Multigraph subgraph_as_graph(const Subgraph& s) {
  std::vector<Vertex> idx(s.vertices.empty() ? 0 : s.vertices.items().back() + 1, 0);
  for (std::size_t i = 0; i < s.vertices.size(); ++i) idx[s.vertices[i]] = static_cast<Vertex>(i);
  std::vector<Edge> es;
  for (const auto& e : s.edges) es.push_back(Edge{idx[e.u], idx[e.v], e.multiplicity, e.weight});
  return Multigraph::create(s.vertices.size(), std::move(es));
}

inline BigInt tau_of_contraction(const Multigraph& g, const VertexSet& a) {
  return count_spanning_trees(contract_complement(g, a));
}

inline std::string describe_set(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

inline double functional_lipschitz(const FunctionalSpec& f) {
  const double p = to_double(f.parameter);
  switch (f.family) {
    case FunctionalFamily::exp_decay: return p;
    case FunctionalFamily::hinge: return 1.0;
    case FunctionalFamily::shifted_log: return 1.0 / p;
    case FunctionalFamily::shifted_inverse: return 1.0 / (p * p);
  }
  return 1.0;
}

// ---- individual checkers -------------------------------------------------

/// LP certificate when one was found; otherwise the transitive shortcut is noted.
inline void set_tiling_certificate(CheckReport& r, PairFacts& f) {
  if (f.g_transitive() && f.first_copy()) {
    r.certificate = *f.domination();
    r.note = "fractional tiling by the automorphism orbit of a copy in transitive G";
    return;
  }
  r.certificate = *f.fractional_tiling().certificate;
}

inline void check_tree_powers(CheckReport& r, PairFacts& f, bool strict) {
  const BigInt tg = count_spanning_trees(f.g());
  const BigInt th = count_spanning_trees(f.h());
  settle_single(r, exact_quantity("tau(G)^(1/|G|)", tg, f.g().size()), exact_quantity("tau(H)^(1/|H|)", th, f.h().size()),
                strict && r.hypothesis_holds);
}

inline void check_spanning_tree(CheckReport& r, PairFacts& f) {
  r.hypothesis_holds = f.domination().has_value();
  if (r.hypothesis_holds) {
    r.certificate = *f.domination();
    r.theorem_applies = f.fractionally_tiled() || f.g_transitive() || f.h_transitive();
  }
  check_tree_powers(r, f, false);
}

inline void check_transitive_g(CheckReport& r, PairFacts& f) {
  r.hypothesis_holds = f.g_transitive() && f.domination().has_value();
  if (f.domination()) r.certificate = *f.domination();
  r.theorem_applies = r.hypothesis_holds;
  const bool strict = !has_cut_edge(f.g()) && !f.isomorphic_pair();
  if (strict) r.note = "no cut-edge and G differs from H: strict inequality required";
  check_tree_powers(r, f, strict);
}

inline void check_transitive_h(CheckReport& r, PairFacts& f) {
  r.hypothesis_holds = f.h_transitive() && f.domination().has_value();
  if (f.domination()) r.certificate = *f.domination();
  r.theorem_applies = r.hypothesis_holds;
  check_tree_powers(r, f, false);
}

inline void check_frac_tiling_tree(CheckReport& r, PairFacts& f) {
  r.hypothesis_holds = f.fractionally_tiled();
  if (r.hypothesis_holds) set_tiling_certificate(r, f);
  r.theorem_applies = r.hypothesis_holds;
  check_tree_powers(r, f, false);
}

inline std::optional<Subgraph> chosen_copy(PairFacts& f, const CheckParams& p) {
  if (p.subgraph) {
    require_subgraph(f.g(), *p.subgraph);
    return p.subgraph;
  }
  return f.first_copy();
}

inline void check_tree_product(CheckReport& r, PairFacts& f, const CheckParams& p) {
  const auto copy = chosen_copy(f, p);
  r.hypothesis_holds = copy.has_value();
  r.theorem_applies = r.hypothesis_holds;
  if (!copy) {
    r.note = "H has no copy in G";
    r.verdict = Verdict::hypothesis_failed;
    return;
  }
  const Multigraph sub = subgraph_as_graph(*copy);
  const BigInt th = count_spanning_trees(sub);
  const BigInt tq = count_spanning_trees(contract_subgraph_edges(f.g(), *copy));
  const BigInt tg = count_spanning_trees(f.g());
  r.note = "copy on " + describe_set(copy->vertices);
  settle_single(r, exact_quantity("tau(H) tau(G//H)", th * tq, 1), exact_quantity("tau(G)", tg, 1), false);
}

inline void check_minor_power(CheckReport& r, PairFacts& f, const CheckParams& p) {
  const auto copy = chosen_copy(f, p);
  const bool transitive = f.g_transitive();
  r.hypothesis_holds = transitive && copy.has_value();
  r.theorem_applies = r.hypothesis_holds;
  if (!copy) {
    r.note = "H has no copy in G";
    r.verdict = Verdict::hypothesis_failed;
    return;
  }
  const std::size_t k = copy->vertices.size();
  const BigInt t_gh = tau_of_contraction(f.g(), copy->vertices);
  const BigInt tg = count_spanning_trees(f.g());
  const bool strict = r.hypothesis_holds && f.g().size() > k && k >= 1 && !has_cut_edge(f.g());
  r.note = "copy on " + describe_set(copy->vertices) + (strict ? "; strict case" : "");
  settle_single(r, exact_quantity("tau(G_H)^(1/|H|)", t_gh, k), exact_quantity("tau(G)^(1/|G|)", tg, f.g().size()), strict);
}

inline void check_koteljanskii(CheckReport& r, PairFacts& f, const CheckParams& p) {
  if (!p.set_a || !p.set_b) throw Error(ErrorKind::missing_params, "koteljanskii_step needs vertex sets A and B");
  const Multigraph& g = f.g();
  const VertexSet& a = *p.set_a;
  const VertexSet& b = *p.set_b;
  for (const VertexSet* s : {&a, &b}) {
    for (Vertex v : *s) {
      if (v >= g.size()) throw Error(ErrorKind::invalid_argument, "vertex set leaves the graph");
    }
  }
  const VertexSet uni = a.united(b);
  const VertexSet inter = a.intersected(b);
  bool crossing = false;
  const VertexSet a_only = a.minus(b);
  const VertexSet b_only = b.minus(a);
  for (const auto& e : g.edges()) {
    if ((a_only.contains(e.u) && b_only.contains(e.v)) || (a_only.contains(e.v) && b_only.contains(e.u))) crossing = true;
  }
  r.hypothesis_holds = uni.size() < g.size() || crossing;
  r.theorem_applies = r.hypothesis_holds;
  r.variant = "A=" + describe_set(a) + " B=" + describe_set(b);
  const BigInt lhs = tau_of_contraction(g, a) * tau_of_contraction(g, b);
  const BigInt rhs = tau_of_contraction(g, uni) * tau_of_contraction(g, inter);
  settle_single(r, exact_quantity("tau(G_A) tau(G_B)", lhs, 1), exact_quantity("tau(G_AuB) tau(G_AnB)", rhs, 1), false);
}

inline void check_cover_product(CheckReport& r, PairFacts& f, const CheckParams& p) {
  std::vector<std::pair<VertexSet, BigInt>> cover;
  if (p.cover) {
    for (const auto& s : *p.cover) cover.emplace_back(s, 1);
  } else if (f.has_h()) {
    const auto& frac = f.fractional_tiling();
    if (frac.certificate) {
      r.certificate = *frac.certificate;
      for (std::size_t i = 0; i < frac.certificate->copies.size(); ++i) {
        cover.emplace_back(frac.certificate->copies[i].vertices, frac.certificate->multiplicities[i]);
      }
    }
  } else {
    throw Error(ErrorKind::missing_params, "cover_product needs a cover or a graph H");
  }
  const Multigraph& g = f.g();
  std::vector<BigInt> hits(g.size(), BigInt(0));
  for (const auto& [s, mult] : cover) {
    for (Vertex v : s) {
      if (v >= g.size()) throw Error(ErrorKind::invalid_argument, "cover set leaves the graph");
      hits[v] += mult;
    }
  }
  const BigInt m = hits.empty() ? BigInt(0) : hits[0];
  r.hypothesis_holds = !cover.empty() && m > 0 && std::all_of(hits.begin(), hits.end(), [&](const BigInt& k) { return k == m; });
  r.theorem_applies = r.hypothesis_holds;
  if (cover.empty()) {
    r.note = "no cover available";
    r.verdict = Verdict::hypothesis_failed;
    return;
  }
  r.variant = "m=" + to_string(m);
  BigInt lhs = 1;
  for (const auto& [s, mult] : cover) lhs *= ipow(tau_of_contraction(g, s), mult.convert_to<std::uint64_t>());
  const BigInt rhs = ipow(count_spanning_trees(g), m.convert_to<std::uint64_t>());
  settle_single(r, exact_quantity("prod tau(G_Ai)", lhs, 1), exact_quantity("tau(G)^m", rhs, 1), false);
}

inline void check_heat_trace(CheckReport& r, PairFacts& f, const CheckParams& p, bool fractional) {
  if (fractional) {
    r.hypothesis_holds = f.fractionally_tiled();
    if (r.hypothesis_holds) set_tiling_certificate(r, f);
    r.theorem_applies = r.hypothesis_holds;
  } else {
    r.hypothesis_holds = f.domination().has_value();
    if (f.domination()) r.certificate = *f.domination();
    r.theorem_applies = r.hypothesis_holds && f.fractionally_tiled();
  }
  const bool iso = f.isomorphic_pair();
  const Spectrum sg = eigenvalues(f.g());
  const Spectrum sh = eigenvalues(f.h());
  r.grid_name = "t in " + p.t_grid_name;
  for (const auto& t : p.t_grid) {
    const double tv = to_double(t);
    GridPoint pt;
    pt.parameter = "t=" + to_string(t);
    pt.lhs = float_quantity("(1/|G|) sum p_t(x;G)", heat_trace(sg, tv), tv * sg.residual_bound);
    pt.rhs = float_quantity("(1/|H|) sum p_t(x;H)", heat_trace(sh, tv), tv * sh.residual_bound);
    pt.verdict = iso ? Verdict::holds_with_equality : compare_float(pt.lhs, pt.rhs, r.direction, p.error_budget);
    r.grid.push_back(std::move(pt));
  }
  r.note = iso ? "G is isomorphic to H: equality" : "G differs from H: strict inequality expected at every t";
  settle(r, combine(r.grid));
}

inline double subgraph_heat_trace_sum(const Subgraph& s, double t) {
  return static_cast<double>(s.vertices.size()) * heat_trace(subgraph_as_graph(s), t);
}

inline void check_weighted_cover_heat(CheckReport& r, PairFacts& f, const CheckParams& p) {
  std::vector<Subgraph> pieces;
  if (p.weighted_cover) {
    pieces = *p.weighted_cover;
  } else if (f.has_h()) {
    const auto& frac = f.fractional_tiling();
    if (frac.certificate) {
      r.certificate = *frac.certificate;
      for (std::size_t i = 0; i < frac.certificate->copies.size(); ++i) {
        for (BigInt k = 0; k < frac.certificate->multiplicities[i]; ++k) pieces.push_back(frac.certificate->copies[i]);
      }
    }
  } else {
    throw Error(ErrorKind::missing_params, "weighted_cover_heat needs a weighted cover or a graph H");
  }
  const Multigraph& g = f.g();
  if (pieces.empty()) {
    r.note = "no cover available";
    r.verdict = Verdict::hypothesis_failed;
    return;
  }
  std::vector<std::size_t> hits(g.size(), 0);
  std::map<std::pair<Vertex, Vertex>, Rational> used;
  for (const auto& s : pieces) {
    require_subgraph(g, s);
    for (Vertex v : s.vertices) ++hits[v];
    for (const auto& e : s.edges) used[{std::min(e.u, e.v), std::max(e.u, e.v)}] += e.weight * e.multiplicity;
  }
  const std::size_t m = hits[0];
  bool regular = m > 0 && std::all_of(hits.begin(), hits.end(), [&](std::size_t k) { return k == m; });
  bool bounded = true;
  if (regular) {
    std::map<std::pair<Vertex, Vertex>, Rational> have;
    for (const auto& e : g.edges()) have[{e.u, e.v}] += e.weight * e.multiplicity;
    for (const auto& [pair, total] : used) {
      if (have[pair] * static_cast<long>(m) < total) bounded = false;
    }
  }
  r.hypothesis_holds = regular && bounded;
  r.theorem_applies = r.hypothesis_holds;
  if (!regular) r.note = "cover is not regular";
  else if (!bounded) r.note = "weight-average bound fails on some edge";
  else r.note = "m=" + std::to_string(m) + ", " + std::to_string(pieces.size()) + " pieces";
  std::size_t total_size = 0;
  for (const auto& s : pieces) total_size += s.vertices.size();
  const Spectrum sg = eigenvalues(g);
  r.grid_name = "t in " + p.t_grid_name;
  for (const auto& t : p.t_grid) {
    const double tv = to_double(t);
    double rhs = 0;
    for (const auto& s : pieces) rhs += subgraph_heat_trace_sum(s, tv);
    rhs /= static_cast<double>(total_size);
    GridPoint pt;
    pt.parameter = "t=" + to_string(t);
    pt.lhs = float_quantity("(1/|G|) sum p_t(x;G)", heat_trace(sg, tv), tv * sg.residual_bound);
    pt.rhs = float_quantity("(1/sum|Hi|) sum_i sum p_t(x;Hi)", rhs, 1e-12);
    pt.verdict = compare_float(pt.lhs, pt.rhs, r.direction, p.error_budget);
    r.grid.push_back(std::move(pt));
  }
  settle(r, combine(r.grid));
}

inline std::vector<FunctionalSpec> spectral_functionals(const CheckParams& p) {
  std::vector<FunctionalSpec> fs = p.functionals;
  if (fs.empty()) fs.push_back(FunctionalSpec::make(FunctionalFamily::hinge, 4));
  for (const auto& f : fs) {
    if (!f.decreasing() || !f.convex()) {
      throw Error(ErrorKind::invalid_argument, f.describe() + " is not decreasing and convex");
    }
  }
  return fs;
}

inline void check_spectral_convex(CheckReport& r, PairFacts& f, const CheckParams& p, bool transitive_h) {
  r.hypothesis_holds = f.domination().has_value() && (!transitive_h || f.h_transitive());
  if (f.domination()) r.certificate = *f.domination();
  r.theorem_applies = r.hypothesis_holds && f.fractionally_tiled();
  const bool iso = f.isomorphic_pair();
  const Spectrum sg = eigenvalues(f.g());
  const Spectrum sh = eigenvalues(f.h());
  r.grid_name = "functionals";
  for (const auto& fn : spectral_functionals(p)) {
    const double lip = functional_lipschitz(fn);
    GridPoint pt;
    pt.parameter = fn.describe();
    pt.lhs = float_quantity("Tr f(L_G)", spectral_functional(sg, fn), lip * sg.residual_bound);
    pt.rhs = float_quantity("Tr f(L_H)", spectral_functional(sh, fn), lip * sh.residual_bound);
    pt.verdict = iso ? Verdict::holds_with_equality : compare_float(pt.lhs, pt.rhs, r.direction, p.error_budget);
    r.grid.push_back(std::move(pt));
  }
  settle(r, combine(r.grid));
}

inline void check_op_monotone(CheckReport& r, PairFacts& f, const CheckParams& p) {
  r.hypothesis_holds = f.domination().has_value();
  if (f.domination()) r.certificate = *f.domination();
  r.theorem_applies = r.hypothesis_holds;
  const FunctionalFamily fam = p.monotone_family;
  if (fam != FunctionalFamily::shifted_log && fam != FunctionalFamily::shifted_inverse) {
    throw Error(ErrorKind::invalid_argument, "op_monotone takes shifted_log or shifted_inverse");
  }
  // 1/(s+t) is operator monotone decreasing, so its trace inequality flips.
  r.direction = fam == FunctionalFamily::shifted_log ? Direction::at_least : Direction::at_most;
  r.variant = to_string(fam);
  const bool iso = f.isomorphic_pair();
  const Spectrum sg = eigenvalues(f.g());
  const Spectrum sh = eigenvalues(f.h());
  r.grid_name = "t in " + p.t_grid_name;
  for (const auto& t : p.t_grid) {
    const FunctionalSpec fn = FunctionalSpec::make(fam, t);
    const double lip = functional_lipschitz(fn);
    GridPoint pt;
    pt.parameter = "t=" + to_string(t);
    pt.lhs = float_quantity("Tr f(L_G + t)", spectral_functional(sg, fn), lip * sg.residual_bound);
    pt.rhs = float_quantity("Tr f(L_H + t)", spectral_functional(sh, fn), lip * sh.residual_bound);
    pt.verdict = iso ? Verdict::holds_with_equality : compare_float(pt.lhs, pt.rhs, r.direction, p.error_budget);
    r.grid.push_back(std::move(pt));
  }
  settle(r, combine(r.grid));
}

inline void check_char_poly(CheckReport& r, PairFacts& f, const CheckParams& p) {
  r.hypothesis_holds = f.domination().has_value();
  if (f.domination()) r.certificate = *f.domination();
  r.theorem_applies = r.hypothesis_holds;
  r.grid_name = "t in " + p.t_grid_name;
  for (const auto& t : p.t_grid) {
    GridPoint pt;
    pt.parameter = "t=" + to_string(t);
    pt.lhs = exact_quantity("det(L_G + tI)^(1/|G|)", shifted_determinant(f.g(), t), f.g().size());
    pt.rhs = exact_quantity("det(L_H + tI)^(1/|H|)", shifted_determinant(f.h(), t), f.h().size());
    pt.verdict = compare_exact(pt.lhs, pt.rhs, r.direction, false);
    r.grid.push_back(std::move(pt));
  }
  settle(r, combine(r.grid));
}

inline Rational vertex_family_count(const Multigraph& g, const CheckParams& p, const std::string& family) {
  if (family == "independent_sets") return Rational(count_independent_sets(g));
  if (family == "colorings") return Rational(count_proper_colorings(g, p.colors));
  if (family == "homomorphisms") {
    if (p.hom_target) return count_weighted_homomorphisms(g, *p.hom_target, p.hom_weights);
    // Default target: an edge with a loop at vertex 0, weights 1 and 2.
    LoopedGraph target(2);
    target.add_edge(0, 0);
    target.add_edge(0, 1);
    return count_weighted_homomorphisms(g, target, {Rational(1), Rational(2)});
  }
  throw Error(ErrorKind::invalid_argument, "unknown vertex_counting family: " + family);
}

inline void check_vertex_counting(CheckReport& r, PairFacts& f, const CheckParams& p) {
  const std::string family = p.family.empty() ? "independent_sets" : p.family;
  r.variant = family == "colorings" ? family + "(q=" + std::to_string(p.colors) + ")" : family;
  r.hypothesis_holds = f.domination().has_value();
  if (f.domination()) r.certificate = *f.domination();
  r.theorem_applies = r.hypothesis_holds && f.fractionally_tiled();
  settle_single(r, exact_quantity("f(G)^(1/|G|)", vertex_family_count(f.g(), p, family), f.g().size()),
                exact_quantity("f(H)^(1/|H|)", vertex_family_count(f.h(), p, family), f.h().size()), false);
}

inline BigInt edge_family_count(const Multigraph& g, const CheckParams& p, const std::string& family) {
  if (family == "acyclic_orientations") return count_acyclic_orientations(g, p.tutte_bound);
  if (family == "forests") return count_forests(g, p.tutte_bound);
  if (family == "matchings") return count_matchings(g);
  throw Error(ErrorKind::invalid_argument, "unknown edge_counting family: " + family);
}

inline void check_edge_counting(CheckReport& r, PairFacts& f, const CheckParams& p) {
  const std::string family = p.family.empty() ? "matchings" : p.family;
  r.variant = family;
  if (f.h().edge_units() == 0 || f.g().edge_units() == 0) {
    r.hypothesis_holds = false;
    r.note = "edge-normalized comparison needs edges in both graphs";
    r.verdict = Verdict::hypothesis_failed;
    return;
  }
  const auto& frac = f.fractional_edge_tiling();
  r.hypothesis_holds = frac.decision == Decision::holds;
  if (frac.certificate) r.certificate = *frac.certificate;
  r.theorem_applies = r.hypothesis_holds;
  settle_single(r, exact_quantity("f(G)^(1/|E(G)|)", edge_family_count(f.g(), p, family), f.g().edge_units()),
                exact_quantity("f(H)^(1/|E(H)|)", edge_family_count(f.h(), p, family), f.h().edge_units()), false);
}

inline void check_matchings_lower(CheckReport& r, PairFacts& f) {
  r.hypothesis_holds = f.domination().has_value();
  if (f.domination()) r.certificate = *f.domination();
  r.theorem_applies = r.hypothesis_holds && f.h_is_edge() && f.fractionally_tiled();
  settle_single(r, exact_quantity("m(G)^(1/|G|)", count_matchings(f.g()), f.g().size()),
                exact_quantity("m(H)^(1/|H|)", count_matchings(f.h()), f.h().size()), false);
}

inline void check_packing_lower(CheckReport& r, PairFacts& f, const CheckParams& p) {
  const Multigraph k = p.packing_graph ? *p.packing_graph : f.h();
  r.variant = "K=" + serialize_graph(k, GraphFormat::edge_list);
  r.hypothesis_holds = f.domination().has_value();
  if (f.domination()) r.certificate = *f.domination();
  const bool k_edge = k.size() == 2 && k.edge_units() == 1;
  r.theorem_applies = r.hypothesis_holds && k_edge && f.h_is_edge() && f.g().is_simple() &&
                      f.fractionally_tiled();
  settle_single(r, exact_quantity("packings_K(G)^(1/|G|)", count_packings(f.g(), k), f.g().size()),
                exact_quantity("packings_K(H)^(1/|H|)", count_packings(f.h(), k), f.h().size()), false);
}

inline void check_tutte_pointwise(CheckReport& r, PairFacts& f, const CheckParams& p) {
  r.hypothesis_holds = f.domination().has_value();
  if (f.domination()) r.certificate = *f.domination();
  r.theorem_applies = r.hypothesis_holds && f.h_is_tree();
  const TuttePolynomial tg = tutte_polynomial(f.g(), p.tutte_bound);
  const TuttePolynomial th = tutte_polynomial(f.h(), p.tutte_bound);
  r.grid_name = "(x,y) in " + p.xy_grid_name;
  for (const auto& [x, y] : p.xy_grid) {
    if (x < 1 || y < 1) throw Error(ErrorKind::domain, "tutte_pointwise needs x, y >= 1");
    GridPoint pt;
    pt.parameter = "x=" + to_string(x) + ",y=" + to_string(y);
    pt.lhs = exact_quantity("T_G(x,y)^(1/|G|)", tg.evaluate(x, y), f.g().size());
    pt.rhs = exact_quantity("T_H(x,y)^(1/|H|)", th.evaluate(x, y), f.h().size());
    pt.verdict = compare_exact(pt.lhs, pt.rhs, r.direction, false);
    r.grid.push_back(std::move(pt));
  }
  settle(r, combine(r.grid));
}

inline BivariatePolynomial capped_power(const BivariatePolynomial& base, std::uint64_t exp, std::size_t cap) {
  std::uint32_t dx = 0;
  std::uint32_t dy = 0;
  for (const auto& [e, c] : base.terms()) {
    dx = std::max(dx, e.first);
    dy = std::max(dy, e.second);
  }
  const double terms = (static_cast<double>(dx) * static_cast<double>(exp) + 1) * (static_cast<double>(dy) * static_cast<double>(exp) + 1);
  if (terms > static_cast<double>(cap)) {
    throw Error(ErrorKind::limit_exceeded, "polynomial power exceeds the coefficient cap");
  }
  BivariatePolynomial result = BivariatePolynomial::constant(1);
  BivariatePolynomial b = base;
  while (exp > 0) {
    if (exp & 1U) result *= b;
    exp >>= 1U;
    if (exp > 0) b *= b;
  }
  return result;
}

inline void check_tutte_coefficients(CheckReport& r, PairFacts& f, const CheckParams& p) {
  r.hypothesis_holds = f.domination().has_value();
  if (f.domination()) r.certificate = *f.domination();
  r.theorem_applies = r.hypothesis_holds && f.h_is_tree();
  const auto pg = tutte_polynomial(f.g(), p.tutte_bound).shifted(1, 1);
  const auto ph = tutte_polynomial(f.h(), p.tutte_bound).shifted(1, 1);
  const auto diff = capped_power(pg, f.h().size(), p.coefficient_term_cap) -
                    capped_power(ph, f.g().size(), p.coefficient_term_cap);
  BigInt smallest = 0;
  std::string where;
  for (const auto& [e, c] : diff.terms()) {
    if (c < smallest) {
      smallest = c;
      where = "x^" + std::to_string(e.first) + " y^" + std::to_string(e.second);
    }
  }
  r.lhs = exact_quantity("min coefficient of T_G(x+1,y+1)^|H| - T_H(x+1,y+1)^|G|", smallest, 1);
  r.lhs->approx = to_double(smallest);
  r.rhs = exact_quantity("0", 0, 1);
  const Verdict raw = diff.is_zero() ? Verdict::holds_with_equality : (smallest < 0 ? Verdict::violated : Verdict::holds);
  if (smallest < 0) r.note = "negative coefficient at " + where;
  settle(r, raw);
}

}  // namespace detail

inline CheckReport check(InequalityId id, PairFacts& facts, const CheckParams& params = {}) {
  const InequalityInfo& row = info(id);
  CheckReport r;
  r.id = id;
  r.hypothesis = row.hypothesis;
  r.theorem_regime = row.theorem_regime;
  r.status = row.status;
  r.direction = row.direction;
  r.g = serialize_graph(facts.g(), GraphFormat::edge_list);
  if (row.needs_h || facts.has_h()) r.h = serialize_graph(facts.h(), GraphFormat::edge_list);
  switch (id) {
    case InequalityId::spanning_tree: detail::check_spanning_tree(r, facts); break;
    case InequalityId::tree_product: detail::check_tree_product(r, facts, params); break;
    case InequalityId::minor_power: detail::check_minor_power(r, facts, params); break;
    case InequalityId::transitive_G: detail::check_transitive_g(r, facts); break;
    case InequalityId::transitive_H: detail::check_transitive_h(r, facts); break;
    case InequalityId::frac_tiling_tree: detail::check_frac_tiling_tree(r, facts); break;
    case InequalityId::koteljanskii_step: detail::check_koteljanskii(r, facts, params); break;
    case InequalityId::cover_product: detail::check_cover_product(r, facts, params); break;
    case InequalityId::heat_trace_frac: detail::check_heat_trace(r, facts, params, true); break;
    case InequalityId::heat_trace_dom: detail::check_heat_trace(r, facts, params, false); break;
    case InequalityId::weighted_cover_heat: detail::check_weighted_cover_heat(r, facts, params); break;
    case InequalityId::spectral_decreasing_convex: detail::check_spectral_convex(r, facts, params, false); break;
    case InequalityId::spectral_convex_transitive_h: detail::check_spectral_convex(r, facts, params, true); break;
    case InequalityId::op_monotone: detail::check_op_monotone(r, facts, params); break;
    case InequalityId::char_poly: detail::check_char_poly(r, facts, params); break;
    case InequalityId::vertex_counting: detail::check_vertex_counting(r, facts, params); break;
    case InequalityId::edge_counting: detail::check_edge_counting(r, facts, params); break;
    case InequalityId::matchings_lower: detail::check_matchings_lower(r, facts); break;
    case InequalityId::packing_lower: detail::check_packing_lower(r, facts, params); break;
    case InequalityId::tutte_pointwise: detail::check_tutte_pointwise(r, facts, params); break;
    case InequalityId::tutte_coefficients: detail::check_tutte_coefficients(r, facts, params); break;
  }
  return r;
}

inline CheckReport check(InequalityId id, const Multigraph& g, const std::optional<Multigraph>& h,
                         const CheckParams& params = {}) {
  PairFacts facts(g, h);
  return check(id, facts, params);
}

// ---- Shearer ---------------------------------------------------------------

/// Finite joint law of (X_1, ..., X_k) with exact probabilities.
class JointDistribution {
 public:
  using Outcome = std::vector<std::int64_t>;

  JointDistribution(std::size_t k, std::map<Outcome, Rational> law) : k_(k), law_(std::move(law)) {
    Rational total = 0;
    for (const auto& [x, pr] : law_) {
      if (x.size() != k_) throw Error(ErrorKind::invalid_argument, "outcome has the wrong arity");
      if (pr <= 0) throw Error(ErrorKind::invalid_argument, "probabilities must be positive on the support");
      total += pr;
    }
    if (total != 1) throw Error(ErrorKind::invalid_argument, "probabilities must sum to 1");
  }

  [[nodiscard]] std::size_t arity() const noexcept { return k_; }
  [[nodiscard]] const std::map<Outcome, Rational>& law() const noexcept { return law_; }

  /// Law of X_S (indices 0-based).
  [[nodiscard]] std::map<Outcome, Rational> marginal(const std::vector<std::size_t>& s) const {
    std::map<Outcome, Rational> out;
    for (const auto& [x, pr] : law_) {
      Outcome y;
      for (auto i : s) y.push_back(x[i]);
      out[y] += pr;
    }
    return out;
  }

 private:
  std::size_t k_;
  std::map<Outcome, Rational> law_;
};

inline double entropy(const std::map<JointDistribution::Outcome, Rational>& law) {
  double h = 0;
  for (const auto& [x, pr] : law) {
    const double p = to_double(pr);
    h -= p * std::log(p);
  }
  return h;
}

struct ShearerReport {
  std::uint64_t r = 0;
  Quantity lhs;
  Quantity rhs;
  Verdict verdict = Verdict::inconclusive;
  bool exact = false;
};

inline constexpr std::uint64_t kShearerExactDenominatorCap = 4096;

/// r H(X_1..X_k) <= sum_S H(X_S) for a cover in which every index lies in exactly r sets.
inline ShearerReport check_shearer(const JointDistribution& d, const std::vector<std::vector<std::size_t>>& cover,
                                   std::uint64_t r, double error_budget = 1e-9) {
  if (r == 0) throw Error(ErrorKind::invalid_argument, "r must be positive");
  std::vector<std::uint64_t> hits(d.arity(), 0);
  for (const auto& s : cover) {
    for (auto i : s) {
      if (i >= d.arity()) throw Error(ErrorKind::invalid_argument, "cover index out of range");
      ++hits[i];
    }
  }
  for (auto h : hits) {
    if (h != r) throw Error(ErrorKind::cover_not_regular, "every index must lie in exactly r cover sets");
  }
  ShearerReport rep;
  rep.r = r;
  const double lhs = static_cast<double>(r) * entropy(d.law());
  double rhs = 0;
  std::vector<std::map<JointDistribution::Outcome, Rational>> marginals;
  for (const auto& s : cover) {
    marginals.push_back(d.marginal(s));
    rhs += entropy(marginals.back());
  }
  const double err = 1e-13 * static_cast<double>(d.law().size() * (cover.size() + r));
  rep.lhs = detail::float_quantity("r H(X)", lhs, err);
  rep.rhs = detail::float_quantity("sum_S H(X_S)", rhs, err);
  BigInt den = 1;
  for (const auto& [x, pr] : d.law()) den = lcm(den, boost::multiprecision::denominator(pr));
  if (den <= kShearerExactDenominatorCap) {
    // With p = a/D: r H(X) <= sum H(X_S)  iff  prod a^(r a) D^((|S|-r) D) >= prod_S prod b^b.
    const auto dd = den.convert_to<std::uint64_t>();
    BigInt left = ipow(den, (cover.size() >= r ? cover.size() - r : 0) * dd);
    BigInt right = cover.size() < r ? ipow(den, (r - cover.size()) * dd) : BigInt(1);
    for (const auto& [x, pr] : d.law()) {
      const BigInt a = boost::multiprecision::numerator(Rational(pr * den));
      left *= ipow(a, r * a.convert_to<std::uint64_t>());
    }
    for (const auto& m : marginals) {
      for (const auto& [y, pr] : m) {
        const BigInt b = boost::multiprecision::numerator(Rational(pr * den));
        right *= ipow(b, b.convert_to<std::uint64_t>());
      }
    }
    rep.exact = true;
    rep.verdict = left > right ? Verdict::holds : left == right ? Verdict::holds_with_equality : Verdict::violated;
  } else {
    rep.verdict = detail::compare_float(rep.lhs, rep.rhs, Direction::at_most, error_budget);
  }
  return rep;
}

// ---- hunt ------------------------------------------------------------------

struct HuntFinding {
  GeneratedPair pair;
  CheckReport report;
};

struct HuntResult {
  InequalityId id = InequalityId::spanning_tree;
  PairGenerator generator;
  std::uint64_t trials = 0;
  std::uint64_t holds = 0;
  std::uint64_t equalities = 0;
  std::uint64_t hypothesis_failed = 0;
  std::uint64_t inconclusive = 0;
  std::uint64_t errors = 0;
  /// Violations ordered by trial index.
  std::vector<HuntFinding> violations;
};

/// Runs `check` on `trials` generated pairs. Each trial depends only on
/// (seed, index), so the result does not depend on the thread schedule.
inline HuntResult hunt(InequalityId id, const PairGenerator& gen, std::uint64_t trials, const CheckParams& params = {},
                       unsigned threads = 0) {
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  struct Outcome {
    std::optional<Verdict> verdict;
    std::optional<HuntFinding> finding;
  };
  std::vector<Outcome> outcomes(trials);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&]() {
    for (std::uint64_t i = next++; i < trials; i = next++) {
      try {
        GeneratedPair pair = generate_pair(gen, i);
        PairFacts facts(pair.g, pair.h);
        CheckReport rep = check(id, facts, params);
        outcomes[i].verdict = rep.verdict;
        if (rep.verdict == Verdict::violated) outcomes[i].finding = HuntFinding{std::move(pair), std::move(rep)};
      } catch (const Error&) {
        outcomes[i].verdict.reset();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  HuntResult result;
  result.id = id;
  result.generator = gen;
  result.trials = trials;
  for (auto& o : outcomes) {
    if (!o.verdict) {
      ++result.errors;
      continue;
    }
    switch (*o.verdict) {
      case Verdict::holds: ++result.holds; break;
      case Verdict::holds_with_equality: ++result.equalities; break;
      case Verdict::hypothesis_failed: ++result.hypothesis_failed; break;
      case Verdict::inconclusive: ++result.inconclusive; break;
      case Verdict::violated: result.violations.push_back(std::move(*o.finding)); break;
    }
  }
  return result;
}

}  // namespace gdom
