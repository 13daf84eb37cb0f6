#pragma once

// Deciders for tiling, fractional (vertex / edge) tiling and domination, each
// returning a certificate that verify_certificate() can re-check from scratch.

#include "gdom/embedding.hpp"
#include "gdom/graph.hpp"
#include "gdom/lp.hpp"
#include "gdom/maxflow.hpp"
#include "gdom/numeric.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace gdom {

/// Vertex-disjoint copies of H covering V(G) exactly once.
struct TilingCertificate {
  std::vector<Subgraph> copies;
};

enum class TilingMode { vertex, edge };

/// Copies with integer multiplicities covering every vertex (or every
/// edge-unit) exactly `coverage` times. Only positive multiplicities are kept.
struct FractionalTilingCertificate {
  TilingMode mode = TilingMode::vertex;
  std::vector<Subgraph> copies;
  std::vector<BigInt> multiplicities;
  BigInt coverage = 0;
};

/// Joint law of (X, Y) with uniform marginals, supported on admissible rooted pairs.
struct CouplingCertificate {
  struct Entry {
    Vertex x = 0;
    Vertex y = 0;
    Rational mass;
  };
  std::size_t g_size = 0;
  std::size_t h_size = 0;
  std::vector<Entry> entries;
};

using RelationCertificate = std::variant<TilingCertificate, FractionalTilingCertificate, CouplingCertificate>;

/// "inconclusive" only arises when a copy limit truncated the search.
enum class Decision { holds, fails, inconclusive };

inline const char* to_string(Decision d) {
  switch (d) {
    case Decision::holds: return "holds";
    case Decision::fails: return "fails";
    case Decision::inconclusive: return "inconclusive";
  }
  return "?";
}

struct RelationOptions {
  std::optional<std::size_t> copy_limit;
};

struct TilingResult {
  Decision decision = Decision::fails;
  std::optional<TilingCertificate> certificate;
  std::size_t explored_copies = 0;
};

struct FractionalTilingResult {
  Decision decision = Decision::fails;
  std::optional<FractionalTilingCertificate> certificate;
  std::size_t copy_count = 0;
};

inline TilingResult check_tiling(const Multigraph& g, const Multigraph& h, const RelationOptions& opt = {}) {
  TilingResult result;
  if (h.size() > g.size() || g.size() % h.size() != 0) return result;
  const CopyList list = enumerate_copies(g, h, opt.copy_limit);
  result.explored_copies = list.copies.size();
  const std::size_t n = g.size();
  std::vector<std::vector<std::size_t>> by_vertex(n);
  for (std::size_t c = 0; c < list.copies.size(); ++c) {
    for (Vertex v : list.copies[c].vertices) by_vertex[v].push_back(c);
  }
  std::vector<bool> covered(n, false);
  std::vector<std::size_t> chosen;
  // Exact cover: branch on the uncovered vertex with the fewest usable copies.
  std::function<bool()> solve = [&]() -> bool {
    std::optional<Vertex> pick;
    std::size_t fewest = SIZE_MAX;
    for (Vertex v = 0; v < n; ++v) {
      if (covered[v]) continue;
      std::size_t usable = 0;
      for (auto c : by_vertex[v]) {
        const auto& vs = list.copies[c].vertices;
        if (std::none_of(vs.begin(), vs.end(), [&](Vertex w) { return covered[w]; })) ++usable;
      }
      if (usable < fewest) {
        fewest = usable;
        pick = v;
      }
    }
    if (!pick) return true;
    if (fewest == 0) return false;
    for (auto c : by_vertex[*pick]) {
      const auto& vs = list.copies[c].vertices;
      if (std::any_of(vs.begin(), vs.end(), [&](Vertex w) { return covered[w]; })) continue;
      for (Vertex w : vs) covered[w] = true;
      chosen.push_back(c);
      if (solve()) return true;
      chosen.pop_back();
      for (Vertex w : vs) covered[w] = false;
    }
    return false;
  };
  if (solve()) {
    TilingCertificate cert;
    for (auto c : chosen) cert.copies.push_back(list.copies[c]);
    result.certificate = std::move(cert);
    result.decision = Decision::holds;
  } else {
    result.decision = list.complete ? Decision::fails : Decision::inconclusive;
  }
  return result;
}

namespace detail {

/// Scales a nonnegative rational solution to the least integer vector.
inline std::pair<std::vector<BigInt>, BigInt> integerize(const std::vector<Rational>& x) {
  BigInt den = 1;
  for (const auto& v : x) den = lcm(den, boost::multiprecision::denominator(v));
  std::vector<BigInt> ints;
  BigInt g = 0;
  for (const auto& v : x) {
    const Rational scaled = v * den;
    ints.push_back(boost::multiprecision::numerator(scaled));
    g = gcd(g, ints.back());
  }
  if (g == 0) g = 1;
  for (auto& v : ints) v /= g;
  return {std::move(ints), den / g};
}

inline FractionalTilingResult fractional_tiling_impl(const Multigraph& g, const Multigraph& h, TilingMode mode,
                                                     const RelationOptions& opt) {
  FractionalTilingResult result;
  if (h.size() > g.size()) return result;
  const CopyList list = enumerate_copies(g, h, opt.copy_limit);
  result.copy_count = list.copies.size();
  if (list.copies.empty()) {
    result.decision = list.complete ? Decision::fails : Decision::inconclusive;
    return result;
  }
  Matrix<Rational> a;
  std::vector<Rational> b;
  if (mode == TilingMode::vertex) {
    a = Matrix<Rational>(g.size(), list.copies.size(), Rational(0));
    b.assign(g.size(), Rational(1));
    for (std::size_t c = 0; c < list.copies.size(); ++c) {
      for (Vertex v : list.copies[c].vertices) a(v, c) = 1;
    }
  } else {
    // One row per adjacent pair; right side is the pair's multiplicity so the
    // coverage constant is per edge-unit.
    std::map<std::pair<Vertex, Vertex>, std::size_t> row;
    for (const auto& e : g.edges()) {
      auto [it, fresh] = row.emplace(std::make_pair(e.u, e.v), row.size());
      if (fresh) b.emplace_back(0);
      b[it->second] += e.multiplicity;
    }
    a = Matrix<Rational>(row.size(), list.copies.size(), Rational(0));
    for (std::size_t c = 0; c < list.copies.size(); ++c) {
      for (const auto& e : list.copies[c].edges) a(row.at({e.u, e.v}), c) += e.multiplicity;
    }
  }
  const auto x = find_nonnegative_solution(a, b);
  if (!x) {
    result.decision = list.complete ? Decision::fails : Decision::inconclusive;
    return result;
  }
  auto [ints, coverage] = integerize(*x);
  FractionalTilingCertificate cert;
  cert.mode = mode;
  cert.coverage = coverage;
  for (std::size_t c = 0; c < ints.size(); ++c) {
    if (ints[c] > 0) {
      cert.copies.push_back(list.copies[c]);
      cert.multiplicities.push_back(ints[c]);
    }
  }
  result.decision = Decision::holds;
  result.certificate = std::move(cert);
  return result;
}

}  // namespace detail

inline FractionalTilingResult check_fractional_tiling(const Multigraph& g, const Multigraph& h,
                                                      const RelationOptions& opt = {}) {
  return detail::fractional_tiling_impl(g, h, TilingMode::vertex, opt);
}

inline FractionalTilingResult check_fractional_edge_tiling(const Multigraph& g, const Multigraph& h,
                                                           const RelationOptions& opt = {}) {
  return detail::fractional_tiling_impl(g, h, TilingMode::edge, opt);
}

/// Transportation problem on the rooted-copy relation, scaled by |G||H| and
/// solved as an integer max-flow.
inline std::optional<CouplingCertificate> check_domination(const Multigraph& g, const Multigraph& h) {
  if (h.size() > g.size()) return std::nullopt;
  const RootedCopyRelation rel = rooted_copy_relation(g, h);
  if (rel.empty()) return std::nullopt;
  const std::size_t ng = g.size();
  const std::size_t nh = h.size();
  const std::size_t source = ng + nh;
  const std::size_t sink = source + 1;
  MaxFlow flow(ng + nh + 2);
  for (std::size_t x = 0; x < ng; ++x) flow.add_arc(source, x, static_cast<std::int64_t>(nh));
  for (std::size_t y = 0; y < nh; ++y) flow.add_arc(ng + y, sink, static_cast<std::int64_t>(ng));
  std::vector<std::tuple<Vertex, Vertex, std::size_t>> arcs;
  const auto big = static_cast<std::int64_t>(ng * nh);
  for (Vertex x = 0; x < ng; ++x) {
    for (Vertex y = 0; y < nh; ++y) {
      if (rel.contains(x, y)) arcs.emplace_back(x, y, flow.add_arc(x, ng + y, big));
    }
  }
  if (flow.run(source, sink) != big) return std::nullopt;
  CouplingCertificate cert;
  cert.g_size = ng;
  cert.h_size = nh;
  for (const auto& [x, y, id] : arcs) {
    const auto f = flow.flow_on(id);
    if (f > 0) cert.entries.push_back({x, y, make_rational(BigInt(f), BigInt(big))});
  }
  return cert;
}

/// Brute-force transportation criterion: G dominates H iff for every
/// T subset of V(H), |N(T)| |H| >= |T| |G|. Returns a violating T on failure.
inline std::pair<bool, std::optional<VertexSet>> domination_hall_condition(const Multigraph& g, const Multigraph& h,
                                                                           std::size_t max_h = 20) {
  if (h.size() > max_h) throw Error(ErrorKind::size_bound, "Hall enumeration over 2^|H| subsets is capped");
  if (h.size() > g.size()) return {false, VertexSet::range(h.size())};
  const RootedCopyRelation rel = rooted_copy_relation(g, h);
  const std::size_t nh = h.size();
  std::vector<std::uint64_t> nbr(nh, 0);  // G-neighborhood of each y, as bitsets in 64-bit words
  const std::size_t words = (g.size() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> neigh(nh, std::vector<std::uint64_t>(words, 0));
  for (Vertex y = 0; y < nh; ++y) {
    for (Vertex x = 0; x < g.size(); ++x) {
      if (rel.contains(x, y)) neigh[y][x / 64] |= std::uint64_t{1} << (x % 64);
    }
  }
  for (std::uint64_t t = 1; t < (std::uint64_t{1} << nh); ++t) {
    std::vector<std::uint64_t> cover(words, 0);
    std::size_t tsize = 0;
    for (Vertex y = 0; y < nh; ++y) {
      if ((t >> y) & 1U) {
        ++tsize;
        for (std::size_t w = 0; w < words; ++w) cover[w] |= neigh[y][w];
      }
    }
    std::size_t ncount = 0;
    for (auto w : cover) ncount += static_cast<std::size_t>(__builtin_popcountll(w));
    if (ncount * nh < tsize * g.size()) return {false, VertexSet::from_mask(t)};
  }
  return {true, std::nullopt};
}

inline bool verify_certificate(const Multigraph& g, const Multigraph& h, const TilingCertificate& cert) {
  std::vector<int> hits(g.size(), 0);
  for (const auto& c : cert.copies) {
    if (!is_copy_of(g, h, c)) return false;
    for (Vertex v : c.vertices) ++hits[v];
  }
  return !cert.copies.empty() && std::all_of(hits.begin(), hits.end(), [](int k) { return k == 1; });
}

inline bool verify_certificate(const Multigraph& g, const Multigraph& h, const FractionalTilingCertificate& cert) {
  if (cert.copies.size() != cert.multiplicities.size() || cert.copies.empty() || cert.coverage <= 0) return false;
  bool any_positive = false;
  for (std::size_t c = 0; c < cert.copies.size(); ++c) {
    if (cert.multiplicities[c] < 0) return false;
    any_positive = any_positive || cert.multiplicities[c] > 0;
    if (!is_copy_of(g, h, cert.copies[c])) return false;
  }
  if (!any_positive) return false;
  if (cert.mode == TilingMode::vertex) {
    std::vector<BigInt> hits(g.size(), BigInt(0));
    for (std::size_t c = 0; c < cert.copies.size(); ++c) {
      for (Vertex v : cert.copies[c].vertices) hits[v] += cert.multiplicities[c];
    }
    return std::all_of(hits.begin(), hits.end(), [&](const BigInt& k) { return k == cert.coverage; });
  }
  std::map<std::pair<Vertex, Vertex>, BigInt> hits;
  for (const auto& e : g.edges()) hits[{e.u, e.v}] += 0;
  for (std::size_t c = 0; c < cert.copies.size(); ++c) {
    for (const auto& e : cert.copies[c].edges) hits[{e.u, e.v}] += cert.multiplicities[c] * e.multiplicity;
  }
  for (const auto& [pair, k] : hits) {
    if (k != cert.coverage * g.multiplicity(pair.first, pair.second)) return false;
  }
  return true;
}

inline bool verify_certificate(const Multigraph& g, const Multigraph& h, const CouplingCertificate& cert) {
  if (cert.g_size != g.size() || cert.h_size != h.size()) return false;
  const RootedCopyRelation rel = rooted_copy_relation(g, h);
  std::vector<Rational> rows(g.size(), Rational(0));
  std::vector<Rational> cols(h.size(), Rational(0));
  for (const auto& e : cert.entries) {
    if (e.x >= g.size() || e.y >= h.size() || e.mass < 0) return false;
    if (e.mass > 0 && !rel.contains(e.x, e.y)) return false;
    rows[e.x] += e.mass;
    cols[e.y] += e.mass;
  }
  const Rational row_target = make_rational(1, BigInt(g.size()));
  const Rational col_target = make_rational(1, BigInt(h.size()));
  return std::all_of(rows.begin(), rows.end(), [&](const Rational& r) { return r == row_target; }) &&
         std::all_of(cols.begin(), cols.end(), [&](const Rational& c) { return c == col_target; });
}

inline bool verify_certificate(const Multigraph& g, const Multigraph& h, const RelationCertificate& cert) {
  return std::visit([&](const auto& c) { return verify_certificate(g, h, c); }, cert);
}

}  // namespace gdom
