#pragma once

// Exact counters: spanning trees, Laplacian minors, the Tutte polynomial and
// its evaluations, independent sets, colorings, weighted homomorphisms,
// matchings and packings.

#include "gdom/concurrent_cache.hpp"
#include "gdom/embedding.hpp"
#include "gdom/graph.hpp"
#include "gdom/linalg.hpp"
#include "gdom/numeric.hpp"
#include "gdom/polynomial.hpp"
#include "gdom/symmetry.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gdom {

using TuttePolynomial = BivariatePolynomial;
/// Positive weight per vertex of the target graph.
using WeightFunction = std::vector<Rational>;

inline constexpr std::uint64_t kDefaultTutteBound = 24;
inline constexpr std::size_t kIndependentSetBound = 40;

/// Number of spanning trees, counting parallel edges as distinct. Weights are ignored.
inline BigInt count_spanning_trees(const Multigraph& g) {
  if (g.size() == 1) return 1;
  const auto lap = combinatorial_laplacian(g);
  std::vector<std::size_t> keep(g.size() - 1);
  for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i + 1;
  return bareiss_determinant(lap.principal(keep));
}

/// Principal minor of the weighted Laplacian on rows/columns `a`; M(empty) = 1.
inline Rational laplacian_minor(const Multigraph& g, const VertexSet& a) {
  for (Vertex v : a) {
    if (v >= g.size()) throw Error(ErrorKind::invalid_argument, "vertex outside the graph");
  }
  if (a.empty()) return 1;
  return determinant(laplacian(g).principal(a.items()));
}

/// Sum over spanning trees of the product of edge weights (times multiplicities).
inline Rational weighted_spanning_tree_sum(const Multigraph& g) {
  std::vector<Vertex> rest;
  for (Vertex v = 1; v < g.size(); ++v) rest.push_back(v);
  return laplacian_minor(g, VertexSet(std::move(rest)));
}

namespace detail {

/// Loopless multigraph without connectivity requirement, used inside the
/// Tutte recursion. m[u][v] = number of parallel edges.
struct PlainMultigraph {
  std::size_t n = 0;
  std::vector<std::vector<std::uint64_t>> m;

  static PlainMultigraph from(const Multigraph& g) {
    return {g.size(), g.multiplicity_matrix()};
  }

  [[nodiscard]] std::vector<std::vector<Vertex>> components() const {
    std::vector<int> comp(n, -1);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < n; ++s) {
      if (comp[s] >= 0) continue;
      out.emplace_back();
      std::vector<Vertex> stack{s};
      comp[s] = static_cast<int>(out.size() - 1);
      while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        out.back().push_back(v);
        for (Vertex w = 0; w < n; ++w) {
          if (m[v][w] > 0 && comp[w] < 0) {
            comp[w] = comp[s];
            stack.push_back(w);
          }
        }
      }
      std::sort(out.back().begin(), out.back().end());
    }
    return out;
  }

  [[nodiscard]] PlainMultigraph induced(const std::vector<Vertex>& vs) const {
    PlainMultigraph out{vs.size(), std::vector<std::vector<std::uint64_t>>(vs.size(), std::vector<std::uint64_t>(vs.size(), 0))};
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = 0; j < vs.size(); ++j) out.m[i][j] = m[vs[i]][vs[j]];
    }
    return out;
  }

  /// Merges v into u; the u-v class disappears (its edges become loops, handled by the caller).
  [[nodiscard]] PlainMultigraph contracted(Vertex u, Vertex v) const {
    std::vector<Vertex> keep;
    for (Vertex w = 0; w < n; ++w) {
      if (w != v) keep.push_back(w);
    }
    PlainMultigraph out = induced(keep);
    const auto pos = [&](Vertex w) { return static_cast<Vertex>(w < v ? w : w - 1); };
    const Vertex pu = pos(u);
    for (Vertex w = 0; w < n; ++w) {
      if (w == u || w == v || m[v][w] == 0) continue;
      out.m[pu][pos(w)] += m[v][w];
      out.m[pos(w)][pu] += m[v][w];
    }
    return out;
  }

  [[nodiscard]] bool connected_without(Vertex u, Vertex v) const {
    std::vector<bool> seen(n, false);
    std::vector<Vertex> stack{u};
    seen[u] = true;
    while (!stack.empty()) {
      const Vertex a = stack.back();
      stack.pop_back();
      for (Vertex b = 0; b < n; ++b) {
        if (seen[b] || m[a][b] == 0) continue;
        if ((a == u && b == v) || (a == v && b == u)) continue;
        if (b == v) return true;
        seen[b] = true;
        stack.push_back(b);
      }
    }
    return false;
  }

  [[nodiscard]] std::uint64_t units() const {
    std::uint64_t total = 0;
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) total += m[a][b];
    }
    return total;
  }

  [[nodiscard]] Multigraph to_multigraph() const {
    std::vector<Edge> es;
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) {
        if (m[a][b] > 0) es.push_back(Edge{a, b, m[a][b], 1});
      }
    }
    return Multigraph::create(n, std::move(es));
  }
};

/// 1 + y + ... + y^(k-1), plus x in place of the leading 1 when `bridge`.
inline TuttePolynomial parallel_class_factor(std::uint64_t k, bool bridge) {
  TuttePolynomial p = bridge ? TuttePolynomial::x() : TuttePolynomial::constant(1);
  for (std::uint64_t j = 1; j < k; ++j) p.add_term(0, static_cast<std::uint32_t>(j), 1);
  return p;
}

inline ConcurrentCache<CanonicalCode, TuttePolynomial>& tutte_cache() {
  static ConcurrentCache<CanonicalCode, TuttePolynomial> cache;
  return cache;
}

inline TuttePolynomial tutte_recursive(const PlainMultigraph& g) {
  const auto comps = g.components();
  if (comps.size() > 1) {
    TuttePolynomial p = TuttePolynomial::constant(1);
    for (const auto& c : comps) p *= tutte_recursive(g.induced(c));
    return p;
  }
  if (g.n == 1) return TuttePolynomial::constant(1);
  // A vertex with a single neighbour hangs off a bridge class.
  for (Vertex v = 0; v < g.n; ++v) {
    Vertex only = 0;
    std::size_t distinct = 0;
    for (Vertex w = 0; w < g.n; ++w) {
      if (g.m[v][w] > 0) {
        ++distinct;
        only = w;
      }
    }
    if (distinct == 1) {
      std::vector<Vertex> rest;
      for (Vertex w = 0; w < g.n; ++w) {
        if (w != v) rest.push_back(w);
      }
      return parallel_class_factor(g.m[v][only], true) * tutte_recursive(g.induced(rest));
    }
  }
  const CanonicalCode key = canonical_code(g.to_multigraph());
  if (auto hit = tutte_cache().find(key)) return *hit;
  // Branch on a class at a vertex of fewest distinct neighbours.
  Vertex u = 0;
  std::size_t fewest = SIZE_MAX;
  for (Vertex v = 0; v < g.n; ++v) {
    std::size_t d = 0;
    for (Vertex w = 0; w < g.n; ++w) d += g.m[v][w] > 0 ? 1 : 0;
    if (d < fewest) {
      fewest = d;
      u = v;
    }
  }
  Vertex v = 0;
  while (g.m[u][v] == 0) ++v;
  const std::uint64_t k = g.m[u][v];
  TuttePolynomial result;
  if (!g.connected_without(u, v)) {
    result = parallel_class_factor(k, true) * tutte_recursive(g.contracted(u, v));
  } else {
    PlainMultigraph deleted = g;
    deleted.m[u][v] = deleted.m[v][u] = 0;
    result = tutte_recursive(deleted) + parallel_class_factor(k, false) * tutte_recursive(g.contracted(u, v));
  }
  return tutte_cache().insert(key, std::move(result));
}

}  // namespace detail

/// Deletion-contraction over parallel classes, memoized on canonical codes.
/// Throws size_bound when the graph has more than `bound` edge-units and is
/// not already cached.
inline TuttePolynomial tutte_polynomial(const Multigraph& g, std::uint64_t bound = kDefaultTutteBound) {
  const Multigraph u = g.unweighted();
  if (u.edge_units() > bound) {
    if (auto hit = detail::tutte_cache().find(canonical_code(u))) return *hit;
    throw Error(ErrorKind::size_bound, "Tutte polynomial limited to " + std::to_string(bound) + " edge-units");
  }
  return detail::tutte_recursive(detail::PlainMultigraph::from(u));
}

/// T_G(2, 1).
inline BigInt count_forests(const Multigraph& g, std::uint64_t bound = kDefaultTutteBound) {
  return tutte_polynomial(g, bound).evaluate(BigInt(2), BigInt(1));
}

/// T_G(2, 0).
inline BigInt count_acyclic_orientations(const Multigraph& g, std::uint64_t bound = kDefaultTutteBound) {
  return tutte_polynomial(g, bound).evaluate(BigInt(2), BigInt(0));
}

namespace detail {

inline void require_mask_size(const Multigraph& g, std::size_t bound) {
  if (g.size() > bound) {
    throw Error(ErrorKind::size_bound, "counter limited to " + std::to_string(bound) + " vertices");
  }
}

inline std::uint64_t independent_sets(std::uint64_t avail, const std::vector<std::uint64_t>& adj,
                                      std::unordered_map<std::uint64_t, std::uint64_t>& memo) {
  if (avail == 0) return 1;
  if (auto it = memo.find(avail); it != memo.end()) return it->second;
  Vertex best = 0;
  int best_deg = -1;
  for (std::uint64_t rest = avail; rest != 0; rest &= rest - 1) {
    const auto v = static_cast<Vertex>(std::countr_zero(rest));
    const int d = std::popcount(adj[v] & avail);
    if (d > best_deg) {
      best_deg = d;
      best = v;
    }
  }
  std::uint64_t total = 0;
  if (best_deg == 0) {
    total = std::uint64_t{1} << std::popcount(avail);
  } else {
    const std::uint64_t bit = std::uint64_t{1} << best;
    total = independent_sets(avail & ~bit, adj, memo) + independent_sets(avail & ~bit & ~adj[best], adj, memo);
  }
  memo.emplace(avail, total);
  return total;
}

/// Chromatic polynomial coefficients (index = power of q) of a simple graph
/// given by adjacency masks over the vertices in `avail`.
using CoefficientList = std::vector<BigInt>;

inline CoefficientList poly_mul(const CoefficientList& a, const CoefficientList& b) {
  CoefficientList out(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

inline CoefficientList chromatic(std::vector<std::uint64_t> adj, std::uint64_t avail,
                                 std::map<std::vector<std::uint64_t>, CoefficientList>& memo) {
  for (auto& a : adj) a &= avail;
  const int n = std::popcount(avail);
  std::size_t edges2 = 0;
  Vertex eu = 0;
  Vertex ev = 0;
  bool found = false;
  for (std::uint64_t rest = avail; rest != 0; rest &= rest - 1) {
    const auto v = static_cast<Vertex>(std::countr_zero(rest));
    edges2 += static_cast<std::size_t>(std::popcount(adj[v]));
    if (!found && adj[v] != 0) {
      eu = v;
      ev = static_cast<Vertex>(std::countr_zero(adj[v]));
      found = true;
    }
  }
  if (!found) {
    CoefficientList p(static_cast<std::size_t>(n) + 1, BigInt(0));
    p.back() = 1;
    return p;
  }
  std::vector<std::uint64_t> key;
  key.push_back(avail);
  for (std::uint64_t rest = avail; rest != 0; rest &= rest - 1) key.push_back(adj[std::countr_zero(rest)]);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const std::size_t edges = edges2 / 2;
  CoefficientList result;
  if (edges == static_cast<std::size_t>(n) * (n - 1) / 2) {
    // Complete graph: falling factorial q(q-1)...(q-n+1).
    result = {BigInt(0), BigInt(1)};
    for (int k = 1; k < n; ++k) result = poly_mul(result, {BigInt(-k), BigInt(1)});
  } else {
    // P(G) = P(G - e) - P(G / e).
    auto deleted = adj;
    deleted[eu] &= ~(std::uint64_t{1} << ev);
    deleted[ev] &= ~(std::uint64_t{1} << eu);
    auto contracted = deleted;
    contracted[eu] |= contracted[ev];
    for (std::uint64_t rest = contracted[ev]; rest != 0; rest &= rest - 1) {
      const auto w = std::countr_zero(rest);
      contracted[w] = (contracted[w] & ~(std::uint64_t{1} << ev)) | (std::uint64_t{1} << eu);
    }
    const CoefficientList a = chromatic(deleted, avail, memo);
    const CoefficientList b = chromatic(contracted, avail & ~(std::uint64_t{1} << ev), memo);
    result = a;
    for (std::size_t i = 0; i < b.size(); ++i) result[i] -= b[i];
  }
  memo.emplace(std::move(key), result);
  return result;
}

}  // namespace detail

/// Vertex subsets spanning no edge, the empty set included.
inline BigInt count_independent_sets(const Multigraph& g) {
  detail::require_mask_size(g, kIndependentSetBound);
  std::unordered_map<std::uint64_t, std::uint64_t> memo;
  const std::uint64_t all = g.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.size()) - 1;
  return BigInt(detail::independent_sets(all, g.adjacency_masks(), memo));
}

/// Chromatic polynomial as coefficients of q^0, q^1, ...
inline std::vector<BigInt> chromatic_polynomial(const Multigraph& g) {
  detail::require_mask_size(g, kIndependentSetBound);
  std::map<std::vector<std::uint64_t>, detail::CoefficientList> memo;
  const std::uint64_t all = (std::uint64_t{1} << g.size()) - 1;
  return detail::chromatic(g.adjacency_masks(), all, memo);
}

inline BigInt count_proper_colorings(const Multigraph& g, std::uint64_t q) {
  if (q == 0) throw Error(ErrorKind::invalid_argument, "number of colors must be positive");
  const auto coeffs = chromatic_polynomial(g);
  BigInt total = 0;
  BigInt power = 1;
  for (const auto& c : coeffs) {
    total += c * power;
    power *= q;
  }
  return total;
}

/// Target graph for homomorphisms; loops allowed.
class LoopedGraph {
 public:
  explicit LoopedGraph(std::size_t n) : n_(n), adj_(n * n, 0) {}

  void add_edge(Vertex a, Vertex b) {
    if (a >= n_ || b >= n_) throw Error(ErrorKind::invalid_argument, "edge endpoint out of range");
    adj_[a * n_ + b] = adj_[b * n_ + a] = 1;
  }
  [[nodiscard]] bool adjacent(Vertex a, Vertex b) const { return adj_[a * n_ + b] != 0; }
  [[nodiscard]] std::size_t size() const noexcept { return n_; }

  static LoopedGraph from(const Multigraph& g) {
    LoopedGraph f(g.size());
    for (const auto& e : g.edges()) f.add_edge(e.u, e.v);
    return f;
  }

 private:
  std::size_t n_;
  std::vector<std::uint8_t> adj_;
};

inline constexpr std::uint64_t kDefaultHomomorphismNodeLimit = 50'000'000;

/// Sum over homomorphisms phi: G -> F of prod_x w(phi(x)).
inline Rational count_weighted_homomorphisms(const Multigraph& g, const LoopedGraph& f, const WeightFunction& w,
                                             std::uint64_t node_limit = kDefaultHomomorphismNodeLimit) {
  if (w.size() != f.size()) throw Error(ErrorKind::invalid_argument, "weight function size does not match target");
  for (const auto& x : w) {
    if (x <= 0) throw Error(ErrorKind::invalid_argument, "weights must be positive");
  }
  // Breadth-first order so every vertex after the first has a placed neighbour.
  const auto nb = g.neighbors();
  std::vector<Vertex> order{0};
  std::vector<bool> seen(g.size(), false);
  seen[0] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex b : nb[order[i]]) {
      if (!seen[b]) {
        seen[b] = true;
        order.push_back(b);
      }
    }
  }
  std::vector<std::vector<Vertex>> back(order.size());
  std::vector<std::size_t> pos(g.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex b : nb[order[i]]) {
      if (pos[b] < i) back[i].push_back(b);
    }
  }
  std::vector<Vertex> phi(g.size(), 0);
  std::uint64_t nodes = 0;
  std::function<Rational(std::size_t)> sum = [&](std::size_t i) -> Rational {
    if (i == order.size()) return 1;
    if (++nodes > node_limit) throw Error(ErrorKind::limit_exceeded, "homomorphism search exceeded node limit");
    Rational total = 0;
    const Vertex x = order[i];
    for (Vertex t = 0; t < f.size(); ++t) {
      bool ok = true;
      for (Vertex b : back[i]) {
        if (!f.adjacent(t, phi[b])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      phi[x] = t;
      total += w[t] * sum(i + 1);
    }
    return total;
  };
  return sum(0);
}

/// Sets of pairwise vertex-disjoint edge-units, the empty set included.
inline BigInt count_matchings(const Multigraph& g) {
  detail::require_mask_size(g, 64);
  const auto m = g.multiplicity_matrix();
  const auto adj = g.adjacency_masks();
  std::unordered_map<std::uint64_t, BigInt> memo;
  std::function<BigInt(std::uint64_t)> go = [&](std::uint64_t avail) -> BigInt {
    if (avail == 0) return 1;
    if (auto it = memo.find(avail); it != memo.end()) return it->second;
    const auto v = static_cast<Vertex>(std::countr_zero(avail));
    const std::uint64_t rest = avail & ~(std::uint64_t{1} << v);
    BigInt total = go(rest);
    for (std::uint64_t cand = adj[v] & rest; cand != 0; cand &= cand - 1) {
      const auto u = static_cast<Vertex>(std::countr_zero(cand));
      total += BigInt(m[v][u]) * go(rest & ~(std::uint64_t{1} << u));
    }
    memo.emplace(avail, total);
    return total;
  };
  const std::uint64_t all = g.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.size()) - 1;
  return go(all);
}

/// Sets of pairwise vertex-disjoint copies of k, the empty set included.
/// Copies are distinct subgraphs, so on a multigraph a copy of an edge is a
/// vertex pair rather than an edge-unit.
inline BigInt count_packings(const Multigraph& g, const Multigraph& k, std::optional<std::size_t> copy_limit = std::nullopt) {
  detail::require_mask_size(g, 64);
  if (k.size() > g.size()) return 1;
  const CopyList list = enumerate_copies(g, k, copy_limit);
  if (!list.complete) throw Error(ErrorKind::limit_exceeded, "copy enumeration hit its limit");
  std::vector<std::vector<std::uint64_t>> by_min(g.size());
  for (const auto& c : list.copies) by_min[c.vertices[0]].push_back(c.vertices.mask());
  std::unordered_map<std::uint64_t, BigInt> memo;
  std::function<BigInt(std::uint64_t)> go = [&](std::uint64_t avail) -> BigInt {
    if (avail == 0) return 1;
    if (auto it = memo.find(avail); it != memo.end()) return it->second;
    const auto v = static_cast<Vertex>(std::countr_zero(avail));
    const std::uint64_t bit = std::uint64_t{1} << v;
    BigInt total = go(avail & ~bit);
    // Copies whose smallest vertex is v; copies with a smaller vertex are already excluded.
    for (auto mask : by_min[v]) {
      if ((mask & avail) == mask) total += go(avail & ~mask);
    }
    memo.emplace(avail, total);
    return total;
  };
  const std::uint64_t all = g.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.size()) - 1;
  return go(all);
}

}  // namespace gdom
