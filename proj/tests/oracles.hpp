#pragma once

// Brute-force reference implementations. They share no algorithmic code with
// the library: everything here enumerates subsets, maps or permutations.

#include "gdom/graph.hpp"
#include "gdom/numeric.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

namespace oracle {

using gdom::BigInt;
using gdom::Multigraph;
using gdom::Rational;
using gdom::Vertex;

/// One entry per edge-unit.
struct Unit {
  Vertex u;
  Vertex v;
};

inline std::vector<Unit> units(const Multigraph& g) {
  std::vector<Unit> out;
  for (const auto& e : g.edges()) {
    for (std::uint64_t k = 0; k < e.multiplicity; ++k) out.push_back({e.u, e.v});
  }
  return out;
}

struct Dsu {
  std::vector<std::size_t> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  bool join(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

/// Rank of the edge subset `mask` in the cycle matroid.
inline std::size_t rank_of(std::size_t n, const std::vector<Unit>& us, std::uint64_t mask) {
  Dsu d(n);
  std::size_t r = 0;
  for (std::size_t i = 0; i < us.size(); ++i) {
    if (((mask >> i) & 1U) != 0 && d.join(us[i].u, us[i].v)) ++r;
  }
  return r;
}

inline BigInt spanning_trees(const Multigraph& g) {
  const auto us = units(g);
  BigInt count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << us.size()); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) == g.size() - 1 && rank_of(g.size(), us, mask) == g.size() - 1) {
      ++count;
    }
  }
  return count;
}

inline BigInt forests(const Multigraph& g) {
  const auto us = units(g);
  BigInt count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << us.size()); ++mask) {
    if (rank_of(g.size(), us, mask) == static_cast<std::size_t>(__builtin_popcountll(mask))) ++count;
  }
  return count;
}

/// Orientations of every edge-unit with no directed cycle.
inline BigInt acyclic_orientations(const Multigraph& g) {
  const auto us = units(g);
  const std::size_t n = g.size();
  BigInt count = 0;
  for (std::uint64_t dir = 0; dir < (std::uint64_t{1} << us.size()); ++dir) {
    std::vector<std::vector<Vertex>> out(n);
    std::vector<std::size_t> indeg(n, 0);
    for (std::size_t i = 0; i < us.size(); ++i) {
      const bool fwd = ((dir >> i) & 1U) != 0;
      const Vertex a = fwd ? us[i].u : us[i].v;
      const Vertex b = fwd ? us[i].v : us[i].u;
      out[a].push_back(b);
      ++indeg[b];
    }
    std::vector<Vertex> ready;
    for (Vertex v = 0; v < n; ++v) {
      if (indeg[v] == 0) ready.push_back(v);
    }
    std::size_t seen = 0;
    while (!ready.empty()) {
      const Vertex v = ready.back();
      ready.pop_back();
      ++seen;
      for (Vertex w : out[v]) {
        if (--indeg[w] == 0) ready.push_back(w);
      }
    }
    if (seen == n) ++count;
  }
  return count;
}

/// Whitney rank expansion: T(x, y) = sum_A (x-1)^{r(E)-r(A)} (y-1)^{|A|-r(A)}.
inline Rational tutte_at(const Multigraph& g, const Rational& x, const Rational& y) {
  const auto us = units(g);
  const std::size_t full = g.size() - 1;
  Rational total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << us.size()); ++mask) {
    const std::size_t r = rank_of(g.size(), us, mask);
    total += gdom::ipow(Rational(x - 1), full - r) *
             gdom::ipow(Rational(y - 1), static_cast<std::size_t>(__builtin_popcountll(mask)) - r);
  }
  return total;
}

inline bool adjacent(const Multigraph& g, Vertex a, Vertex b) { return g.multiplicity(a, b) > 0; }

inline BigInt independent_sets(const Multigraph& g) {
  BigInt count = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.size()); ++s) {
    bool ok = true;
    for (const auto& e : g.edges()) {
      if (((s >> e.u) & 1U) != 0 && ((s >> e.v) & 1U) != 0) ok = false;
    }
    if (ok) ++count;
  }
  return count;
}

/// All q^n maps, keeping the proper ones.
inline BigInt colorings(const Multigraph& g, std::uint64_t q) {
  std::vector<std::uint64_t> c(g.size(), 0);
  BigInt count = 0;
  while (true) {
    bool ok = true;
    for (const auto& e : g.edges()) {
      if (c[e.u] == c[e.v]) ok = false;
    }
    if (ok) ++count;
    std::size_t i = 0;
    while (i < c.size() && ++c[i] == q) c[i++] = 0;
    if (i == c.size()) break;
  }
  return count;
}

/// Sum over all maps V(G) -> V(F) preserving adjacency of the product of vertex weights.
inline Rational homomorphisms(const Multigraph& g, const std::vector<std::vector<bool>>& f_adj,
                              const std::vector<Rational>& w) {
  const std::size_t k = w.size();
  std::vector<std::size_t> c(g.size(), 0);
  Rational total = 0;
  while (true) {
    bool ok = true;
    for (const auto& e : g.edges()) {
      if (!f_adj[c[e.u]][c[e.v]]) ok = false;
    }
    if (ok) {
      Rational p = 1;
      for (auto x : c) p *= w[x];
      total += p;
    }
    std::size_t i = 0;
    while (i < c.size() && ++c[i] == k) c[i++] = 0;
    if (i == c.size()) break;
  }
  return total;
}

/// Edge-unit subsets with pairwise disjoint endpoints.
inline BigInt matchings(const Multigraph& g) {
  const auto us = units(g);
  BigInt count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << us.size()); ++mask) {
    std::uint64_t used = 0;
    bool ok = true;
    for (std::size_t i = 0; i < us.size() && ok; ++i) {
      if (((mask >> i) & 1U) == 0) continue;
      const std::uint64_t bits = (std::uint64_t{1} << us[i].u) | (std::uint64_t{1} << us[i].v);
      if ((used & bits) != 0) ok = false;
      used |= bits;
    }
    if (ok) ++count;
  }
  return count;
}

/// Permutations preserving the weighted multiplicity structure.
inline BigInt automorphism_count(const Multigraph& g) {
  std::vector<Vertex> p(g.size());
  std::iota(p.begin(), p.end(), 0);
  BigInt count = 0;
  do {
    bool ok = true;
    for (const auto& e : g.edges()) {
      bool found = false;
      for (const auto& f : g.edges()) {
        const bool same = (f.u == p[e.u] && f.v == p[e.v]) || (f.u == p[e.v] && f.v == p[e.u]);
        if (same && f.multiplicity == e.multiplicity && f.weight == e.weight) found = true;
      }
      if (!found) ok = false;
    }
    if (ok) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

/// Orbit partition of Aut(G), as orbit_id per vertex (smallest member).
inline std::vector<Vertex> orbit_representatives(const Multigraph& g) {
  std::vector<Vertex> rep(g.size());
  std::iota(rep.begin(), rep.end(), 0);
  std::vector<Vertex> p(g.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (const auto& e : g.edges()) {
      if (g.multiplicity(p[e.u], p[e.v]) != g.multiplicity(e.u, e.v)) ok = false;
    }
    if (!ok) continue;
    for (Vertex v = 0; v < g.size(); ++v) rep[p[v]] = std::min(rep[p[v]], rep[v]);
  } while (std::next_permutation(p.begin(), p.end()));
  for (Vertex v = 0; v < g.size(); ++v) rep[v] = rep[rep[v]];
  return rep;
}

/// Every injective map H -> G that sends each H edge bundle onto a G pair with at
/// least that multiplicity.
inline std::size_t embeddings(const Multigraph& g, const Multigraph& h) {
  std::vector<Vertex> img(h.size());
  std::vector<bool> used(g.size(), false);
  std::size_t count = 0;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == h.size()) {
      for (const auto& e : h.edges()) {
        if (g.multiplicity(img[e.u], img[e.v]) < h.multiplicity(e.u, e.v)) return;
      }
      ++count;
      return;
    }
    for (Vertex x = 0; x < g.size(); ++x) {
      if (used[x]) continue;
      used[x] = true;
      img[i] = x;
      go(i + 1);
      used[x] = false;
    }
  };
  go(0);
  return count;
}

/// Reference graph6 decoder for simple graphs with n <= 62.
inline std::vector<std::pair<Vertex, Vertex>> graph6_edges(const std::string& text, std::size_t& n) {
  n = static_cast<std::size_t>(text.at(0) - 63);
  std::vector<int> bits;
  for (std::size_t i = 1; i < text.size(); ++i) {
    const int v = text[i] - 63;
    for (int b = 5; b >= 0; --b) bits.push_back((v >> b) & 1);
  }
  std::vector<std::pair<Vertex, Vertex>> out;
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (bits.at(k++) != 0) out.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return out;
}

using Float200 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<200>>;

/// Sign of a^{1/m} - b^{1/n} at 200 bits; only meaningful when the gap is not tiny.
inline int compare_roots_float(const Rational& a, std::uint64_t m, const Rational& b, std::uint64_t n) {
  auto value = [](const Rational& r) {
    return Float200(boost::multiprecision::numerator(r).str()) / Float200(boost::multiprecision::denominator(r).str());
  };
  const Float200 x = boost::multiprecision::log(value(a)) / m;
  const Float200 y = boost::multiprecision::log(value(b)) / n;
  if (x > y) return 1;
  if (x < y) return -1;
  return 0;
}

}  // namespace oracle
