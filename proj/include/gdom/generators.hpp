#pragma once

// Random and exhaustive graph sources, and the pair generator used by hunts.

#include "gdom/embedding.hpp"
#include "gdom/graph.hpp"
#include "gdom/relations.hpp"
#include "gdom/rng.hpp"
#include "gdom/symmetry.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace gdom {

/// Random connected simple graph: a random recursive tree plus each further
/// pair with probability num/den, then a random relabeling.
inline Multigraph random_connected_graph(SplitMix64& rng, std::size_t n, std::uint64_t num = 1, std::uint64_t den = 3) {
  if (n == 0) throw Error(ErrorKind::invalid_argument, "graph needs at least one vertex");
  std::vector<Vertex> perm(n);
  for (Vertex i = 0; i < n; ++i) perm[i] = i;
  rng.shuffle(perm);
  std::set<std::pair<Vertex, Vertex>> pairs;
  for (Vertex i = 1; i < n; ++i) {
    const auto j = static_cast<Vertex>(rng.below(i));
    pairs.emplace(std::min(perm[i], perm[j]), std::max(perm[i], perm[j]));
  }
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (!pairs.count({a, b}) && rng.chance(num, den)) pairs.emplace(a, b);
    }
  }
  std::vector<Edge> es;
  for (auto [a, b] : pairs) es.push_back(Edge{a, b, 1, 1});
  return Multigraph::create(n, std::move(es));
}

/// Random connected subgraph of g on `k` vertices: grow a connected vertex
/// set, keep a spanning tree of it and each other induced edge with
/// probability 1/2. Returned relabeled to 0..k-1.
inline Multigraph random_connected_subgraph(SplitMix64& rng, const Multigraph& g, std::size_t k) {
  k = std::min(k, g.size());
  const auto nb = g.neighbors();
  std::vector<Vertex> chosen{static_cast<Vertex>(rng.below(g.size()))};
  std::vector<int> index(g.size(), -1);
  index[chosen[0]] = 0;
  std::vector<std::pair<Vertex, Vertex>> tree;
  while (chosen.size() < k) {
    std::vector<std::pair<Vertex, Vertex>> frontier;
    for (Vertex v : chosen) {
      for (Vertex w : nb[v]) {
        if (index[w] < 0) frontier.emplace_back(v, w);
      }
    }
    const auto [from, to] = frontier[rng.below(frontier.size())];
    index[to] = static_cast<int>(chosen.size());
    chosen.push_back(to);
    tree.emplace_back(from, to);
  }
  std::set<std::pair<Vertex, Vertex>> kept;
  for (auto [a, b] : tree) kept.emplace(std::min(a, b), std::max(a, b));
  for (const auto& e : g.edges()) {
    if (index[e.u] >= 0 && index[e.v] >= 0 && !kept.count({e.u, e.v}) && rng.chance(1, 2)) kept.emplace(e.u, e.v);
  }
  std::vector<Edge> es;
  for (auto [a, b] : kept) es.push_back(Edge{static_cast<Vertex>(index[a]), static_cast<Vertex>(index[b]), 1, 1});
  return Multigraph::create(k, std::move(es));
}

/// Vertex-transitive graphs with at most max_n vertices.
inline std::vector<std::pair<std::string, Multigraph>> transitive_catalog(std::size_t max_n) {
  std::vector<std::pair<std::string, Multigraph>> out;
  std::set<CanonicalCode> seen;
  auto add = [&](std::string name, const Multigraph& g) {
    if (g.size() <= max_n && seen.insert(canonical_code(g)).second) out.emplace_back(std::move(name), g);
  };
  for (std::size_t n = 2; n <= max_n; ++n) add("K" + std::to_string(n), graphs::complete(n));
  for (std::size_t n = 3; n <= max_n; ++n) add("C" + std::to_string(n), graphs::cycle(n));
  for (std::size_t d = 2; (std::size_t{1} << d) <= max_n; ++d) add("Q" + std::to_string(d), graphs::hypercube(d));
  for (std::size_t n = 4; n <= max_n; ++n) {
    // Every jump set {1} union S with S a subset of 2..n/2.
    const std::size_t half = n / 2;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (half - 1)); ++mask) {
      std::vector<std::size_t> jumps{1};
      std::string name = "Circ" + std::to_string(n) + "(1";
      for (std::size_t j = 2; j <= half; ++j) {
        if ((mask >> (j - 2)) & 1U) {
          jumps.push_back(j);
          name += "," + std::to_string(j);
        }
      }
      add(name + ")", graphs::circulant(n, jumps));
    }
  }
  return out;
}

/// All connected simple graphs on n vertices up to isomorphism.
inline std::vector<Multigraph> connected_graphs(std::size_t n) {
  if (n == 1) return {graphs::single_vertex()};
  std::map<CanonicalCode, Multigraph> found;
  for (const auto& smaller : connected_graphs(n - 1)) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
      std::vector<Edge> es = smaller.edges();
      for (Vertex v = 0; v + 1 < n; ++v) {
        if ((mask >> v) & 1U) es.push_back(Edge{v, static_cast<Vertex>(n - 1), 1, 1});
      }
      Multigraph g = Multigraph::create(n, std::move(es));
      found.emplace(canonical_code(g), std::move(g));
    }
  }
  std::vector<Multigraph> out;
  for (auto& [code, g] : found) out.push_back(std::move(g));
  return out;
}

/// All connected simple graphs with at most max_n vertices.
inline std::vector<Multigraph> connected_graphs_up_to(std::size_t max_n) {
  std::vector<Multigraph> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto level = connected_graphs(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

/// All connected loopless multigraphs with at most `max_units` edge-units, up
/// to isomorphism; built one edge-unit at a time.
inline std::vector<Multigraph> connected_multigraphs_by_units(std::uint64_t max_units) {
  std::vector<Multigraph> out{graphs::single_vertex()};
  std::vector<Multigraph> layer{graphs::single_vertex()};
  for (std::uint64_t units = 1; units <= max_units; ++units) {
    std::map<CanonicalCode, Multigraph> next;
    for (const auto& g : layer) {
      const std::size_t n = g.size();
      // Either a new pendant vertex or one more unit between existing vertices.
      for (Vertex v = 0; v < n; ++v) {
        std::vector<Edge> es = g.edges();
        es.push_back(Edge{v, static_cast<Vertex>(n), 1, 1});
        Multigraph h = Multigraph::create(n + 1, std::move(es));
        next.emplace(canonical_code(h), std::move(h));
      }
      for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
          std::vector<Edge> es = g.edges();
          es.push_back(Edge{a, b, 1, 1});
          Multigraph h = Multigraph::create(n, std::move(es));
          next.emplace(canonical_code(h), std::move(h));
        }
      }
    }
    layer.clear();
    for (auto& [code, g] : next) layer.push_back(std::move(g));
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

enum class PairStrategy { overlay_copies, transitive_catalog, random_connected_pair };

inline const char* to_string(PairStrategy s) {
  switch (s) {
    case PairStrategy::overlay_copies: return "overlay_copies";
    case PairStrategy::transitive_catalog: return "transitive_catalog";
    case PairStrategy::random_connected_pair: return "random_connected_pair";
  }
  return "?";
}

inline PairStrategy parse_pair_strategy(std::string_view name) {
  if (name == "overlay_copies") return PairStrategy::overlay_copies;
  if (name == "transitive_catalog") return PairStrategy::transitive_catalog;
  if (name == "random_connected_pair") return PairStrategy::random_connected_pair;
  throw Error(ErrorKind::invalid_argument, "unknown pair strategy: " + std::string(name));
}

struct PairGenerator {
  PairStrategy strategy = PairStrategy::random_connected_pair;
  std::uint64_t seed = 0;
  std::size_t min_n = 2;
  std::size_t max_n = 8;
  std::size_t attempt_cap = 1000;
};

/// A pair whose domination was re-proved by the flow decider.
struct GeneratedPair {
  Multigraph g;
  Multigraph h;
  CouplingCertificate certificate;
  std::uint64_t trial = 0;
  std::size_t attempts = 0;
};

namespace detail {

/// G as a union of copies of H: each new copy reuses between one and |H|-1
/// existing vertices, so G stays connected and every vertex lies in a copy.
inline Multigraph overlay_copies(SplitMix64& rng, const Multigraph& h, std::size_t target_n) {
  std::set<std::pair<Vertex, Vertex>> pairs;
  auto place = [&](const std::vector<Vertex>& image) {
    for (const auto& e : h.edges()) pairs.emplace(std::min(image[e.u], image[e.v]), std::max(image[e.u], image[e.v]));
  };
  std::vector<Vertex> first(h.size());
  for (Vertex i = 0; i < h.size(); ++i) first[i] = i;
  place(first);
  std::size_t n = h.size();
  while (n < target_n) {
    const std::size_t fresh = std::min<std::size_t>(rng.between(1, std::max<std::size_t>(1, h.size() - 1)), target_n - n);
    const std::size_t reused = h.size() - fresh;
    std::vector<Vertex> old(n);
    for (Vertex i = 0; i < n; ++i) old[i] = i;
    rng.shuffle(old);
    std::vector<Vertex> image;
    for (std::size_t i = 0; i < reused; ++i) image.push_back(old[i]);
    for (std::size_t i = 0; i < fresh; ++i) image.push_back(static_cast<Vertex>(n + i));
    rng.shuffle(image);
    place(image);
    n += fresh;
  }
  std::vector<Edge> es;
  for (auto [a, b] : pairs) es.push_back(Edge{a, b, 1, 1});
  return Multigraph::create(n, std::move(es));
}

}  // namespace detail

/// Deterministic in (gen, trial). Rejection-samples until the flow decider
/// certifies G dominates H.
inline GeneratedPair generate_pair(const PairGenerator& gen, std::uint64_t trial = 0) {
  if (gen.min_n < 1 || gen.max_n < gen.min_n) throw Error(ErrorKind::invalid_argument, "bad size bounds");
  SplitMix64 rng = SplitMix64::for_trial(gen.seed, trial);
  const auto catalog = gen.strategy == PairStrategy::transitive_catalog ? transitive_catalog(gen.max_n)
                                                                        : std::vector<std::pair<std::string, Multigraph>>{};
  for (std::size_t attempt = 1; attempt <= gen.attempt_cap; ++attempt) {
    Multigraph g;
    Multigraph h;
    switch (gen.strategy) {
      case PairStrategy::overlay_copies: {
        const std::size_t hn = rng.between(std::min<std::size_t>(2, gen.max_n), std::min<std::size_t>(5, gen.max_n));
        h = random_connected_graph(rng, hn, 1, 2);
        g = detail::overlay_copies(rng, h, rng.between(std::max(hn, gen.min_n), gen.max_n));
        break;
      }
      case PairStrategy::transitive_catalog: {
        std::vector<std::size_t> usable;
        for (std::size_t i = 0; i < catalog.size(); ++i) {
          if (catalog[i].second.size() >= gen.min_n) usable.push_back(i);
        }
        if (usable.empty()) throw Error(ErrorKind::invalid_argument, "no catalog graph within the size bounds");
        g = catalog[usable[rng.below(usable.size())]].second;
        h = random_connected_subgraph(rng, g, rng.between(std::min<std::size_t>(2, g.size()), g.size()));
        break;
      }
      case PairStrategy::random_connected_pair: {
        const std::size_t gn = rng.between(gen.min_n, gen.max_n);
        g = random_connected_graph(rng, gn, rng.between(1, 3), 6);
        h = random_connected_subgraph(rng, g, rng.between(std::min<std::size_t>(2, gn), gn));
        break;
      }
    }
    if (auto cert = check_domination(g, h)) return GeneratedPair{g, h, *cert, trial, attempt};
  }
  throw Error(ErrorKind::attempt_cap, "no dominating pair within the attempt cap");
}

}  // namespace gdom
