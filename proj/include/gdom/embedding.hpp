#pragma once

// Copies of H in G: injective vertex maps that carry every edge of H onto
// at least as many parallel edges of G. Weights are ignored here; copies are
// structural.

#include "gdom/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

namespace gdom {

/// embedding[y] = image in G of vertex y of H.
using Embedding = std::vector<Vertex>;

struct CopyList {
  /// Distinct copy-subgraphs in discovery order (unit weights).
  std::vector<Subgraph> copies;
  std::vector<Embedding> embeddings;
  /// embedding_copy[i] = index into `copies` of the subgraph traced by embeddings[i].
  std::vector<std::size_t> embedding_copy;
  /// False when the search stopped at the copy limit.
  bool complete = true;
};

/// Pairs (x in G, y in H) such that some embedding sends y to x.
class RootedCopyRelation {
 public:
  RootedCopyRelation(std::size_t g_size, std::size_t h_size)
      : g_size_(g_size), h_size_(h_size), bits_(g_size * h_size, 0) {}

  [[nodiscard]] bool contains(Vertex x, Vertex y) const { return bits_[x * h_size_ + y] != 0; }
  void insert(Vertex x, Vertex y) { bits_[x * h_size_ + y] = 1; }
  [[nodiscard]] std::size_t g_size() const noexcept { return g_size_; }
  [[nodiscard]] std::size_t h_size() const noexcept { return h_size_; }

  [[nodiscard]] std::size_t count() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
  }

  [[nodiscard]] bool empty() const { return count() == 0; }

  friend bool operator==(const RootedCopyRelation&, const RootedCopyRelation&) = default;

 private:
  std::size_t g_size_;
  std::size_t h_size_;
  std::vector<std::uint8_t> bits_;
};

namespace detail {

/// Placement order for H's vertices: start at a smallest-degree vertex, then
/// repeatedly take the frontier vertex of smallest degree (ties by index).
inline std::vector<Vertex> placement_order(const Multigraph& h) {
  const auto deg = h.degrees();
  const auto nb = h.neighbors();
  std::vector<Vertex> order;
  std::vector<bool> placed(h.size(), false);
  while (order.size() < h.size()) {
    std::optional<Vertex> best;
    const bool any_placed = !order.empty();
    for (Vertex v = 0; v < h.size(); ++v) {
      if (placed[v]) continue;
      if (any_placed) {
        const bool frontier = std::any_of(nb[v].begin(), nb[v].end(), [&](Vertex w) { return placed[w]; });
        if (!frontier) continue;
      }
      if (!best || deg[v] < deg[*best]) best = v;
    }
    placed[*best] = true;
    order.push_back(*best);
  }
  return order;
}

/// Edge multiset key for a copy traced by `emb`.
inline Subgraph trace_copy(const Multigraph& h, const Embedding& emb) {
  Subgraph s;
  s.vertices = VertexSet(std::vector<Vertex>(emb.begin(), emb.end()));
  std::map<std::pair<Vertex, Vertex>, std::uint64_t> mult;
  for (const auto& e : h.edges()) {
    Vertex a = emb[e.u];
    Vertex b = emb[e.v];
    if (b < a) std::swap(a, b);
    mult[{a, b}] += e.multiplicity;
  }
  for (const auto& [k, m] : mult) s.edges.push_back(Edge{k.first, k.second, m, 1});
  return s;
}

inline auto copy_key(const Subgraph& s) {
  std::vector<std::tuple<Vertex, Vertex, std::uint64_t>> es;
  for (const auto& e : s.edges) es.emplace_back(e.u, e.v, e.multiplicity);
  return std::make_pair(s.vertices.items(), es);
}

}  // namespace detail

/// Calls `visit` on every embedding of h into g in deterministic DFS order;
/// stops early when `visit` returns false.
inline void for_each_embedding(const Multigraph& g, const Multigraph& h, const std::function<bool(const Embedding&)>& visit) {
  if (h.size() > g.size()) return;
  const auto order = detail::placement_order(h);
  const auto gm = g.multiplicity_matrix();
  const auto hm = h.multiplicity_matrix();
  const auto gdeg = g.degrees();
  const auto hdeg = h.degrees();
  const std::size_t k = order.size();
  // For each placement step, the earlier-placed H neighbors that constrain it.
  std::vector<std::vector<Vertex>> back(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (hm[order[i]][order[j]] > 0) back[i].push_back(order[j]);
    }
  }
  Embedding emb(h.size(), 0);
  std::vector<bool> used(g.size(), false);
  bool stop = false;
  std::function<void(std::size_t)> extend = [&](std::size_t i) {
    if (stop) return;
    if (i == k) {
      if (!visit(emb)) stop = true;
      return;
    }
    const Vertex y = order[i];
    for (Vertex x = 0; x < g.size() && !stop; ++x) {
      if (used[x] || gdeg[x] < hdeg[y]) continue;
      bool ok = true;
      for (Vertex a : back[i]) {
        if (gm[x][emb[a]] < hm[y][a]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      emb[y] = x;
      used[x] = true;
      extend(i + 1);
      used[x] = false;
    }
  };
  extend(0);
}

/// All distinct copies of h in g, plus the embeddings that generate them.
inline CopyList enumerate_copies(const Multigraph& g, const Multigraph& h, std::optional<std::size_t> limit = std::nullopt) {
  if (h.size() > g.size()) {
    throw Error(ErrorKind::size_bound, "H has more vertices than G");
  }
  CopyList out;
  std::map<decltype(detail::copy_key(Subgraph{})), std::size_t> seen;
  for_each_embedding(g, h, [&](const Embedding& emb) {
    Subgraph s = detail::trace_copy(h, emb);
    auto key = detail::copy_key(s);
    auto it = seen.find(key);
    std::size_t idx = 0;
    if (it == seen.end()) {
      if (limit && out.copies.size() >= *limit) {
        out.complete = false;
        return false;
      }
      idx = out.copies.size();
      seen.emplace(std::move(key), idx);
      out.copies.push_back(std::move(s));
    } else {
      idx = it->second;
    }
    out.embeddings.push_back(emb);
    out.embedding_copy.push_back(idx);
    return true;
  });
  return out;
}

inline RootedCopyRelation rooted_copy_relation(const Multigraph& g, const Multigraph& h) {
  RootedCopyRelation rel(g.size(), h.size());
  if (h.size() > g.size()) return rel;
  for_each_embedding(g, h, [&](const Embedding& emb) {
    for (Vertex y = 0; y < h.size(); ++y) rel.insert(emb[y], y);
    return true;
  });
  return rel;
}

inline bool has_copy(const Multigraph& g, const Multigraph& h) {
  bool found = false;
  for_each_embedding(g, h, [&](const Embedding&) {
    found = true;
    return false;
  });
  return found;
}

inline bool covers_every_vertex(const Multigraph& g, const Multigraph& h) {
  std::vector<bool> covered(g.size(), false);
  std::size_t remaining = g.size();
  for_each_embedding(g, h, [&](const Embedding& emb) {
    for (Vertex x : emb) {
      if (!covered[x]) {
        covered[x] = true;
        --remaining;
      }
    }
    return remaining > 0;
  });
  return remaining == 0;
}

/// Checks that `s` is a subgraph of g isomorphic to h (edge multiset exact).
inline bool is_copy_of(const Multigraph& g, const Multigraph& h, const Subgraph& s) {
  try {
    require_subgraph(g, s);
  } catch (const Error&) {
    return false;
  }
  if (s.vertices.size() != h.size()) return false;
  std::vector<Edge> es;
  std::vector<Vertex> idx(g.size(), 0);
  for (std::size_t i = 0; i < s.vertices.size(); ++i) idx[s.vertices[i]] = static_cast<Vertex>(i);
  for (const auto& e : s.edges) es.push_back(Edge{idx[e.u], idx[e.v], e.multiplicity, 1});
  Multigraph as_graph;
  try {
    as_graph = Multigraph::create(s.vertices.size(), std::move(es));
  } catch (const Error&) {
    return false;
  }
  const Multigraph hu = h.unweighted();
  if (as_graph.edge_units() != hu.edge_units()) return false;
  bool iso = false;
  // An embedding of h into the candidate with equal edge-unit counts is an isomorphism.
  for_each_embedding(as_graph, hu, [&](const Embedding&) {
    iso = true;
    return false;
  });
  return iso;
}

}  // namespace gdom
