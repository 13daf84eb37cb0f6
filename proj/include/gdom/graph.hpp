#pragma once

// Finite connected weighted multigraphs, vertex-set surgery (contraction,
// subdivision), Laplacians and cut-edge detection.

#include "gdom/linalg.hpp"
#include "gdom/numeric.hpp"

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace gdom {

using Vertex = std::uint32_t;

/// A bundle of `multiplicity` parallel edge-units joining u < v, all of the same weight.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  std::uint64_t multiplicity = 1;
  Rational weight = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free set of vertex indices.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs) : items_(vs) { normalize(); }
  explicit VertexSet(std::vector<Vertex> vs) : items_(std::move(vs)) { normalize(); }

  static VertexSet range(std::size_t n) {
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), Vertex{0});
    return VertexSet(std::move(all));
  }

  static VertexSet from_mask(std::uint64_t mask) {
    std::vector<Vertex> out;
    for (Vertex v = 0; mask != 0; ++v, mask >>= 1U) {
      if (mask & 1U) out.push_back(v);
    }
    return VertexSet(std::move(out));
  }

  [[nodiscard]] bool contains(Vertex v) const { return std::binary_search(items_.begin(), items_.end(), v); }
  [[nodiscard]] std::size_t size() const noexcept { return items_.size(); }
  [[nodiscard]] bool empty() const noexcept { return items_.empty(); }
  [[nodiscard]] auto begin() const noexcept { return items_.begin(); }
  [[nodiscard]] auto end() const noexcept { return items_.end(); }
  [[nodiscard]] Vertex operator[](std::size_t i) const { return items_[i]; }
  [[nodiscard]] const std::vector<Vertex>& items() const noexcept { return items_; }

  [[nodiscard]] std::uint64_t mask() const {
    std::uint64_t m = 0;
    for (Vertex v : items_) m |= std::uint64_t{1} << v;
    return m;
  }

  [[nodiscard]] VertexSet united(const VertexSet& o) const {
    std::vector<Vertex> out;
    std::set_union(begin(), end(), o.begin(), o.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
  }
  [[nodiscard]] VertexSet intersected(const VertexSet& o) const {
    std::vector<Vertex> out;
    std::set_intersection(begin(), end(), o.begin(), o.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
  }
  [[nodiscard]] VertexSet minus(const VertexSet& o) const {
    std::vector<Vertex> out;
    std::set_difference(begin(), end(), o.begin(), o.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
  }
  [[nodiscard]] bool subset_of(const VertexSet& o) const {
    return std::includes(o.begin(), o.end(), begin(), end());
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  void normalize() {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
  }
  std::vector<Vertex> items_;
};

/// A subgraph of some host multigraph, in the host's vertex labels.
/// Edge bundles may carry smaller multiplicities than the host's.
struct Subgraph {
  VertexSet vertices;
  std::vector<Edge> edges;

  friend bool operator==(const Subgraph&, const Subgraph&) = default;
};

/// Counts side effects of surgery that the resulting graph cannot show.
struct SurgeryLog {
  std::size_t discarded_loops = 0;
};

using LaplacianMatrix = Matrix<Rational>;

namespace detail {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
  std::vector<std::size_t> parent;
};

inline std::vector<Edge> normalize_edges(std::vector<Edge> edges) {
  for (auto& e : edges) {
    if (e.v < e.u) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v, a.weight) < std::tie(b.u, b.v, b.weight);
  });
  std::vector<Edge> out;
  for (auto& e : edges) {
    if (!out.empty() && out.back().u == e.u && out.back().v == e.v && out.back().weight == e.weight) {
      out.back().multiplicity += e.multiplicity;
    } else {
      out.push_back(std::move(e));
    }
  }
  return out;
}

}  // namespace detail

/// Finite connected multigraph with positive rational edge weights.
///
/// Edges are stored as bundles sorted by (u, v, weight); a pair of vertices
/// may carry several bundles only when their weights differ. Loops are never
/// stored.
class Multigraph {
 public:
  /// The one-vertex graph.
  Multigraph() : n_(1) {}

  /// Validates and normalizes; throws on loops, bad endpoints, non-positive
  /// multiplicity or weight, and on disconnected input.
  static Multigraph create(std::size_t vertex_count, std::vector<Edge> edges,
                           std::vector<std::string> labels = {}) {
    if (vertex_count == 0) throw Error(ErrorKind::invalid_argument, "graph needs at least one vertex");
    for (const auto& e : edges) {
      if (e.u >= vertex_count || e.v >= vertex_count) {
        throw Error(ErrorKind::invalid_argument, "edge endpoint out of range");
      }
      if (e.u == e.v) throw Error(ErrorKind::loop_in_input, "loop at vertex " + std::to_string(e.u));
      if (e.multiplicity == 0) throw Error(ErrorKind::invalid_argument, "edge multiplicity must be positive");
      if (e.weight <= 0) throw Error(ErrorKind::invalid_argument, "edge weight must be positive");
    }
    if (!labels.empty() && labels.size() != vertex_count) {
      throw Error(ErrorKind::invalid_argument, "label count does not match vertex count");
    }
    Multigraph g;
    g.n_ = vertex_count;
    g.edges_ = detail::normalize_edges(std::move(edges));
    g.labels_ = std::move(labels);
    if (!g.connected()) throw Error(ErrorKind::disconnected, "graph is not connected");
    return g;
  }

  [[nodiscard]] std::size_t size() const noexcept { return n_; }
  [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }
  [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }

  [[nodiscard]] std::uint64_t edge_units() const {
    std::uint64_t total = 0;
    for (const auto& e : edges_) total += e.multiplicity;
    return total;
  }

  /// Total multiplicity over all bundles joining u and v.
  [[nodiscard]] std::uint64_t multiplicity(Vertex u, Vertex v) const {
    if (v < u) std::swap(u, v);
    std::uint64_t m = 0;
    for (const auto& e : edges_) {
      if (e.u == u && e.v == v) m += e.multiplicity;
    }
    return m;
  }

  [[nodiscard]] bool is_simple() const {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (edges_[i].multiplicity > 1) return false;
      if (i > 0 && edges_[i - 1].u == edges_[i].u && edges_[i - 1].v == edges_[i].v) return false;
    }
    return true;
  }

  [[nodiscard]] bool is_unweighted() const {
    return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.weight == 1; });
  }

  /// Unweighted multiplicity matrix; entry (u, v) counts edge-units between u and v.
  [[nodiscard]] std::vector<std::vector<std::uint64_t>> multiplicity_matrix() const {
    std::vector<std::vector<std::uint64_t>> m(n_, std::vector<std::uint64_t>(n_, 0));
    for (const auto& e : edges_) {
      m[e.u][e.v] += e.multiplicity;
      m[e.v][e.u] += e.multiplicity;
    }
    return m;
  }

  /// Neighbor bitmasks of the underlying simple graph; requires size() <= 64.
  [[nodiscard]] std::vector<std::uint64_t> adjacency_masks() const {
    if (n_ > 64) throw Error(ErrorKind::size_bound, "bitmask algorithms need at most 64 vertices");
    std::vector<std::uint64_t> adj(n_, 0);
    for (const auto& e : edges_) {
      adj[e.u] |= std::uint64_t{1} << e.v;
      adj[e.v] |= std::uint64_t{1} << e.u;
    }
    return adj;
  }

  [[nodiscard]] std::vector<std::vector<Vertex>> neighbors() const {
    std::vector<std::vector<Vertex>> nb(n_);
    for (const auto& e : edges_) {
      nb[e.u].push_back(e.v);
      nb[e.v].push_back(e.u);
    }
    for (auto& l : nb) {
      std::sort(l.begin(), l.end());
      l.erase(std::unique(l.begin(), l.end()), l.end());
    }
    return nb;
  }

  /// Degree counted with multiplicity.
  [[nodiscard]] std::vector<std::uint64_t> degrees() const {
    std::vector<std::uint64_t> d(n_, 0);
    for (const auto& e : edges_) {
      d[e.u] += e.multiplicity;
      d[e.v] += e.multiplicity;
    }
    return d;
  }

  /// Same graph with every weight set to 1.
  [[nodiscard]] Multigraph unweighted() const {
    std::vector<Edge> es = edges_;
    for (auto& e : es) e.weight = 1;
    Multigraph g;
    g.n_ = n_;
    g.edges_ = detail::normalize_edges(std::move(es));
    g.labels_ = labels_;
    return g;
  }

  /// Same graph with every weight multiplied by `factor` (> 0).
  [[nodiscard]] Multigraph scaled(const Rational& factor) const {
    if (factor <= 0) throw Error(ErrorKind::invalid_argument, "scale factor must be positive");
    std::vector<Edge> es = edges_;
    for (auto& e : es) e.weight *= factor;
    return create(n_, std::move(es), labels_);
  }

  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  [[nodiscard]] bool connected() const {
    detail::UnionFind uf(n_);
    std::size_t comps = n_;
    for (const auto& e : edges_) {
      if (uf.unite(e.u, e.v)) --comps;
    }
    return comps == 1;
  }

  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
};

namespace detail {

/// Relabels through `map` (old vertex -> new vertex), dropping loops.
inline Multigraph quotient(const Multigraph& g, const std::vector<Vertex>& map, std::size_t new_n,
                           SurgeryLog* log) {
  std::vector<Edge> es;
  es.reserve(g.edges().size());
  std::size_t loops = 0;
  for (const auto& e : g.edges()) {
    const Vertex a = map[e.u];
    const Vertex b = map[e.v];
    if (a == b) {
      loops += e.multiplicity;
      continue;
    }
    es.push_back(Edge{a, b, e.multiplicity, e.weight});
  }
  if (log != nullptr) log->discarded_loops += loops;
  return Multigraph::create(new_n, std::move(es));
}

/// Collapses each union-find class to one vertex placed at the position of
/// its smallest member; order of the remaining vertices is preserved.
inline Multigraph collapse_classes(const Multigraph& g, UnionFind& uf, SurgeryLog* log) {
  const std::size_t n = g.size();
  std::vector<Vertex> map(n);
  std::vector<Vertex> rep_index(n, 0);
  std::size_t next = 0;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t root = uf.find(v);
    if (root == v) rep_index[v] = static_cast<Vertex>(next++);
  }
  for (std::size_t v = 0; v < n; ++v) map[v] = rep_index[uf.find(v)];
  return quotient(g, map, next, log);
}

}  // namespace detail

/// G/W: identifies every vertex of `w` into one vertex. Parallel edges are
/// kept, loops are dropped (and counted in `log`).
inline Multigraph contract_vertices(const Multigraph& g, const VertexSet& w, SurgeryLog* log = nullptr) {
  if (w.empty()) throw Error(ErrorKind::empty_set, "cannot contract an empty vertex set");
  for (Vertex v : w) {
    if (v >= g.size()) throw Error(ErrorKind::invalid_argument, "vertex out of range");
  }
  detail::UnionFind uf(g.size());
  for (Vertex v : w) uf.unite(w[0], v);
  return detail::collapse_classes(g, uf, log);
}

/// G_A := G/(V \ A), with G_V = G.
inline Multigraph contract_complement(const Multigraph& g, const VertexSet& a, SurgeryLog* log = nullptr) {
  const VertexSet complement = VertexSet::range(g.size()).minus(a);
  if (complement.empty()) return g;
  return contract_vertices(g, complement, log);
}

/// Throws unless `h` is a subgraph of `g` (multiplicities dominated pairwise).
inline void require_subgraph(const Multigraph& g, const Subgraph& h) {
  for (Vertex v : h.vertices) {
    if (v >= g.size()) throw Error(ErrorKind::subgraph_mismatch, "subgraph vertex out of range");
  }
  std::vector<std::tuple<Vertex, Vertex, std::uint64_t>> need;
  for (const auto& e : h.edges) {
    Vertex a = std::min(e.u, e.v);
    Vertex b = std::max(e.u, e.v);
    if (a == b || !h.vertices.contains(a) || !h.vertices.contains(b)) {
      throw Error(ErrorKind::subgraph_mismatch, "subgraph edge leaves its vertex set");
    }
    need.emplace_back(a, b, e.multiplicity);
  }
  std::sort(need.begin(), need.end());
  for (std::size_t i = 0; i < need.size();) {
    auto [a, b, m] = need[i];
    std::uint64_t total = 0;
    std::size_t j = i;
    while (j < need.size() && std::get<0>(need[j]) == a && std::get<1>(need[j]) == b) total += std::get<2>(need[j++]);
    if (g.multiplicity(a, b) < total) {
      throw Error(ErrorKind::subgraph_mismatch, "subgraph uses more parallel edges than the host has");
    }
    i = j;
  }
}

/// G//H: contracts every edge of the subgraph `h`.
inline Multigraph contract_subgraph_edges(const Multigraph& g, const Subgraph& h, SurgeryLog* log = nullptr) {
  require_subgraph(g, h);
  detail::UnionFind uf(g.size());
  for (const auto& e : h.edges) uf.unite(e.u, e.v);
  return detail::collapse_classes(g, uf, log);
}

/// Replaces one unit of edge bundle `edge_index` by a 2-path through a new
/// vertex numbered size(). Both halves keep the bundle's weight.
inline Multigraph subdivide_edge(const Multigraph& g, std::size_t edge_index) {
  if (edge_index >= g.edges().size()) throw Error(ErrorKind::missing_edge, "no edge bundle " + std::to_string(edge_index));
  std::vector<Edge> es = g.edges();
  const Edge e = es[edge_index];
  if (--es[edge_index].multiplicity == 0) es.erase(es.begin() + static_cast<std::ptrdiff_t>(edge_index));
  const auto z = static_cast<Vertex>(g.size());
  es.push_back(Edge{e.u, z, 1, e.weight});
  es.push_back(Edge{e.v, z, 1, e.weight});
  std::vector<std::string> labels = g.labels();
  if (!labels.empty()) labels.push_back("s" + std::to_string(z));
  return Multigraph::create(g.size() + 1, std::move(es), std::move(labels));
}

/// Index of the first bundle joining u and v, if any.
inline std::optional<std::size_t> find_edge(const Multigraph& g, Vertex u, Vertex v) {
  if (v < u) std::swap(u, v);
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    if (g.edges()[i].u == u && g.edges()[i].v == v) return i;
  }
  return std::nullopt;
}

/// Weighted Laplacian: off-diagonal -(sum of multiplicity * weight), zero row sums.
inline LaplacianMatrix laplacian(const Multigraph& g) {
  LaplacianMatrix lap = LaplacianMatrix::square(g.size(), Rational(0));
  for (const auto& e : g.edges()) {
    const Rational w = e.weight * e.multiplicity;
    lap(e.u, e.v) -= w;
    lap(e.v, e.u) -= w;
    lap(e.u, e.u) += w;
    lap(e.v, e.v) += w;
  }
  return lap;
}

/// Laplacian counting edge-units only (weights ignored); integral.
inline Matrix<BigInt> combinatorial_laplacian(const Multigraph& g) {
  auto lap = Matrix<BigInt>::square(g.size(), BigInt(0));
  for (const auto& e : g.edges()) {
    const BigInt m(e.multiplicity);
    lap(e.u, e.v) -= m;
    lap(e.v, e.u) -= m;
    lap(e.u, e.u) += m;
    lap(e.v, e.v) += m;
  }
  return lap;
}

/// True iff deleting a single edge-unit disconnects the graph.
inline bool has_cut_edge(const Multigraph& g) {
  const std::size_t n = g.size();
  const auto mult = g.multiplicity_matrix();
  const auto nb = g.neighbors();
  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  int timer = 0;
  bool found = false;
  // Iterative DFS; a tree edge (p, v) is a bridge when low[v] > disc[p] and
  // the pair carries a single unit.
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  std::vector<Frame> stack;
  stack.push_back({0, static_cast<Vertex>(n), 0});
  disc[0] = low[0] = timer++;
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next < nb[f.v].size()) {
      const Vertex w = nb[f.v][f.next++];
      if (w == f.parent) continue;
      if (disc[w] < 0) {
        disc[w] = low[w] = timer++;
        stack.push_back({w, f.v, 0});
      } else {
        low[f.v] = std::min(low[f.v], disc[w]);
      }
    } else {
      const Frame done = f;
      stack.pop_back();
      if (!stack.empty()) {
        Frame& p = stack.back();
        low[p.v] = std::min(low[p.v], low[done.v]);
        if (low[done.v] > disc[p.v] && mult[p.v][done.v] == 1) found = true;
      }
    }
  }
  return found;
}

/// Subgraph of `g` induced on `s`, relabeled in increasing order. Throws if disconnected.
inline Multigraph induced_subgraph(const Multigraph& g, const VertexSet& s) {
  std::vector<Vertex> map(g.size(), static_cast<Vertex>(g.size()));
  for (std::size_t i = 0; i < s.size(); ++i) map[s[i]] = static_cast<Vertex>(i);
  std::vector<Edge> es;
  for (const auto& e : g.edges()) {
    if (s.contains(e.u) && s.contains(e.v)) es.push_back(Edge{map[e.u], map[e.v], e.multiplicity, e.weight});
  }
  return Multigraph::create(s.size(), std::move(es));
}

/// Vertices at graph distance <= radius from `root`.
inline VertexSet ball(const Multigraph& g, Vertex root, std::size_t radius) {
  const auto nb = g.neighbors();
  std::vector<std::size_t> dist(g.size(), SIZE_MAX);
  std::vector<Vertex> frontier{root};
  dist[root] = 0;
  std::vector<Vertex> members{root};
  for (std::size_t d = 0; d < radius && !frontier.empty(); ++d) {
    std::vector<Vertex> next;
    for (Vertex v : frontier) {
      for (Vertex w : nb[v]) {
        if (dist[w] == SIZE_MAX) {
          dist[w] = d + 1;
          next.push_back(w);
          members.push_back(w);
        }
      }
    }
    frontier = std::move(next);
  }
  return VertexSet(std::move(members));
}

/// Standard named graphs.
namespace graphs {

inline Multigraph single_vertex() { return Multigraph{}; }

inline Multigraph path(std::size_t n) {
  std::vector<Edge> es;
  for (std::size_t i = 0; i + 1 < n; ++i) es.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1)});
  return Multigraph::create(n, es);
}

inline Multigraph edge() { return path(2); }

inline Multigraph cycle(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::invalid_argument, "cycle needs at least 3 vertices");
  std::vector<Edge> es;
  for (std::size_t i = 0; i < n; ++i) es.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n)});
  return Multigraph::create(n, es);
}

inline Multigraph complete(std::size_t n) {
  std::vector<Edge> es;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) es.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
  }
  return Multigraph::create(n, es);
}

/// K_{1,leaves}; vertex 0 is the center.
inline Multigraph star(std::size_t leaves) {
  std::vector<Edge> es;
  for (std::size_t i = 1; i <= leaves; ++i) es.push_back({0, static_cast<Vertex>(i)});
  return Multigraph::create(leaves + 1, es);
}

inline Multigraph grid(std::size_t rows, std::size_t cols) {
  std::vector<Edge> es;
  auto id = [cols](std::size_t r, std::size_t c) { return static_cast<Vertex>(r * cols + c); };
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) es.push_back({id(r, c), id(r, c + 1)});
      if (r + 1 < rows) es.push_back({id(r, c), id(r + 1, c)});
    }
  }
  return Multigraph::create(rows * cols, es);
}

inline Multigraph hypercube(std::size_t dim) {
  const std::size_t n = std::size_t{1} << dim;
  std::vector<Edge> es;
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t b = 0; b < dim; ++b) {
      const std::size_t w = v ^ (std::size_t{1} << b);
      if (v < w) es.push_back({static_cast<Vertex>(v), static_cast<Vertex>(w)});
    }
  }
  return Multigraph::create(n, es);
}

/// Circulant graph: i ~ i +/- j (mod n) for each jump j in [1, n/2].
inline Multigraph circulant(std::size_t n, const std::vector<std::size_t>& jumps) {
  std::vector<Edge> es;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j : jumps) {
      if (j == 0 || 2 * j > n) throw Error(ErrorKind::invalid_argument, "circulant jump out of range");
      const std::size_t k = (i + j) % n;
      if (2 * j == n && k < i) continue;
      es.push_back({static_cast<Vertex>(i), static_cast<Vertex>(k)});
    }
  }
  // A jump listed twice would double edges; keep the pairs simple.
  for (auto& e : es) {
    if (e.v < e.u) std::swap(e.u, e.v);
  }
  std::sort(es.begin(), es.end(), [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  es.erase(std::unique(es.begin(), es.end(), [](const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v; }),
           es.end());
  return Multigraph::create(n, es);
}

/// Two vertices joined by `m` parallel unit-weight edges.
inline Multigraph parallel_pair(std::uint64_t m) { return Multigraph::create(2, {Edge{0, 1, m, 1}}); }

}  // namespace graphs

}  // namespace gdom
