#pragma once

// Automorphisms, canonical codes, transitivity, radius-r rooted ball
// statistics and total-variation distance.
//
// Canonical labeling is individualization-refinement: equitable color
// refinement, then backtracking on the first non-singleton cell, with
// subtrees pruned by automorphisms found along the way.

#include "gdom/graph.hpp"
#include "gdom/numeric.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace gdom {

using Permutation = std::vector<Vertex>;

struct AutomorphismInfo {
  std::vector<Permutation> generators;
  /// orbit_of[v] = index of v's orbit in `orbits`.
  std::vector<std::size_t> orbit_of;
  std::vector<VertexSet> orbits;
  BigInt order = 1;
};

/// Isomorphism class of a (rooted) multigraph, as an opaque byte string.
using CanonicalCode = std::string;

/// Probability of each rooted-ball class under a uniform root.
using LocalStatistics = std::map<CanonicalCode, Rational>;

inline constexpr std::size_t kDefaultSymmetryBound = 64;

namespace detail {

class Canonizer {
 public:
  Canonizer(const Multigraph& g, std::optional<Vertex> root) : n_(g.size()) {
    build_classes(g);
    std::vector<std::vector<Vertex>> cells;
    if (root) {
      if (*root >= n_) throw Error(ErrorKind::invalid_argument, "root out of range");
      cells.push_back({*root});
      std::vector<Vertex> rest;
      for (Vertex v = 0; v < n_; ++v) {
        if (v != *root) rest.push_back(v);
      }
      if (!rest.empty()) cells.push_back(std::move(rest));
    } else {
      std::vector<Vertex> all(n_);
      std::iota(all.begin(), all.end(), Vertex{0});
      cells.push_back(std::move(all));
    }
    rooted_ = root.has_value();
    refine(cells);
    std::vector<Vertex> path;
    search(cells, path);
  }

  [[nodiscard]] CanonicalCode code() const {
    std::string out = "n" + std::to_string(n_) + (rooted_ ? "r" : "u") + header_ + "|";
    for (std::uint16_t c : best_code_) {
      out.push_back(static_cast<char>(c & 0xFFU));
      out.push_back(static_cast<char>(c >> 8U));
    }
    return out;
  }

  /// canonical position -> vertex
  [[nodiscard]] const std::vector<Vertex>& labeling() const { return best_order_; }
  [[nodiscard]] const std::vector<Permutation>& generators() const { return generators_; }

 private:
  void build_classes(const Multigraph& g) {
    // signature of a pair: sorted (weight, multiplicity) bundles
    std::map<std::pair<Vertex, Vertex>, std::vector<std::pair<Rational, std::uint64_t>>> sig;
    for (const auto& e : g.edges()) sig[{e.u, e.v}].emplace_back(e.weight, e.multiplicity);
    std::vector<std::vector<std::pair<Rational, std::uint64_t>>> distinct;
    for (auto& [k, v] : sig) {
      std::sort(v.begin(), v.end());
      distinct.push_back(v);
    }
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() >= 0xFFFF) throw Error(ErrorKind::size_bound, "too many distinct edge classes");
    cls_.assign(n_ * n_, 0);
    for (const auto& [k, v] : sig) {
      const auto id = static_cast<std::uint16_t>(std::lower_bound(distinct.begin(), distinct.end(), v) - distinct.begin() + 1);
      cls_[k.first * n_ + k.second] = id;
      cls_[k.second * n_ + k.first] = id;
    }
    for (const auto& d : distinct) {
      header_ += "[";
      for (const auto& [w, m] : d) header_ += to_string(w) + "x" + std::to_string(m) + ",";
      header_ += "]";
    }
  }

  [[nodiscard]] std::uint16_t cls(Vertex a, Vertex b) const { return cls_[a * n_ + b]; }

  // Splits cells until equitable; the split order depends only on invariant signatures.
  void refine(std::vector<std::vector<Vertex>>& cells) const {
    std::vector<std::size_t> cell_of(n_);
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        for (Vertex v : cells[c]) cell_of[v] = c;
      }
      std::vector<std::vector<Vertex>> next;
      next.reserve(n_);
      for (const auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<std::vector<std::uint64_t>, Vertex>> keyed;
        keyed.reserve(cell.size());
        for (Vertex v : cell) {
          std::vector<std::uint64_t> s;
          for (Vertex u = 0; u < n_; ++u) {
            const auto c = cls(v, u);
            if (c != 0) s.push_back((static_cast<std::uint64_t>(cell_of[u]) << 16U) | c);
          }
          std::sort(s.begin(), s.end());
          keyed.emplace_back(std::move(s), v);
        }
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<Vertex> cur{keyed[0].second};
        for (std::size_t i = 1; i < keyed.size(); ++i) {
          if (keyed[i].first != keyed[i - 1].first) {
            next.push_back(std::move(cur));
            cur.clear();
            changed = true;
          }
          cur.push_back(keyed[i].second);
        }
        next.push_back(std::move(cur));
      }
      cells = std::move(next);
    }
  }

  [[nodiscard]] std::vector<std::uint16_t> leaf_code(const std::vector<Vertex>& order) const {
    std::vector<std::uint16_t> code;
    code.reserve(n_ * (n_ - 1) / 2);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) code.push_back(cls(order[i], order[j]));
    }
    return code;
  }

  [[nodiscard]] Permutation perm_between(const std::vector<Vertex>& from, const std::vector<Vertex>& to) const {
    Permutation p(n_);
    for (std::size_t i = 0; i < n_; ++i) p[from[i]] = to[i];
    return p;
  }

  void add_generator(Permutation p) {
    bool identity = true;
    for (Vertex v = 0; v < n_; ++v) identity = identity && p[v] == v;
    if (!identity) generators_.push_back(std::move(p));
  }

  // Orbits of the group generated by the generators fixing `prefix` pointwise.
  [[nodiscard]] std::vector<std::size_t> stabilizer_orbits(const std::vector<Vertex>& prefix) const {
    UnionFind uf(n_);
    for (const auto& g : generators_) {
      bool fixes = true;
      for (Vertex v : prefix) fixes = fixes && g[v] == v;
      if (!fixes) continue;
      for (Vertex v = 0; v < n_; ++v) uf.unite(v, g[v]);
    }
    std::vector<std::size_t> rep(n_);
    for (Vertex v = 0; v < n_; ++v) rep[v] = uf.find(v);
    return rep;
  }

  static std::size_t common_prefix(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    std::size_t k = 0;
    while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
    return k;
  }

  // Returns the level to unwind to; a value below path.size() aborts this subtree.
  std::size_t search(const std::vector<std::vector<Vertex>>& cells, std::vector<Vertex>& path) {
    if (cells.size() == n_) {
      std::vector<Vertex> order;
      order.reserve(n_);
      for (const auto& c : cells) order.push_back(c[0]);
      auto code = leaf_code(order);
      if (first_order_.empty()) {
        first_order_ = order;
        first_code_ = code;
        first_path_ = path;
        best_order_ = order;
        best_code_ = std::move(code);
        best_path_ = path;
        return path.size();
      }
      if (code == first_code_) {
        add_generator(perm_between(first_order_, order));
        return common_prefix(path, first_path_);
      }
      if (code == best_code_) {
        add_generator(perm_between(best_order_, order));
        return common_prefix(path, best_path_);
      }
      if (code < best_code_) {
        best_code_ = std::move(code);
        best_order_ = order;
        best_path_ = path;
      }
      return path.size();
    }
    std::size_t target = 0;
    while (cells[target].size() == 1) ++target;
    const std::vector<Vertex> candidates = cells[target];
    std::vector<Vertex> explored;
    const std::size_t level = path.size();
    for (Vertex w : candidates) {
      if (!explored.empty()) {
        const auto rep = stabilizer_orbits(path);
        const bool redundant = std::any_of(explored.begin(), explored.end(), [&](Vertex x) { return rep[x] == rep[w]; });
        if (redundant) continue;
      }
      std::vector<std::vector<Vertex>> child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c == target) {
          child.push_back({w});
          std::vector<Vertex> rest;
          for (Vertex x : cells[c]) {
            if (x != w) rest.push_back(x);
          }
          child.push_back(std::move(rest));
        } else {
          child.push_back(cells[c]);
        }
      }
      refine(child);
      path.push_back(w);
      const std::size_t back = search(child, path);
      path.pop_back();
      explored.push_back(w);
      if (back < level) return back;
    }
    return level;
  }

  std::size_t n_;
  bool rooted_ = false;
  std::vector<std::uint16_t> cls_;
  std::string header_;
  std::vector<Vertex> first_order_, best_order_, first_path_, best_path_;
  std::vector<std::uint16_t> first_code_, best_code_;
  std::vector<Permutation> generators_;
};

/// Group order by Schreier-Sims over the base 0..n-1. Restarts from scratch
/// whenever a new strong generator appears; fine at desk scale.
inline BigInt group_order(std::size_t n, const std::vector<Permutation>& gens) {
  if (gens.empty()) return 1;
  auto compose = [n](const Permutation& a, const Permutation& b) {  // a then b
    Permutation c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = b[a[i]];
    return c;
  };
  auto inverse = [n](const Permutation& a) {
    Permutation c(n);
    for (std::size_t i = 0; i < n; ++i) c[a[i]] = static_cast<Vertex>(i);
    return c;
  };
  Permutation id(n);
  std::iota(id.begin(), id.end(), Vertex{0});
  std::vector<Permutation> strong;
  for (const auto& g : gens) {
    if (g != id) strong.push_back(g);
  }
  using Transversal = std::vector<std::optional<Permutation>>;
  auto level_gens = [&](std::size_t i) {
    std::vector<const Permutation*> out;
    for (const auto& g : strong) {
      bool fixes = true;
      for (std::size_t b = 0; b < i && fixes; ++b) fixes = g[b] == b;
      if (fixes) out.push_back(&g);
    }
    return out;
  };
  auto transversal_of = [&](std::size_t i, const std::vector<const Permutation*>& gi) {
    Transversal t(n);
    t[i] = id;
    std::vector<Vertex> queue{static_cast<Vertex>(i)};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const Vertex v = queue[qi];
      for (const auto* g : gi) {
        const Vertex w = (*g)[v];
        if (!t[w]) {
          t[w] = compose(*t[v], *g);
          queue.push_back(w);
        }
      }
    }
    return t;
  };
  std::vector<Transversal> trans(n);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i) trans[i] = transversal_of(i, level_gens(i));
    for (std::size_t i = 0; i < n && !changed; ++i) {
      const auto gi = level_gens(i);
      for (Vertex v = 0; v < n && !changed; ++v) {
        if (!trans[i][v]) continue;
        for (const auto* g : gi) {
          const Vertex w = (*g)[v];
          Permutation p = compose(compose(*trans[i][v], *g), inverse(*trans[i][w]));
          for (std::size_t j = i + 1; j < n && p != id; ++j) {
            const Vertex img = p[j];
            if (!trans[j][img]) break;
            p = compose(p, inverse(*trans[j][img]));
          }
          if (p != id) {
            strong.push_back(std::move(p));
            changed = true;
            break;
          }
        }
      }
    }
  }
  BigInt order = 1;
  for (const auto& t : trans) {
    std::size_t orbit = 0;
    for (const auto& u : t) orbit += u ? 1 : 0;
    order *= orbit;
  }
  return order;
}

}  // namespace detail

inline void require_symmetry_bound(const Multigraph& g, std::size_t bound) {
  if (g.size() > bound) {
    throw Error(ErrorKind::size_bound, "graph has " + std::to_string(g.size()) + " vertices, bound is " + std::to_string(bound));
  }
}

/// Complete invariant: equal codes iff (rooted-)isomorphic, weights and multiplicities included.
inline CanonicalCode canonical_code(const Multigraph& g, std::optional<Vertex> root = std::nullopt,
                                    std::size_t bound = kDefaultSymmetryBound) {
  require_symmetry_bound(g, bound);
  return detail::Canonizer(g, root).code();
}

inline bool isomorphic(const Multigraph& a, const Multigraph& b) {
  return a.size() == b.size() && a.edge_units() == b.edge_units() && canonical_code(a) == canonical_code(b);
}

inline AutomorphismInfo automorphisms(const Multigraph& g, std::size_t bound = kDefaultSymmetryBound) {
  require_symmetry_bound(g, bound);
  detail::Canonizer canon(g, std::nullopt);
  AutomorphismInfo info;
  info.generators = canon.generators();
  detail::UnionFind uf(g.size());
  for (const auto& p : info.generators) {
    for (Vertex v = 0; v < g.size(); ++v) uf.unite(v, p[v]);
  }
  std::map<std::size_t, std::size_t> index;
  info.orbit_of.resize(g.size());
  std::vector<std::vector<Vertex>> orbits;
  for (Vertex v = 0; v < g.size(); ++v) {
    const auto r = uf.find(v);
    auto [it, fresh] = index.emplace(r, orbits.size());
    if (fresh) orbits.emplace_back();
    orbits[it->second].push_back(v);
    info.orbit_of[v] = it->second;
  }
  for (auto& o : orbits) info.orbits.emplace_back(std::move(o));
  info.order = detail::group_order(g.size(), info.generators);
  return info;
}

inline bool is_transitive(const Multigraph& g) { return automorphisms(g).orbits.size() == 1; }

/// Distribution of the isomorphism class of the induced radius-r ball around a uniform root.
inline LocalStatistics local_statistics(const Multigraph& g, std::size_t radius) {
  std::map<CanonicalCode, std::size_t> counts;
  for (Vertex root = 0; root < g.size(); ++root) {
    const VertexSet members = ball(g, root, radius);
    const Multigraph b = induced_subgraph(g, members);
    const auto local_root = static_cast<Vertex>(std::lower_bound(members.begin(), members.end(), root) - members.begin());
    ++counts[canonical_code(b, local_root)];
  }
  LocalStatistics out;
  for (const auto& [code, c] : counts) out[code] = make_rational(BigInt(c), BigInt(g.size()));
  return out;
}

/// Half the L1 distance, so the value lies in [0, 1].
inline Rational tv_distance(const LocalStatistics& a, const LocalStatistics& b) {
  Rational total = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      total += abs(ia->second);
      ++ia;
    } else if (ia == a.end() || ib->first < ia->first) {
      total += abs(ib->second);
      ++ib;
    } else {
      total += abs(ia->second - ib->second);
      ++ia;
      ++ib;
    }
  }
  return total / 2;
}

/// Applies a permutation (old -> new) to a graph's vertex labels.
inline Multigraph relabel(const Multigraph& g, const Permutation& p) {
  std::vector<Edge> es = g.edges();
  for (auto& e : es) {
    e.u = p[e.u];
    e.v = p[e.v];
  }
  return Multigraph::create(g.size(), std::move(es));
}

}  // namespace gdom
