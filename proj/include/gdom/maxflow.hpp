#pragma once

// Dinic's maximum flow on integer capacities.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace gdom {

class MaxFlow {
 public:
  explicit MaxFlow(std::size_t nodes) : adj_(nodes), level_(nodes), iter_(nodes) {}

  /// Returns the arc index, usable with flow_on().
  std::size_t add_arc(std::size_t from, std::size_t to, std::int64_t capacity) {
    const std::size_t id = arcs_.size();
    arcs_.push_back({to, capacity, 0});
    adj_[from].push_back(id);
    arcs_.push_back({from, 0, 0});
    adj_[to].push_back(id + 1);
    return id;
  }

  std::int64_t run(std::size_t source, std::size_t sink) {
    std::int64_t total = 0;
    while (bfs(source, sink)) {
      std::fill(iter_.begin(), iter_.end(), 0);
      while (const std::int64_t pushed = dfs(source, sink, std::numeric_limits<std::int64_t>::max())) total += pushed;
    }
    return total;
  }

  [[nodiscard]] std::int64_t flow_on(std::size_t arc) const { return arcs_[arc].flow; }

 private:
  struct Arc {
    std::size_t to;
    std::int64_t cap;
    std::int64_t flow;
  };

  bool bfs(std::size_t s, std::size_t t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<std::size_t> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const auto v = q.front();
      q.pop();
      for (auto id : adj_[v]) {
        const auto& a = arcs_[id];
        if (a.cap - a.flow > 0 && level_[a.to] < 0) {
          level_[a.to] = level_[v] + 1;
          q.push(a.to);
        }
      }
    }
    return level_[t] >= 0;
  }

  std::int64_t dfs(std::size_t v, std::size_t t, std::int64_t limit) {
    if (v == t) return limit;
    for (auto& i = iter_[v]; i < adj_[v].size(); ++i) {
      const auto id = adj_[v][i];
      auto& a = arcs_[id];
      if (a.cap - a.flow <= 0 || level_[a.to] != level_[v] + 1) continue;
      const std::int64_t got = dfs(a.to, t, std::min(limit, a.cap - a.flow));
      if (got > 0) {
        a.flow += got;
        arcs_[id ^ 1U].flow -= got;
        return got;
      }
    }
    return 0;
  }

  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<int> level_;
  std::vector<std::size_t> iter_;
};

}  // namespace gdom
