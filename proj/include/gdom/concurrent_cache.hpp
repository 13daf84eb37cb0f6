#pragma once

#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <utility>

namespace gdom {

/// Linearizable map: concurrent readers, exclusive writers. First insert wins.
template <class Key, class Value, class Hash = std::hash<Key>>
class ConcurrentCache {
 public:
  std::optional<Value> find(const Key& key) const {
    std::shared_lock lock(mutex_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }

  Value insert(const Key& key, Value value) {
    std::unique_lock lock(mutex_);
    auto [it, inserted] = map_.emplace(key, std::move(value));
    return it->second;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return map_.size();
  }

  void clear() {
    std::unique_lock lock(mutex_);
    map_.clear();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<Key, Value, Hash> map_;
};

}  // namespace gdom
