#pragma once

#include <map>
#include <memory>
#include <mutex>

namespace coringlab {

/// Memo table keyed by object identity. The key object is kept alive by the
/// table so its address cannot be reused. Values are computed outside the lock,
/// which lets a computation consult the same table recursively.
template <class Key, class Value>
class IdentityCache {
 public:
  template <class Make>
  const Value& get(const std::shared_ptr<const Key>& key, Make&& make) const {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = table_.find(key.get());
      if (it != table_.end()) return it->second.second;
    }
    Value v = make();
    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, inserted] = table_.try_emplace(key.get(), key, std::move(v));
    return it->second.second;
  }

 private:
  mutable std::mutex mutex_;
  mutable std::map<const Key*, std::pair<std::shared_ptr<const Key>, Value>> table_;
};

}  // namespace coringlab
