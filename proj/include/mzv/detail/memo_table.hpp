#pragma once

#include <cstddef>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>

namespace mzv::detail {

// Thread-safe cache. Values are computed outside the lock; concurrent
// writers of the same key store equal values, so the first one wins.
template <typename Key, typename Value, typename Hash>
class memo_table {
public:
    std::optional<Value> find(const Key& k) const
    {
        std::shared_lock lock(mutex_);
        auto it = map_.find(k);
        if (it == map_.end()) {
            return std::nullopt;
        }
        return it->second;
    }

    void insert(const Key& k, const Value& v)
    {
        std::unique_lock lock(mutex_);
        map_.try_emplace(k, v);
    }

    std::size_t size() const
    {
        std::shared_lock lock(mutex_);
        return map_.size();
    }

    void clear()
    {
        std::unique_lock lock(mutex_);
        map_.clear();
    }

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<Key, Value, Hash> map_;
};

template <typename T, typename Hash>
struct pair_hash {
    std::size_t operator()(const std::pair<T, T>& p) const noexcept
    {
        const std::size_t a = Hash{}(p.first);
        const std::size_t b = Hash{}(p.second);
        return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
    }
};

} // namespace mzv::detail
