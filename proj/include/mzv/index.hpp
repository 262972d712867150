#pragma once

// Integer indices k = (k_1, ..., k_r) and their regularizability data.

#include <mzv/extended_int.hpp>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mzv {

using entry_type = int;

/// A finite tuple of integers; depth 0 is the empty index.
class index {
public:
    index() = default;
    index(std::initializer_list<entry_type> entries) : entries_(entries) {}
    explicit index(std::vector<entry_type> entries) : entries_(std::move(entries)) {}

    std::size_t depth() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }

    /// 1-based, matching the usual k_1..k_r numbering.
    entry_type at(std::size_t position) const
    {
        if (position < 1 || position > entries_.size()) {
            throw std::out_of_range("index position " + std::to_string(position) + " out of range");
        }
        return entries_[position - 1];
    }

    entry_type last() const
    {
        if (entries_.empty()) {
            throw std::out_of_range("last() of the empty index");
        }
        return entries_.back();
    }

    std::span<const entry_type> entries() const noexcept { return entries_; }
    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }

    /// All entries but the last.
    index prefix() const
    {
        if (entries_.empty()) {
            throw std::out_of_range("prefix() of the empty index");
        }
        return index(std::vector<entry_type>(entries_.begin(), entries_.end() - 1));
    }

    index appended(entry_type e) const
    {
        auto v = entries_;
        v.push_back(e);
        return index(std::move(v));
    }

    friend bool operator==(const index&, const index&) = default;

    // Canonical order: by depth, then lexicographic.
    friend std::strong_ordering operator<=>(const index& a, const index& b)
    {
        if (auto c = a.depth() <=> b.depth(); c != 0) {
            return c;
        }
        return std::lexicographical_compare_three_way(a.entries_.begin(), a.entries_.end(),
                                                      b.entries_.begin(), b.entries_.end());
    }

private:
    std::vector<entry_type> entries_;
};

struct index_hash {
    std::size_t operator()(const index& k) const noexcept
    {
        std::size_t h = k.depth() * 0x9e3779b97f4a7c15ULL;
        for (auto e : k) {
            h ^= std::hash<entry_type>{}(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

inline long long weight(const index& k)
{
    long long w = 0;
    for (auto e : k) {
        w += e;
    }
    return w;
}

inline std::size_t depth(const index& k) noexcept
{
    return k.depth();
}

/// (k_t, ..., k_r) for 1 <= t <= r.
inline index tail_index(const index& k, std::size_t t)
{
    if (t < 1 || t > k.depth()) {
        throw std::out_of_range("tail_index: t = " + std::to_string(t) + " not in [1, "
                                + std::to_string(k.depth()) + "]");
    }
    return index(std::vector<entry_type>(k.begin() + static_cast<std::ptrdiff_t>(t - 1), k.end()));
}

inline index concat(const index& a, const index& b)
{
    std::vector<entry_type> v(a.begin(), a.end());
    v.insert(v.end(), b.begin(), b.end());
    return index(std::move(v));
}

/// m_k = min over tails of wt - dep; +inf for the empty index.
inline extended_int m_index(const index& k)
{
    extended_int m = extended_int::infinity();
    long long tail_weight = 0;
    long long tail_depth = 0;
    for (auto it = k.entries().rbegin(); it != k.entries().rend(); ++it) {
        tail_weight += *it;
        ++tail_depth;
        m = std::min(m, extended_int(tail_weight - tail_depth));
    }
    return m;
}

enum class index_class { admissible, regularizable_only, non_regularizable };

inline index_class classify(const index& k)
{
    const auto m = m_index(k);
    if (m > extended_int(0)) {
        return index_class::admissible;
    }
    if (m == extended_int(0)) {
        return index_class::regularizable_only;
    }
    return index_class::non_regularizable;
}

inline bool is_admissible(const index& k)
{
    return classify(k) == index_class::admissible;
}

inline bool is_regularizable(const index& k)
{
    return classify(k) != index_class::non_regularizable;
}

inline bool is_positive(const index& k)
{
    return std::all_of(k.begin(), k.end(), [](entry_type e) { return e > 0; });
}

inline std::string to_string(index_class c)
{
    switch (c) {
    case index_class::admissible:
        return "admissible";
    case index_class::regularizable_only:
        return "regularizable_only";
    case index_class::non_regularizable:
        return "non_regularizable";
    }
    return "unknown";
}

/// "(k1,k2,...)", "()" for the empty index.
inline std::string to_string(const index& k)
{
    std::string s = "(";
    bool first = true;
    for (auto e : k) {
        if (!first) {
            s += ',';
        }
        s += std::to_string(e);
        first = false;
    }
    s += ')';
    return s;
}

} // namespace mzv
