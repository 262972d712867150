#pragma once

// Positive-index map. Each step removes the first non-positive entry k_m
// (m < r) by summing n^{-k_m} over n_{m-1} < n < n_{m+1} with Faulhaber's
// formula:
//
//   k  ->   1/(1-k_m) sum_{i=0}^{-k_m} C(1-k_m, i) B-_i  k^+_{m,i}
//         - [k_m == 0] k_hat_m
//         - 1/(1-k_m) sum_{i=0}^{-k_m} C(1-k_m, i) B+_i  k^-_{m,i}
//
// where k^+_{m,i} folds k_m - 1 + i into k_{m+1}, k^-_{m,i} folds it into
// k_{m-1}, and k_hat_m deletes position m. For m = 1 the B+ family is absent
// (n_0 = 0). The last entry is never reduced.

#include <mzv/bernoulli.hpp>
#include <mzv/detail/memo_table.hpp>
#include <mzv/index_sum.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace mzv {

/// 1-based position of the first entry k_m <= 0 with m < r, if any.
inline std::optional<std::size_t> reduction_position(const index& k)
{
    const auto e = k.entries();
    for (std::size_t i = 0; i + 1 < e.size(); ++i) {
        if (e[i] <= 0) {
            return i + 1;
        }
    }
    return std::nullopt;
}

/// Indices left fixed by the positive-index map: every entry but the last is positive.
inline bool is_reduced(const index& k)
{
    return !reduction_position(k).has_value();
}

inline index_sum reduce_step(const index& k)
{
    const auto position = reduction_position(k);
    if (!position) {
        throw std::domain_error("reduce_step: " + to_string(k) + " has no non-positive entry before the last");
    }
    const std::size_t m = *position - 1; // 0-based
    const auto e = k.entries();
    const long km = e[m];
    const long top = -km; // i runs over 0..top
    const rational scale = rational(1) / rational(top + 1);

    auto merged = [&](std::size_t into, long shift) {
        std::vector<entry_type> v;
        v.reserve(e.size() - 1);
        for (std::size_t t = 0; t < e.size(); ++t) {
            if (t == m) {
                continue;
            }
            v.push_back(t == into ? static_cast<entry_type>(e[t] + shift) : e[t]);
        }
        return index(std::move(v));
    };

    index_sum out;
    for (long i = 0; i <= top; ++i) {
        const rational c = scale * rational(binomial(top + 1, i));
        const auto bi = static_cast<std::size_t>(i);
        out.add(merged(m + 1, km - 1 + i), c * bernoulli(bi, bernoulli_sign::minus));
        if (m > 0) {
            out.add(merged(m - 1, km - 1 + i), -c * bernoulli(bi, bernoulli_sign::plus));
        }
    }
    if (km == 0) {
        out.add(merged(e.size(), 0), -1);
    }
    return out;
}

class positive_reduction {
public:
    explicit positive_reduction(bool memoize = true) : memoize_(memoize) {}

    index_sum apply(const index& k) const
    {
        if (is_reduced(k)) {
            return index_sum::single(k);
        }
        if (memoize_) {
            if (auto hit = memo_.find(k)) {
                return *hit;
            }
        }
        index_sum out;
        for (const auto& [l, c] : reduce_step(k)) {
            out.add_scaled(apply(l), c);
        }
        if (memoize_) {
            memo_.insert(k, out);
        }
        return out;
    }

    index_sum apply(const index_sum& s) const
    {
        index_sum out;
        for (const auto& [k, c] : s) {
            out.add_scaled(apply(k), c);
        }
        return out;
    }

private:
    bool memoize_;
    mutable detail::memo_table<index, index_sum, index_hash> memo_;
};

inline const positive_reduction& default_positive_reduction()
{
    static const positive_reduction reduction;
    return reduction;
}

/// The (extended) positive-index map, total on span_Q of all integer indices.
inline index_sum pi_plus(const index_sum& s)
{
    return default_positive_reduction().apply(s);
}

inline index_sum pi_plus(const index& k)
{
    return default_positive_reduction().apply(k);
}

} // namespace mzv
