#pragma once

// Shuffle product on integer indices through the word algebra over
// {j, d, y}.
//
//   1 sh w = w sh 1 = w
//   yu sh v = u sh yv = y(u sh v)
//   ju sh jv = j(u sh jv) + j(ju sh v)
//   d^n u sh v = sum_{i=0}^{n} (-1)^i C(n, i) d^{n-i} (u sh d^i v)
//
// The two factors are first put in canonical order, then rules are tried
// in that order (y on either side, then d with the left factor first, then j). Terms that do not end in y lie in the ideal T and
// are dropped as soon as they are produced.

#include <mzv/bernoulli.hpp>
#include <mzv/detail/memo_table.hpp>
#include <mzv/index_sum.hpp>
#include <mzv/word.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace mzv {

/// Raised when the recursion-depth guard trips; never expected on legal input.
class internal_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct shuffle_options {
    /// Maximum recursion depth is depth_factor * (|u| + |v|), at least depth_factor.
    std::size_t depth_factor = 10;
    bool memoize = true;
};

class shuffle_engine {
public:
    explicit shuffle_engine(shuffle_options options = {}) : options_(options) {}

    word_sum multiply(const word& u, const word& v) const
    {
        if (!u.is_wy() || !v.is_wy()) {
            throw std::invalid_argument("shuffle_words: arguments must be empty or end in y");
        }
        const std::size_t limit = options_.depth_factor * std::max<std::size_t>(1, u.length() + v.length());
        return recurse(u, v, 0, limit);
    }

    index_sum multiply(const index& a, const index& b) const
    {
        const word_sum product = multiply(word_from_index(a), word_from_index(b));
        index_sum out;
        for (const auto& [w, c] : product) {
            if (w.is_wy()) {
                out.add(index_from_word(w), c);
            }
        }
        return out;
    }

    index_sum multiply(const index_sum& a, const index_sum& b) const
    {
        return bilinear(a, b, [this](const index& k, const index& l) { return multiply(k, l); });
    }

    std::size_t memo_size() const { return memo_.size(); }
    void clear_memo() { memo_.clear(); }

private:
    using key_type = std::pair<word, word>;

    static void add_wy_terms(word_sum& out, const word_sum& terms, const rational& scale)
    {
        for (const auto& [w, c] : terms) {
            if (w.is_wy()) {
                out.add(w, scale * c);
            }
        }
    }

    word_sum recurse(const word& first, const word& second, std::size_t depth, std::size_t limit) const
    {
        if (first.is_empty()) {
            return word_sum::single(second);
        }
        if (second.is_empty()) {
            return word_sum::single(first);
        }
        if (depth > limit) {
            throw internal_error("shuffle recursion exceeded depth " + std::to_string(limit) + " at "
                                 + to_string(first) + " sh " + to_string(second));
        }

        // Different rule orders give different Wy representatives of the same
        // class, so the pair is put in canonical order before any rule fires.
        // This makes the result symmetric and the memo independent of history.
        const bool swap = second < first;
        const word& u = swap ? second : first;
        const word& v = swap ? first : second;
        const key_type key{u, v};
        if (options_.memoize) {
            if (auto hit = memo_.find(key)) {
                return *hit;
            }
        }

        word_sum out;
        using head = word::head_kind;
        if (u.head() == head::y) {
            add_wy_terms(out, prepend(letter::y, recurse(u.without_leading_y(), v, depth + 1, limit)), 1);
        } else if (v.head() == head::y) {
            add_wy_terms(out, prepend(letter::y, recurse(u, v.without_leading_y(), depth + 1, limit)), 1);
        } else if (u.head() == head::d || v.head() == head::d) {
            const bool left = u.head() == head::d;
            const word& runner = left ? u : v;
            const word& other = left ? v : u;
            const long n = -runner.leading_exponent();
            const word rest = runner.without_leading_run();
            for (long i = 0; i <= n; ++i) {
                rational coeff(binomial(n, i));
                if (i % 2 != 0) {
                    coeff = -coeff;
                }
                const word_sum inner = recurse(rest, other.with_prepended_power(-i), depth + 1, limit);
                add_wy_terms(out, prepend_power(-(n - i), inner), coeff);
            }
        } else {
            const word u1 = u.with_prepended_power(-1);
            const word v1 = v.with_prepended_power(-1);
            add_wy_terms(out, prepend(letter::j, recurse(u1, v, depth + 1, limit)), 1);
            add_wy_terms(out, prepend(letter::j, recurse(u, v1, depth + 1, limit)), 1);
        }

        if (options_.memoize) {
            memo_.insert(key, out);
        }
        return out;
    }

    shuffle_options options_;
    mutable detail::memo_table<key_type, word_sum, detail::pair_hash<word, word_hash>> memo_;
};

inline const shuffle_engine& default_shuffle_engine()
{
    static const shuffle_engine engine;
    return engine;
}

inline word_sum shuffle_words(const word& u, const word& v)
{
    return default_shuffle_engine().multiply(u, v);
}

inline index_sum shuffle(const index_sum& a, const index_sum& b)
{
    return default_shuffle_engine().multiply(a, b);
}

inline index_sum shuffle(const index& a, const index& b)
{
    return default_shuffle_engine().multiply(a, b);
}

} // namespace mzv
