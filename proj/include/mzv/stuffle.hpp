#pragma once

// Stuffle (quasi-shuffle) product on integer indices:
//   () * k = k * () = k
//   (k, a) * (l, b) = (k * (l, b), a) + ((k, a) * l, b) + (k * l, a + b)

#include <mzv/detail/memo_table.hpp>
#include <mzv/index_sum.hpp>

#include <utility>

namespace mzv {

class stuffle_engine {
public:
    explicit stuffle_engine(bool memoize = true) : memoize_(memoize) {}

    index_sum multiply(const index& a, const index& b) const
    {
        if (a.empty()) {
            return index_sum::single(b);
        }
        if (b.empty()) {
            return index_sum::single(a);
        }
        key_type key = a < b ? key_type{a, b} : key_type{b, a};
        if (memoize_) {
            if (auto hit = memo_.find(key)) {
                return *hit;
            }
        }
        const index a0 = a.prefix();
        const index b0 = b.prefix();
        index_sum out = append_entry(multiply(a0, b), a.last());
        out += append_entry(multiply(a, b0), b.last());
        out += append_entry(multiply(a0, b0), a.last() + b.last());
        if (memoize_) {
            memo_.insert(key, out);
        }
        return out;
    }

    index_sum multiply(const index_sum& a, const index_sum& b) const
    {
        return bilinear(a, b, [this](const index& k, const index& l) { return multiply(k, l); });
    }

    std::size_t memo_size() const { return memo_.size(); }

private:
    using key_type = std::pair<index, index>;

    bool memoize_;
    mutable detail::memo_table<key_type, index_sum, detail::pair_hash<index, index_hash>> memo_;
};

inline const stuffle_engine& default_stuffle_engine()
{
    static const stuffle_engine engine;
    return engine;
}

inline index_sum stuffle(const index& a, const index& b)
{
    return default_stuffle_engine().multiply(a, b);
}

inline index_sum stuffle(const index_sum& a, const index_sum& b)
{
    return default_stuffle_engine().multiply(a, b);
}

} // namespace mzv
