#pragma once

#include <mzv/rational.hpp>

#include <cstddef>
#include <initializer_list>
#include <map>
#include <type_traits>
#include <utility>
#include <vector>

namespace mzv {

/// Finite formal Q-linear combination of keys. Zero coefficients are never
/// stored, so the key set is exactly the support. Iteration follows the key
/// order, which makes every serialization canonical.
template <typename Key>
class linear_combination {
public:
    using key_type = Key;
    using map_type = std::map<Key, rational>;
    using const_iterator = typename map_type::const_iterator;

    linear_combination() = default;

    linear_combination(std::initializer_list<std::pair<Key, rational>> terms)
    {
        for (const auto& [k, c] : terms) {
            add(k, c);
        }
    }

    static linear_combination single(Key k, rational c = 1)
    {
        linear_combination r;
        r.add(std::move(k), c);
        return r;
    }

    void add(const Key& k, const rational& c)
    {
        if (c == 0) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
    }

    /// this += c * other
    void add_scaled(const linear_combination& other, const rational& c)
    {
        if (c == 0) {
            return;
        }
        for (const auto& [k, v] : other.terms_) {
            add(k, c * v);
        }
    }

    rational coefficient(const Key& k) const
    {
        auto it = terms_.find(k);
        return it == terms_.end() ? rational(0) : it->second;
    }

    bool contains(const Key& k) const { return terms_.count(k) != 0; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }
    const_iterator begin() const noexcept { return terms_.begin(); }
    const_iterator end() const noexcept { return terms_.end(); }

    std::vector<Key> support() const
    {
        std::vector<Key> keys;
        keys.reserve(terms_.size());
        for (const auto& [k, c] : terms_) {
            keys.push_back(k);
        }
        return keys;
    }

    linear_combination& operator+=(const linear_combination& o)
    {
        add_scaled(o, 1);
        return *this;
    }

    linear_combination& operator-=(const linear_combination& o)
    {
        add_scaled(o, -1);
        return *this;
    }

    linear_combination& operator*=(const rational& c)
    {
        if (c == 0) {
            terms_.clear();
        } else {
            for (auto& [k, v] : terms_) {
                v *= c;
            }
        }
        return *this;
    }

    friend linear_combination operator+(linear_combination a, const linear_combination& b) { return a += b; }
    friend linear_combination operator-(linear_combination a, const linear_combination& b) { return a -= b; }
    friend linear_combination operator*(linear_combination a, const rational& c) { return a *= c; }
    friend linear_combination operator*(const rational& c, linear_combination a) { return a *= c; }
    friend linear_combination operator-(linear_combination a) { return a *= rational(-1); }

    friend bool operator==(const linear_combination& a, const linear_combination& b)
    {
        return a.terms_ == b.terms_;
    }

    /// Applies a key map, merging keys that collide.
    template <typename F>
    auto map_keys(F&& f) const
    {
        using out_key = std::decay_t<decltype(f(std::declval<const Key&>()))>;
        linear_combination<out_key> r;
        for (const auto& [k, c] : terms_) {
            r.add(f(k), c);
        }
        return r;
    }

private:
    map_type terms_;
};

/// Bilinear extension of a product defined on basis keys.
template <typename Key, typename Product>
linear_combination<Key> bilinear(const linear_combination<Key>& a, const linear_combination<Key>& b, Product&& product)
{
    linear_combination<Key> out;
    for (const auto& [k, c] : a) {
        for (const auto& [l, d] : b) {
            out.add_scaled(product(k, l), c * d);
        }
    }
    return out;
}

} // namespace mzv
