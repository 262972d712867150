#pragma once

// Bernoulli numbers in both sign conventions, binomial coefficients and
// Faulhaber power-sum polynomials. Everything here is exact.

#include <mzv/rational.hpp>

#include <cstddef>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mzv {

/// B+ is generated by t/(1-e^{-t}), B- by t/(e^t-1). They differ only at n = 1.
enum class bernoulli_sign { plus, minus };

/// Binomial coefficient C(n, k). Zero outside 0 <= k <= n. The formal
/// convention C(n, -1) = [n == -1] is honoured, which is the only case where
/// a negative n is accepted.
inline integer binomial(long n, long k)
{
    if (k == -1) {
        return n == -1 ? 1 : 0;
    }
    if (n < 0) {
        throw std::domain_error("binomial: negative n is only defined for k = -1");
    }
    if (k < 0 || k > n) {
        return 0;
    }
    integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

namespace detail {

// B-_n memo. Filled by the recurrence sum_{i=0}^{n} C(n+1, i) B-_i = 0 (n >= 1).
class bernoulli_table {
public:
    rational get(std::size_t n)
    {
        std::lock_guard lock(mutex_);
        while (values_.size() <= n) {
            const auto m = static_cast<long>(values_.size());
            rational acc = 0;
            for (long i = 0; i < m; ++i) {
                acc += rational(binomial(m + 1, i)) * values_[static_cast<std::size_t>(i)];
            }
            rational next = -acc / rational(m + 1);
            next.canonicalize();
            values_.push_back(std::move(next));
        }
        return values_[n];
    }

private:
    std::mutex mutex_;
    std::vector<rational> values_{rational(1)};
};

inline bernoulli_table& bernoulli_cache()
{
    static bernoulli_table table;
    return table;
}

} // namespace detail

inline rational bernoulli(std::size_t n, bernoulli_sign sign)
{
    rational b = detail::bernoulli_cache().get(n);
    if (n == 1 && sign == bernoulli_sign::plus) {
        b = -b;
    }
    return b;
}

enum class sum_bound {
    inclusive, // sum_{n=1}^{m} n^k
    exclusive  // sum_{n=1}^{m-1} n^k
};

/// A polynomial in m, stored as (power, coefficient) pairs in decreasing
/// power, plus a constant correction. Zero coefficients are not stored.
struct power_sum_polynomial {
    std::vector<std::pair<long, rational>> terms;
    rational constant = 0;

    rational operator()(const rational& m) const
    {
        rational acc = constant;
        for (const auto& [power, coeff] : terms) {
            rational p = 1;
            for (long e = 0; e < power; ++e) {
                p *= m;
            }
            acc += coeff * p;
        }
        return acc;
    }

    long degree() const
    {
        return terms.empty() ? 0 : terms.front().first;
    }
};

/// Faulhaber expansion of sum_{n=1}^{m} n^k (B+) or sum_{n=1}^{m-1} n^k
/// (B-, with the -[k == 0] correction).
inline power_sum_polynomial faulhaber_coefficients(long k, sum_bound bound)
{
    if (k < 0) {
        throw std::domain_error("faulhaber_coefficients: k must be non-negative");
    }
    const auto sign = bound == sum_bound::inclusive ? bernoulli_sign::plus : bernoulli_sign::minus;
    power_sum_polynomial poly;
    for (long i = 0; i <= k; ++i) {
        rational c = rational(binomial(k + 1, i)) * bernoulli(static_cast<std::size_t>(i), sign) / rational(k + 1);
        c.canonicalize();
        if (c != 0) {
            poly.terms.emplace_back(k + 1 - i, std::move(c));
        }
    }
    if (bound == sum_bound::exclusive && k == 0) {
        poly.constant = -1;
    }
    return poly;
}

} // namespace mzv
