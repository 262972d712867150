#pragma once

// Exact truncated multiple polylogarithms and multiple harmonic sums, used
// as independent oracles for the symbolic layer, plus a floating-point
// partial-sum estimate of real zeta values.

#include <mzv/index_sum.hpp>
#include <mzv/rational.hpp>
#include <mzv/shuffle.hpp>
#include <mzv/stuffle.hpp>
#include <mzv/positive_reduction.hpp>

#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace mzv {

/// Power series in z truncated after z^N, exact coefficients c_0..c_N.
class series_poly {
public:
    explicit series_poly(std::size_t order) : coeffs_(order + 1) {}

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const rational& operator[](std::size_t n) const { return coeffs_.at(n); }
    rational& operator[](std::size_t n) { return coeffs_.at(n); }
    const std::vector<rational>& coefficients() const noexcept { return coeffs_; }

    void add_scaled(const series_poly& o, const rational& c)
    {
        check_order(o);
        for (std::size_t n = 0; n < coeffs_.size(); ++n) {
            coeffs_[n] += c * o.coeffs_[n];
        }
    }

    /// Cauchy product truncated at the common order.
    friend series_poly operator*(const series_poly& a, const series_poly& b)
    {
        a.check_order(b);
        series_poly r(a.order());
        for (std::size_t i = 0; i <= a.order(); ++i) {
            if (a.coeffs_[i] == 0) {
                continue;
            }
            for (std::size_t j = 0; i + j <= a.order(); ++j) {
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return r;
    }

    friend bool operator==(const series_poly&, const series_poly&) = default;

private:
    void check_order(const series_poly& o) const
    {
        if (o.order() != order()) {
            throw std::invalid_argument("series_poly: truncation orders differ");
        }
    }

    std::vector<rational> coeffs_;
};

namespace detail {

// n^{-e} as an exact rational.
inline rational inverse_power(long n, long e)
{
    integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(e < 0 ? -e : e));
    return e >= 0 ? rational(integer(1), p) : rational(p);
}

} // namespace detail

/// Coefficients of Li_k(z) = sum_{0<n_1<...<n_r} z^{n_r} / prod n_i^{k_i}
/// up to z^N, by a prefix-sum recursion over the depth.
inline series_poly mpl_coefficients(const index& k, std::size_t order)
{
    if (order < 1) {
        throw std::invalid_argument("mpl_coefficients: order must be positive");
    }
    series_poly s(order);
    if (k.empty()) {
        s[0] = 1;
        return s;
    }
    const auto e = k.entries();
    for (std::size_t n = 1; n <= order; ++n) {
        s[n] = detail::inverse_power(static_cast<long>(n), e[0]);
    }
    for (std::size_t t = 1; t < e.size(); ++t) {
        series_poly next(order);
        rational below = 0; // sum_{m<n} s[m]
        for (std::size_t n = 1; n <= order; ++n) {
            next[n] = below * detail::inverse_power(static_cast<long>(n), e[t]);
            below += s[n];
        }
        s = std::move(next);
    }
    return s;
}

inline series_poly mpl_coefficients(const index_sum& combination, std::size_t order)
{
    series_poly s(order);
    for (const auto& [l, c] : combination) {
        s.add_scaled(mpl_coefficients(l, order), c);
    }
    return s;
}

/// H_n(k) for n = 0..N (H_0 is 1 for the empty index, else 0).
inline std::vector<rational> harmonic_sums(const index& k, std::size_t order)
{
    const series_poly s = mpl_coefficients(k, order);
    std::vector<rational> h(order + 1);
    rational acc = 0;
    for (std::size_t n = 0; n <= order; ++n) {
        acc += s[n];
        h[n] = acc;
    }
    return h;
}

/// H_N(k) = sum_{0<n_1<...<n_r<=N} prod n_i^{-k_i}.
inline rational harmonic_sum(const index& k, std::size_t order)
{
    if (order < 1) {
        throw std::invalid_argument("harmonic_sum: order must be positive");
    }
    return harmonic_sums(k, order).back();
}

struct verification_report {
    bool pass = true;
    std::optional<std::size_t> first_mismatch;
    std::size_t order = 0;
};

namespace detail {

inline verification_report compare(const std::vector<rational>& lhs, const std::vector<rational>& rhs, std::size_t order,
                                   std::size_t from)
{
    verification_report r;
    r.order = order;
    for (std::size_t n = from; n <= order; ++n) {
        if (lhs[n] != rhs[n]) {
            r.pass = false;
            r.first_mismatch = n;
            break;
        }
    }
    return r;
}

} // namespace detail

/// Li_k(z) against sum c_{k,l} Li_l(z) from the positive-index map.
inline verification_report verify_reduction(const index& k, std::size_t order)
{
    const auto lhs = mpl_coefficients(k, order);
    const auto rhs = mpl_coefficients(pi_plus(k), order);
    return detail::compare(lhs.coefficients(), rhs.coefficients(), order, 0);
}

/// Li_k(z) Li_l(z) against the shuffle expansion, coefficientwise.
inline verification_report verify_shuffle(const index& k, const index& l, std::size_t order)
{
    const auto lhs = mpl_coefficients(k, order) * mpl_coefficients(l, order);
    const auto rhs = mpl_coefficients(shuffle(k, l), order);
    return detail::compare(lhs.coefficients(), rhs.coefficients(), order, 0);
}

/// H_n(k) H_n(l) against the stuffle expansion, for every n = 1..N.
inline verification_report verify_stuffle(const index& k, const index& l, std::size_t order)
{
    if (order < 1) {
        throw std::invalid_argument("verify_stuffle: order must be positive");
    }
    const auto hk = harmonic_sums(k, order);
    const auto hl = harmonic_sums(l, order);
    std::vector<rational> lhs(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        lhs[n] = hk[n] * hl[n];
    }
    std::vector<rational> rhs(order + 1);
    for (const auto& [m, c] : stuffle(k, l)) {
        const auto hm = harmonic_sums(m, order);
        for (std::size_t n = 0; n <= order; ++n) {
            rhs[n] += c * hm[n];
        }
    }
    return detail::compare(lhs, rhs, order, 1);
}

struct real_estimate {
    double value = 0;
    /// Heuristic tail size 1 / N^{m_k}; not a bound.
    double error_hint = 0;
};

/// Partial sum over 0 < n_1 < ... < n_r <= N of the real zeta series.
/// Only admissible indices are accepted.
inline real_estimate zeta_real_approx(const index& k, std::size_t order)
{
    if (!is_admissible(k)) {
        throw std::domain_error("zeta_real_approx: " + to_string(k) + " is not admissible");
    }
    if (order < 1) {
        throw std::invalid_argument("zeta_real_approx: order must be positive");
    }
    real_estimate r;
    if (k.empty()) {
        r.value = 1;
        return r;
    }
    const auto e = k.entries();
    std::vector<long double> level(order + 1);
    for (std::size_t n = 1; n <= order; ++n) {
        level[n] = std::pow(static_cast<long double>(n), -static_cast<long double>(e[0]));
    }
    for (std::size_t t = 1; t < e.size(); ++t) {
        long double below = 0;
        for (std::size_t n = 1; n <= order; ++n) {
            const long double cur = level[n];
            level[n] = below * std::pow(static_cast<long double>(n), -static_cast<long double>(e[t]));
            below += cur;
        }
    }
    long double total = 0;
    for (std::size_t n = 1; n <= order; ++n) {
        total += level[n];
    }
    r.value = static_cast<double>(total);
    r.error_hint = std::pow(static_cast<double>(order), -static_cast<double>(m_index(k).value()));
    return r;
}

} // namespace mzv
