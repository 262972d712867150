#pragma once

// Zeta symbols of admissible integer indices and double shuffle relations
// among positive admissible ones.

#include <mzv/index_sum.hpp>
#include <mzv/positive_reduction.hpp>
#include <mzv/series.hpp>
#include <mzv/shuffle.hpp>
#include <mzv/stuffle.hpp>

#include <cmath>
#include <cstddef>
#include <map>
#include <stdexcept>

namespace mzv {

/// zeta(k) as a combination of positive admissible zeta symbols.
inline index_sum zeta_expand(const index& k)
{
    if (!is_admissible(k)) {
        throw std::domain_error("zeta_expand: " + to_string(k) + " is not admissible");
    }
    return pi_plus(k);
}

/// zeta(k sh l) = zeta(k * l), both sides reduced to positive admissible
/// indices. The relation asserts sum difference_i zeta(l_i) = 0.
struct relation {
    index left;
    index right;
    index_sum shuffle_expansion;
    index_sum stuffle_expansion;
    index_sum difference;

    bool trivial() const noexcept { return difference.empty(); }
    friend bool operator==(const relation&, const relation&) = default;
};

inline relation dsr_relation(const index& k, const index& l)
{
    if (!is_admissible(k) || !is_admissible(l)) {
        throw std::domain_error("dsr_relation: both indices must be admissible, got " + to_string(k) + " and "
                                + to_string(l));
    }
    relation r{k, l, pi_plus(shuffle(k, l)), pi_plus(stuffle(k, l)), {}};
    r.difference = r.shuffle_expansion - r.stuffle_expansion;
    return r;
}

struct numeric_report {
    bool pass = true;
    double residual = 0;
    std::size_t order = 0;
    double tolerance = 0;
};

inline numeric_report verify_relation_numeric(const relation& rel, std::size_t order, double tolerance)
{
    if (order < 1 || !(tolerance > 0)) {
        throw std::invalid_argument("verify_relation_numeric: need order >= 1 and tolerance > 0");
    }
    numeric_report r;
    r.order = order;
    r.tolerance = tolerance;
    long double acc = 0;
    for (const auto& [l, c] : rel.difference) {
        acc += static_cast<long double>(c.get_d()) * zeta_real_approx(l, order).value;
    }
    r.residual = static_cast<double>(acc);
    r.pass = std::fabs(r.residual) < tolerance;
    return r;
}

} // namespace mzv
