#pragma once

// Exact rational and integer types shared by every module.

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <stdexcept>

namespace mzv {

using integer = mpz_class;
using rational = mpq_class;

/// num/den in lowest terms. The two-argument mpq_class constructor does not
/// reduce, so every fraction built from parts goes through here.
inline rational fraction(long num, long den)
{
    if (den == 0) {
        throw std::invalid_argument("zero denominator");
    }
    rational q(num, 1);
    q /= den;
    return q;
}

/// "p/q" in lowest terms, or "p" when q == 1.
inline std::string to_string(const rational& q)
{
    return q.get_str();
}

inline std::string to_string(const integer& z)
{
    return z.get_str();
}

/// Parses "p", "-p" or "p/q"; the result is canonicalized.
inline rational parse_rational(std::string_view text)
{
    rational q;
    if (text.empty() || q.set_str(std::string(text), 10) != 0) {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    if (q.get_den() == 0) {
        throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    }
    q.canonicalize();
    return q;
}

} // namespace mzv
