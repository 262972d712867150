#pragma once

#include <mzv/index.hpp>
#include <mzv/linear_combination.hpp>

#include <algorithm>

namespace mzv {

/// Element of span_Q{integer indices}.
using index_sum = linear_combination<index>;

/// Minimum of m_index over the support; +inf for the zero sum.
inline extended_int m_of_sum(const index_sum& s)
{
    extended_int m = extended_int::infinity();
    for (const auto& [k, c] : s) {
        m = std::min(m, m_index(k));
    }
    return m;
}

/// Appends a fixed last entry to every index in the sum.
inline index_sum append_entry(const index_sum& s, entry_type e)
{
    return s.map_keys([e](const index& k) { return k.appended(e); });
}

} // namespace mzv
