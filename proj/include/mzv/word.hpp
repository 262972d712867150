#pragma once

// Words over {j, d, y} modulo jd = dj = 1.
//
// A normalized word is j^{a_1} y j^{a_2} y ... y j^{a_s} with a_i in Z
// (j^{-1} = d). Blocks are stored last-first, so prepending a letter only
// touches the back of the vector, and for a word ending in y the stored
// blocks read (0, k_1, ..., k_r): the index is the tail of the storage.

#include <mzv/index.hpp>
#include <mzv/linear_combination.hpp>

#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdlib>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mzv {

enum class letter : char { j = 'j', d = 'd', y = 'y' };

class word {
public:
    /// The empty word.
    word() = default;

    /// Leading letter, or none for the empty word. A word made only of j or
    /// d letters reports that letter.
    enum class head_kind { empty, j, d, y };

    head_kind head() const noexcept
    {
        const auto lead = rev_.back();
        if (lead > 0) {
            return head_kind::j;
        }
        if (lead < 0) {
            return head_kind::d;
        }
        return rev_.size() > 1 ? head_kind::y : head_kind::empty;
    }

    bool is_empty() const noexcept { return rev_.size() == 1 && rev_.front() == 0; }

    /// Empty or ending in y: the Wy representatives.
    bool is_wy() const noexcept { return rev_.front() == 0; }

    std::size_t y_count() const noexcept { return rev_.size() - 1; }

    /// Exponent of the leading j-run (negative for a d-run).
    long leading_exponent() const noexcept { return rev_.back(); }

    /// Exponents a_1, ..., a_s of the canonical form, first block first.
    std::vector<long> blocks() const { return {rev_.rbegin(), rev_.rend()}; }

    /// Number of letters of the normalized word.
    std::size_t length() const noexcept
    {
        std::size_t n = rev_.size() - 1;
        for (auto a : rev_) {
            n += static_cast<std::size_t>(std::labs(a));
        }
        return n;
    }

    void prepend(letter l)
    {
        switch (l) {
        case letter::j:
            ++rev_.back();
            break;
        case letter::d:
            --rev_.back();
            break;
        case letter::y:
            rev_.push_back(0);
            break;
        }
    }

    /// Prepends j^e (d^{-e} for negative e).
    void prepend_power(long e) { rev_.back() += e; }

    /// Removes a leading y. Precondition: head() == y.
    word without_leading_y() const
    {
        word w = *this;
        w.rev_.pop_back();
        return w;
    }

    /// Removes the leading j/d run.
    word without_leading_run() const
    {
        word w = *this;
        w.rev_.back() = 0;
        return w;
    }

    word with_prepended_power(long e) const
    {
        word w = *this;
        w.prepend_power(e);
        return w;
    }

    /// Storage view, last block first. Used for hashing and by the index
    /// bijection.
    std::span<const long> reversed_blocks() const noexcept { return rev_; }

    static word from_reversed_blocks(std::vector<long> rev)
    {
        if (rev.empty()) {
            throw std::invalid_argument("word: at least one block is required");
        }
        word w;
        w.rev_ = std::move(rev);
        return w;
    }

    friend bool operator==(const word&, const word&) = default;
    friend auto operator<=>(const word& a, const word& b)
    {
        if (auto c = a.rev_.size() <=> b.rev_.size(); c != 0) {
            return c;
        }
        return std::lexicographical_compare_three_way(a.rev_.begin(), a.rev_.end(), b.rev_.begin(), b.rev_.end());
    }

private:
    std::vector<long> rev_{0};
};

struct word_hash {
    std::size_t operator()(const word& w) const noexcept
    {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (auto a : w.reversed_blocks()) {
            h ^= std::hash<long>{}(a) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

using word_sum = linear_combination<word>;

/// Cancels every adjacent jd / dj pair.
inline word normalize(std::span<const letter> letters)
{
    word w;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        w.prepend(*it);
    }
    return w;
}

/// w_k = j^{k_r} y ... j^{k_2} y j^{k_1} y; the empty index maps to the empty word.
inline word word_from_index(const index& k)
{
    std::vector<long> rev;
    rev.reserve(k.depth() + 1);
    rev.push_back(0);
    for (auto e : k) {
        rev.push_back(e);
    }
    return word::from_reversed_blocks(std::move(rev));
}

/// Inverse of word_from_index. Throws std::domain_error for words that do
/// not end in y (their class has no Wy representative).
inline index index_from_word(const word& w)
{
    if (!w.is_wy()) {
        throw std::domain_error("index_from_word: word does not end in y");
    }
    const auto rev = w.reversed_blocks();
    std::vector<entry_type> entries;
    entries.reserve(rev.size() - 1);
    for (std::size_t i = 1; i < rev.size(); ++i) {
        entries.push_back(static_cast<entry_type>(rev[i]));
    }
    return index(std::move(entries));
}

inline std::size_t length(const word& w) noexcept
{
    return w.length();
}

inline word_sum prepend(letter l, const word_sum& s)
{
    return s.map_keys([l](const word& w) {
        word r = w;
        r.prepend(l);
        return r;
    });
}

/// Prepends j^e to every term (d^{-e} for negative e).
inline word_sum prepend_power(long e, const word_sum& s)
{
    if (e == 0) {
        return s;
    }
    return s.map_keys([e](const word& w) { return w.with_prepended_power(e); });
}

/// Letters concatenated, e.g. "jjydy"; "1" for the empty word.
inline std::string to_string(const word& w)
{
    if (w.is_empty()) {
        return "1";
    }
    std::string s;
    const auto blocks = w.blocks();
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i > 0) {
            s += 'y';
        }
        s.append(static_cast<std::size_t>(std::labs(blocks[i])), blocks[i] > 0 ? 'j' : 'd');
    }
    return s;
}

/// Accepts plain letters ("jjydy"), exponent form ("j^2 y d y", "d^-1" is
/// j), whitespace anywhere, and "1" or "" for the empty word.
inline word parse_word(std::string_view text)
{
    std::vector<letter> letters;
    std::size_t i = 0;
    auto fail = [&](const std::string& what) {
        throw std::invalid_argument("word syntax error at position " + std::to_string(i) + ": " + what);
    };
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == '1') {
            ++i;
            continue;
        }
        if (c != 'j' && c != 'd' && c != 'y') {
            fail(std::string("unexpected character '") + c + "'");
        }
        ++i;
        long exponent = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            std::size_t start = i;
            if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
                ++i;
            }
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                ++i;
            }
            if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start])))) {
                fail("missing exponent");
            }
            exponent = std::stol(std::string(text.substr(start, i - start)));
        }
        letter l = static_cast<letter>(c);
        if (exponent < 0) {
            if (l == letter::y) {
                fail("negative power of y");
            }
            l = l == letter::j ? letter::d : letter::j;
            exponent = -exponent;
        }
        letters.insert(letters.end(), static_cast<std::size_t>(exponent), l);
    }
    return normalize(letters);
}

} // namespace mzv
