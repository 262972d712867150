#pragma once

// Text and JSON forms of indices, sums, reports and relations.

#include <mzv/index_sum.hpp>
#include <mzv/relations.hpp>
#include <mzv/series.hpp>
#include <mzv/word.hpp>

#include "json.hpp"

#include <cctype>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mzv {

using json = nlohmann::ordered_json;

/// Malformed user input.
class usage_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parses "(k1,k2,...)" with optional whitespace; "()" is the empty index.
/// Both '-' and U+2212 are accepted as minus signs.
inline index parse_index(std::string_view text)
{
    std::size_t i = 0;
    auto fail = [&](const std::string& what) -> void {
        throw usage_error("index syntax error at position " + std::to_string(i) + " in \"" + std::string(text)
                          + "\": " + what);
    };
    auto skip_space = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
        }
    };
    constexpr std::string_view unicode_minus = "\xE2\x88\x92";

    skip_space();
    if (i >= text.size() || text[i] != '(') {
        fail("expected '('");
    }
    ++i;
    std::vector<entry_type> entries;
    skip_space();
    if (i < text.size() && text[i] == ')') {
        ++i;
    } else {
        while (true) {
            skip_space();
            bool negative = false;
            if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
                negative = text[i] == '-';
                ++i;
            } else if (text.substr(i, unicode_minus.size()) == unicode_minus) {
                negative = true;
                i += unicode_minus.size();
            }
            const std::size_t start = i;
            long long value = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                value = value * 10 + (text[i] - '0');
                if (value > std::numeric_limits<entry_type>::max()) {
                    fail("entry out of range");
                }
                ++i;
            }
            if (i == start) {
                fail("expected an integer");
            }
            entries.push_back(static_cast<entry_type>(negative ? -value : value));
            skip_space();
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            if (i < text.size() && text[i] == ')') {
                ++i;
                break;
            }
            fail("expected ',' or ')'");
        }
    }
    skip_space();
    if (i != text.size()) {
        fail("trailing characters");
    }
    return index(std::move(entries));
}

inline json to_json(const index& k)
{
    json a = json::array();
    for (auto e : k) {
        a.push_back(e);
    }
    return a;
}

inline index index_from_json(const json& j)
{
    if (!j.is_array()) {
        throw usage_error("index JSON must be an array");
    }
    std::vector<entry_type> entries;
    for (const auto& e : j) {
        if (!e.is_number_integer()) {
            throw usage_error("index JSON entries must be integers");
        }
        entries.push_back(e.get<entry_type>());
    }
    return index(std::move(entries));
}

/// {"terms":[{"coeff":"p/q","index":[...]}, ...]} in canonical term order.
inline json to_json(const index_sum& s)
{
    json terms = json::array();
    for (const auto& [k, c] : s) {
        json t;
        t["coeff"] = to_string(c);
        t["index"] = to_json(k);
        terms.push_back(std::move(t));
    }
    json out;
    out["terms"] = std::move(terms);
    return out;
}

inline index_sum index_sum_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
        throw usage_error("index sum JSON must be an object with a \"terms\" array");
    }
    index_sum s;
    for (const auto& t : j["terms"]) {
        s.add(index_from_json(t.at("index")), parse_rational(t.at("coeff").get<std::string>()));
    }
    return s;
}

/// {"pass":bool,"first_mismatch":int|null,"order":N}
inline json to_json(const verification_report& r)
{
    json out;
    out["pass"] = r.pass;
    out["first_mismatch"] = r.first_mismatch ? json(*r.first_mismatch) : json(nullptr);
    out["order"] = r.order;
    return out;
}

inline json to_json(const relation& r)
{
    json out;
    out["pair"] = json::array({to_json(r.left), to_json(r.right)});
    out["shuffle"] = to_json(r.shuffle_expansion);
    out["stuffle"] = to_json(r.stuffle_expansion);
    out["difference"] = to_json(r.difference);
    return out;
}

inline relation relation_from_json(const json& j)
{
    relation r;
    const auto& pair = j.at("pair");
    if (!pair.is_array() || pair.size() != 2) {
        throw usage_error("relation JSON: \"pair\" must hold two indices");
    }
    r.left = index_from_json(pair[0]);
    r.right = index_from_json(pair[1]);
    r.shuffle_expansion = index_sum_from_json(j.at("shuffle"));
    r.stuffle_expansion = index_sum_from_json(j.at("stuffle"));
    r.difference = index_sum_from_json(j.at("difference"));
    return r;
}

/// Human-readable form, e.g. "1·(2) − 1·(3)"; "0" for the zero sum.
inline std::string pretty(const index_sum& s)
{
    if (s.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [k, c] : s) {
        const bool negative = c < 0;
        if (first) {
            out += negative ? "−" : "";
        } else {
            out += negative ? " − " : " + ";
        }
        out += to_string(rational(abs(c))) + "·" + to_string(k);
        first = false;
    }
    return out;
}

} // namespace mzv
