#pragma once

// Randomized property suites behind `mzv verify`. Cases are drawn serially
// from a seeded generator, then evaluated (optionally in parallel); results
// are always reported in case order.

#include <mzv/index.hpp>
#include <mzv/positive_reduction.hpp>
#include <mzv/series.hpp>
#include <mzv/shuffle.hpp>
#include <mzv/stuffle.hpp>

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace mzv {

enum class suite { reduction, shuffle, stuffle, homomorphism, m_formula };

inline const std::vector<suite>& all_suites()
{
    static const std::vector<suite> suites{suite::reduction, suite::shuffle, suite::stuffle, suite::homomorphism,
                                           suite::m_formula};
    return suites;
}

inline std::string to_string(suite s)
{
    switch (s) {
    case suite::reduction:
        return "reduction";
    case suite::shuffle:
        return "shuffle";
    case suite::stuffle:
        return "stuffle";
    case suite::homomorphism:
        return "homomorphism";
    case suite::m_formula:
        return "m-formula";
    }
    return "unknown";
}

inline std::optional<suite> parse_suite(const std::string& name)
{
    for (auto s : all_suites()) {
        if (to_string(s) == name) {
            return s;
        }
    }
    return std::nullopt;
}

/// Default truncation order per suite: series checks use 60, harmonic 50.
inline std::size_t default_order(suite s)
{
    return s == suite::stuffle ? 50 : 60;
}

/// Uniform draws with a portable reduction, so a seed means the same cases
/// on every standard library.
class case_generator {
public:
    explicit case_generator(std::uint64_t seed) : rng_(seed) {}

    long uniform(long lo, long hi)
    {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(rng_() % span);
    }

    index random_index(std::size_t max_depth, entry_type lo, entry_type hi)
    {
        const auto r = static_cast<std::size_t>(uniform(0, static_cast<long>(max_depth)));
        std::vector<entry_type> v(r);
        for (auto& e : v) {
            e = static_cast<entry_type>(uniform(lo, hi));
        }
        return index(std::move(v));
    }

    index random_admissible(std::size_t max_depth, entry_type lo, entry_type hi)
    {
        while (true) {
            index k = random_index(max_depth, lo, hi);
            if (is_admissible(k)) {
                return k;
            }
        }
    }

private:
    std::mt19937_64 rng_;
};

struct verify_case {
    index left;
    std::optional<index> right;

    std::string describe() const { return right ? to_string(left) + " " + to_string(*right) : to_string(left); }
};

struct case_result {
    verify_case input;
    bool pass = false;
    std::string detail;
};

struct suite_result {
    suite which;
    std::size_t order = 0;
    std::vector<case_result> cases;

    std::size_t passed() const
    {
        return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const auto& c) { return c.pass; }));
    }
    bool all_pass() const { return passed() == cases.size(); }
};

struct suite_config {
    std::uint64_t seed = 1;
    std::size_t cases = 100;
    std::optional<std::size_t> order;
    unsigned jobs = 1;
};

/// Cases for a suite; a function of (suite, seed, count) only.
inline std::vector<verify_case> generate_cases(suite s, std::uint64_t seed, std::size_t count)
{
    // Mix the suite into the stream so `--suite all` does not reuse cases.
    case_generator gen(seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(s) + 1);
    std::vector<verify_case> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        switch (s) {
        case suite::reduction:
            out.push_back({gen.random_index(3, -3, 4), std::nullopt});
            break;
        case suite::shuffle:
        case suite::stuffle: {
            index a = gen.random_index(3, -3, 3);
            index b = gen.random_index(3, -3, 3);
            out.push_back({std::move(a), std::move(b)});
            break;
        }
        case suite::homomorphism: {
            index a = gen.random_admissible(3, -3, 4);
            index b = gen.random_admissible(3, -3, 4);
            out.push_back({std::move(a), std::move(b)});
            break;
        }
        case suite::m_formula: {
            index a = gen.random_index(4, -4, 4);
            index b = gen.random_index(4, -4, 4);
            out.push_back({std::move(a), std::move(b)});
            break;
        }
        }
    }
    return out;
}

namespace detail {

inline std::string mismatch_text(const verification_report& r)
{
    return r.pass ? std::string() : "first mismatch at order " + std::to_string(*r.first_mismatch);
}

inline case_result run_case(suite s, const verify_case& c, std::size_t order)
{
    case_result r{c, false, {}};
    switch (s) {
    case suite::reduction: {
        const auto rep = verify_reduction(c.left, order);
        r.pass = rep.pass;
        r.detail = mismatch_text(rep);
        break;
    }
    case suite::shuffle: {
        const auto rep = verify_shuffle(c.left, *c.right, order);
        r.pass = rep.pass;
        r.detail = mismatch_text(rep);
        break;
    }
    case suite::stuffle: {
        const auto rep = verify_stuffle(c.left, *c.right, order);
        r.pass = rep.pass;
        r.detail = mismatch_text(rep);
        break;
    }
    case suite::homomorphism: {
        const bool sh = pi_plus(shuffle(c.left, *c.right)) == pi_plus(shuffle(pi_plus(c.left), pi_plus(*c.right)));
        const bool st = pi_plus(stuffle(c.left, *c.right)) == pi_plus(stuffle(pi_plus(c.left), pi_plus(*c.right)));
        r.pass = sh && st;
        if (!sh) {
            r.detail += "shuffle homomorphism fails; ";
        }
        if (!st) {
            r.detail += "stuffle homomorphism fails";
        }
        break;
    }
    case suite::m_formula: {
        const auto mk = m_index(c.left);
        const auto ml = m_index(*c.right);
        const auto expected = std::min({mk, ml, mk + ml});
        const auto m_sh = m_of_sum(shuffle(c.left, *c.right));
        const auto m_st = m_of_sum(stuffle(c.left, *c.right));
        r.pass = m_sh == expected && m_st == expected;
        if (!r.pass) {
            r.detail = "expected m = " + to_string(expected) + ", shuffle gives " + to_string(m_sh) + ", stuffle gives "
                       + to_string(m_st);
        }
        break;
    }
    }
    return r;
}

} // namespace detail

inline suite_result run_cases(suite s, const std::vector<verify_case>& cases, std::size_t order, unsigned jobs)
{
    suite_result result{s, order, std::vector<case_result>(cases.size())};
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto worker = [&] {
        for (std::size_t i = next++; i < cases.size(); i = next++) {
            try {
                result.cases[i] = detail::run_case(s, cases[i], order);
            } catch (...) {
                if (!failed.exchange(true)) {
                    failure = std::current_exception();
                }
                return;
            }
        }
    };
    const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(cases.size())));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(worker);
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return result;
}

inline suite_result run_suite(suite s, const suite_config& config)
{
    const std::size_t order = config.order.value_or(default_order(s));
    return run_cases(s, generate_cases(s, config.seed, config.cases), order, config.jobs);
}

} // namespace mzv
