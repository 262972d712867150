#pragma once

// Command-line front end. `run` is the whole program minus process setup,
// so tests can drive it with in-memory streams.
//
// Exit codes: 0 success, 1 a verification check failed, 2 usage error.

#include <mzv/index.hpp>
#include <mzv/io.hpp>
#include <mzv/positive_reduction.hpp>
#include <mzv/relations.hpp>
#include <mzv/series.hpp>
#include <mzv/shuffle.hpp>
#include <mzv/stuffle.hpp>
#include <mzv/verify.hpp>

#include "CLI11.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace mzv::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_usage = 2;

/// Default truncation order for `eval` and `verify`, overridable through
/// the MZV_ORDER environment variable.
inline std::optional<std::size_t> order_from_environment()
{
    const char* value = std::getenv("MZV_ORDER");
    if (value == nullptr || *value == '\0') {
        return std::nullopt;
    }
    char* end = nullptr;
    const unsigned long long n = std::strtoull(value, &end, 10);
    if (*end != '\0' || n == 0) {
        throw usage_error("MZV_ORDER must be a positive integer, got \"" + std::string(value) + "\"");
    }
    return static_cast<std::size_t>(n);
}

inline constexpr std::size_t default_eval_order = 10000;

namespace detail {

inline json m_index_json(const index& k)
{
    const auto m = m_index(k);
    json out;
    out["index"] = to_json(k);
    out["m"] = m.is_infinite() ? json("inf") : json(m.value());
    out["class"] = to_string(classify(k));
    return out;
}

inline void print_sum(std::ostream& out, const index_sum& s, bool pretty_output)
{
    if (pretty_output) {
        out << pretty(s) << '\n';
    } else {
        out << to_json(s).dump() << '\n';
    }
}

inline int run_verify(std::ostream& out, const std::string& suite_name, const suite_config& config, bool list_cases)
{
    std::vector<suite> suites;
    if (suite_name == "all") {
        suites = all_suites();
    } else if (auto s = parse_suite(suite_name)) {
        suites.push_back(*s);
    } else {
        throw usage_error("unknown suite \"" + suite_name + "\"");
    }
    bool ok = true;
    for (auto s : suites) {
        if (list_cases) {
            for (const auto& c : generate_cases(s, config.seed, config.cases)) {
                out << to_string(s) << ' ' << c.describe() << '\n';
            }
            continue;
        }
        const suite_result r = run_suite(s, config);
        for (const auto& c : r.cases) {
            if (!c.pass) {
                out << "FAIL " << to_string(s) << ' ' << c.input.describe() << ": " << c.detail << '\n';
            }
        }
        out << to_string(s) << ": " << r.passed() << '/' << r.cases.size() << " pass (order " << r.order
            << ", seed " << config.seed << ")\n";
        ok = ok && r.all_pass();
    }
    return ok ? exit_ok : exit_check_failed;
}

} // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact algebra of integer-index multiple zeta values"};
    app.name("mzv");
    app.require_subcommand(1);
    app.fallthrough();

    bool pretty_output = false;
    app.add_flag("--pretty", pretty_output, "Human-readable output instead of JSON");

    std::string first;
    std::string second;

    auto* m_cmd = app.add_subcommand("m-index", "Regularizability index m_k and classification");
    m_cmd->add_option("index", first, "Index, e.g. \"(0,3)\"")->required();

    auto* classify_cmd = app.add_subcommand("classify", "admissible / regularizable_only / non_regularizable");
    classify_cmd->add_option("index", first)->required();

    auto* pi_cmd = app.add_subcommand("pi-plus", "Positive-index expansion");
    pi_cmd->add_option("index", first)->required();

    auto* shuffle_cmd = app.add_subcommand("shuffle", "Shuffle product of two indices");
    shuffle_cmd->add_option("left", first)->required();
    shuffle_cmd->add_option("right", second)->required();

    auto* stuffle_cmd = app.add_subcommand("stuffle", "Stuffle product of two indices");
    stuffle_cmd->add_option("left", first)->required();
    stuffle_cmd->add_option("right", second)->required();

    std::string out_path;
    auto* relation_cmd = app.add_subcommand("relation", "Double shuffle relation of two admissible indices");
    relation_cmd->add_option("left", first)->required();
    relation_cmd->add_option("right", second)->required();
    relation_cmd->add_option("--out", out_path, "Append the relation as one JSON line to this file");

    std::string suite_name = "all";
    suite_config config;
    std::size_t order = 0;
    bool list_cases = false;
    auto* verify_cmd = app.add_subcommand("verify", "Randomized property suites against exact oracles");
    verify_cmd->add_option("--suite", suite_name, "reduction, shuffle, stuffle, homomorphism, m-formula or all");
    verify_cmd->add_option("--seed", config.seed, "Seed for case generation");
    verify_cmd->add_option("--cases", config.cases, "Cases per suite");
    auto* verify_order = verify_cmd->add_option("--order", order, "Truncation order")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--jobs", config.jobs, "Worker threads")->check(CLI::PositiveNumber);
    verify_cmd->add_flag("--list-cases", list_cases, "Print the generated cases instead of running them");

    auto* eval_cmd = app.add_subcommand("eval", "Partial-sum estimate of the real zeta value");
    eval_cmd->add_option("index", first)->required();
    auto* eval_order = eval_cmd->add_option("--order", order, "Upper summation bound N")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (m_cmd->parsed() || classify_cmd->parsed()) {
            const index k = parse_index(first);
            if (m_cmd->parsed()) {
                const json j = detail::m_index_json(k);
                if (pretty_output) {
                    out << "m = " << to_string(m_index(k)) << " (" << to_string(classify(k)) << ")\n";
                } else {
                    out << j.dump() << '\n';
                }
            } else if (pretty_output) {
                out << to_string(classify(k)) << '\n';
            } else {
                json j;
                j["index"] = to_json(k);
                j["class"] = to_string(classify(k));
                out << j.dump() << '\n';
            }
            return exit_ok;
        }
        if (pi_cmd->parsed()) {
            detail::print_sum(out, pi_plus(parse_index(first)), pretty_output);
            return exit_ok;
        }
        if (shuffle_cmd->parsed()) {
            detail::print_sum(out, shuffle(parse_index(first), parse_index(second)), pretty_output);
            return exit_ok;
        }
        if (stuffle_cmd->parsed()) {
            detail::print_sum(out, stuffle(parse_index(first), parse_index(second)), pretty_output);
            return exit_ok;
        }
        if (relation_cmd->parsed()) {
            const relation rel = dsr_relation(parse_index(first), parse_index(second));
            const std::string line = to_json(rel).dump();
            if (pretty_output) {
                out << "shuffle:    " << pretty(rel.shuffle_expansion) << '\n'
                    << "stuffle:    " << pretty(rel.stuffle_expansion) << '\n'
                    << "difference: " << pretty(rel.difference) << " = 0\n";
            } else {
                out << line << '\n';
            }
            if (!out_path.empty()) {
                std::ofstream file(out_path, std::ios::app);
                if (!file) {
                    throw usage_error("cannot open \"" + out_path + "\" for appending");
                }
                file << line << '\n';
            }
            return exit_ok;
        }
        if (verify_cmd->parsed()) {
            if (verify_order->count() > 0) {
                config.order = order;
            } else {
                config.order = order_from_environment();
            }
            return detail::run_verify(out, suite_name, config, list_cases);
        }
        if (eval_cmd->parsed()) {
            const index k = parse_index(first);
            const std::size_t n = eval_order->count() > 0 ? order : order_from_environment().value_or(default_eval_order);
            const real_estimate est = zeta_real_approx(k, n);
            if (pretty_output) {
                out << "zeta" << to_string(k) << " ~ " << est.value << " (tail hint " << est.error_hint << ", N = " << n
                    << ")\n";
            } else {
                json j;
                j["index"] = to_json(k);
                j["value"] = est.value;
                j["error_hint"] = est.error_hint;
                j["order"] = n;
                out << j.dump() << '\n';
            }
            return exit_ok;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("mzv");
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace mzv::cli
