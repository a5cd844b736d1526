#pragma once

/**
 * @file cli.hpp
 * @brief The polycoef command line: query, row, table, verify, bench.
 *
 * run_cli() does all the work and returns the process exit code, so tests
 * can drive it in-process with string streams:
 *   0  success / every check passed
 *   1  a verification check failed (or bench strategies disagreed)
 *   2  usage error
 */

#include <charconv>
#include <climits>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bench.hpp"
#include "strategy.hpp"
#include "verifier.hpp"

namespace polycoef::cli {

enum class Format { text, csv, json };

struct QueryConfig {
    unsigned terms_m = 1;
    unsigned power_n = 0;
    SignedDegree degree_lambda = 0;
    Strategy strategy = Strategy::automatic;
    Format format = Format::text;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::int64_t parse_int(const std::string& text, std::string_view flag) {
    std::int64_t v = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (text.empty() || ec != std::errc{} || ptr != last) {
        throw UsageError(std::string(flag) + ": malformed integer '" + text + "'");
    }
    return v;
}

inline unsigned parse_unsigned(const std::string& text, std::string_view flag, unsigned min_value) {
    const std::int64_t v = parse_int(text, flag);
    if (v < static_cast<std::int64_t>(min_value) || v > static_cast<std::int64_t>(UINT_MAX)) {
        throw UsageError(std::string(flag) + ": value " + text + " must be at least " +
                         std::to_string(min_value));
    }
    return static_cast<unsigned>(v);
}

inline Format parse_format(const std::string& s) {
    if (s == "text") return Format::text;
    if (s == "csv") return Format::csv;
    if (s == "json") return Format::json;
    throw UsageError("--format: expected text, csv or json, got '" + s + "'");
}

inline Strategy parse_strategy_flag(const std::string& s) {
    if (auto st = parse_strategy(s)) return *st;
    throw UsageError("--strategy: expected euler, direct, binpow or auto, got '" + s + "'");
}

inline std::vector<Strategy> parse_strategy_list(const std::string& s) {
    std::vector<Strategy> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto st = parse_strategy(item);
        if (!st || *st == Strategy::automatic) {
            throw UsageError("--strategies: expected a comma list of euler, direct, binpow; got '" +
                             item + "'");
        }
        out.push_back(*st);
    }
    if (out.empty()) throw UsageError("--strategies: at least one strategy is required");
    return out;
}

inline nlohmann::ordered_json row_json(const CoeffRow& r) {
    nlohmann::ordered_json j;
    j["m"] = r.terms_m;
    j["n"] = r.power_n;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : r.coeffs) arr.push_back(c.to_string());
    j["coeffs"] = std::move(arr);
    return j;
}

inline std::string join(const std::vector<Natural>& values, char sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out.push_back(sep);
        out += values[i].to_string();
    }
    return out;
}

inline void write_row(std::ostream& out, const CoeffRow& r, Format f) {
    switch (f) {
        case Format::text: out << join(r.coeffs, ' ') << '\n'; break;
        case Format::csv: out << join(r.coeffs, ',') << '\n'; break;
        case Format::json: out << row_json(r).dump() << '\n'; break;
    }
}

}  // namespace detail

inline Natural cmd_query(const QueryConfig& cfg) {
    MemoTable memo;
    const Strategy s = resolve_strategy(cfg.strategy, false, cfg.terms_m, cfg.power_n,
                                        auto_threshold_from_env());
    return compute_coeff(s, cfg.terms_m, cfg.power_n, cfg.degree_lambda, memo);
}

inline CoeffRow cmd_row(const QueryConfig& cfg, MemoTable& memo) {
    const Strategy s = resolve_strategy(cfg.strategy, true, cfg.terms_m, cfg.power_n,
                                        auto_threshold_from_env());
    return compute_row(s, cfg.terms_m, cfg.power_n, memo);
}

inline void cmd_table(std::ostream& out, unsigned m, unsigned n_max, Strategy strategy, Format format) {
    MemoTable memo;
    std::vector<CoeffRow> rows;
    for (unsigned n = 0; n <= n_max; ++n) rows.push_back(cmd_row({m, n, 0, strategy, format}, memo));
    if (format == Format::json) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& r : rows) arr.push_back(detail::row_json(r));
        out << arr.dump() << '\n';
        return;
    }
    for (const auto& r : rows) detail::write_row(out, r, format);
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Coefficients of (1 + x + ... + x^(m-1))^n in exact arithmetic", "polycoef"};
    app.require_subcommand(1);

    std::string m_text, n_text, l_text, strategy_text = "auto", format_text = "text";
    std::string max_n_text, m_max_text = "6", n_max_text = "12";
    std::string strategies_text = "euler,direct,binpow";

    auto* query = app.add_subcommand("query", "Print one coefficient <n, lambda>^m");
    query->add_option("-m,--terms", m_text, "Number of terms m (>= 1)")->required();
    query->add_option("-n,--power", n_text, "Power n (>= 0)")->required();
    query->add_option("-l,--degree", l_text, "Degree lambda (any integer)")->required();
    query->add_option("--strategy", strategy_text, "euler|direct|binpow|auto");
    query->add_option("--format", format_text, "text|csv|json");

    auto* row_cmd = app.add_subcommand("row", "Print the full row of coefficients");
    row_cmd->add_option("-m,--terms", m_text, "Number of terms m (>= 1)")->required();
    row_cmd->add_option("-n,--power", n_text, "Power n (>= 0)")->required();
    row_cmd->add_option("--strategy", strategy_text, "euler|direct|binpow|auto");
    row_cmd->add_option("--format", format_text, "text|csv|json");

    auto* table = app.add_subcommand("table", "Print rows n = 0..max-n");
    table->add_option("-m,--terms", m_text, "Number of terms m (>= 1)")->required();
    table->add_option("--max-n", max_n_text, "Largest power")->required();
    table->add_option("--strategy", strategy_text, "euler|direct|binpow|auto");
    table->add_option("--format", format_text, "text|csv|json");

    auto* verify = app.add_subcommand("verify", "Run fixtures, cross checks and invariants");
    verify->add_option("--m-max", m_max_text, "Largest m for cross checks (default 6)");
    verify->add_option("--n-max", n_max_text, "Largest n for cross checks (default 12)");

    auto* bench = app.add_subcommand("bench", "Time strategies on one row and its central coefficient");
    bench->add_option("-m,--terms", m_text, "Number of terms m (>= 1)")->required();
    bench->add_option("-n,--power", n_text, "Power n (>= 0)")->required();
    bench->add_option("--strategies", strategies_text, "Comma list of euler,direct,binpow");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "polycoef: " << e.what() << '\n';
        return 2;
    }

    try {
        if (*query) {
            QueryConfig cfg{detail::parse_unsigned(m_text, "-m", 1), detail::parse_unsigned(n_text, "-n", 0),
                            detail::parse_int(l_text, "-l"), detail::parse_strategy_flag(strategy_text),
                            detail::parse_format(format_text)};
            const Natural v = cmd_query(cfg);
            if (cfg.format == Format::json) {
                nlohmann::ordered_json j;
                j["m"] = cfg.terms_m;
                j["n"] = cfg.power_n;
                j["lambda"] = cfg.degree_lambda;
                j["value"] = v.to_string();
                out << j.dump() << '\n';
            } else {
                out << v << '\n';
            }
            return 0;
        }
        if (*row_cmd) {
            QueryConfig cfg{detail::parse_unsigned(m_text, "-m", 1), detail::parse_unsigned(n_text, "-n", 0),
                            0, detail::parse_strategy_flag(strategy_text), detail::parse_format(format_text)};
            MemoTable memo;
            detail::write_row(out, cmd_row(cfg, memo), cfg.format);
            return 0;
        }
        if (*table) {
            cmd_table(out, detail::parse_unsigned(m_text, "-m", 1),
                      detail::parse_unsigned(max_n_text, "--max-n", 0),
                      detail::parse_strategy_flag(strategy_text), detail::parse_format(format_text));
            return 0;
        }
        if (*verify) {
            const auto report = verify_suite(detail::parse_unsigned(m_max_text, "--m-max", 1),
                                             detail::parse_unsigned(n_max_text, "--n-max", 0));
            out << report.to_json().dump(2) << '\n';
            return report.ok() ? 0 : 1;
        }
        if (*bench) {
            const auto report = run_bench(detail::parse_unsigned(m_text, "-m", 1),
                                          detail::parse_unsigned(n_text, "-n", 0),
                                          detail::parse_strategy_list(strategies_text));
            out << report.to_json().dump(2) << '\n';
            if (!report.values_agree) {
                err << "polycoef: strategies disagree on coefficient values\n";
                return 1;
            }
            return 0;
        }
    } catch (const UsageError& e) {
        err << "polycoef: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "polycoef: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace polycoef::cli
