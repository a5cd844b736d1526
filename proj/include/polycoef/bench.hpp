#pragma once

/**
 * @file bench.hpp
 * @brief Times each strategy on a full row and on the central coefficient.
 *
 * Values from every strategy are compared before the report is built;
 * values_agree is false if any of them differ.
 */

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "strategy.hpp"

namespace polycoef {

struct BenchRecord {
    Strategy strategy = Strategy::euler;
    std::string task;  // "row" or "central"
    std::uint64_t wall_ns = 0;
    std::size_t peak_bits = 0;
    std::optional<std::size_t> memo_entries;       // euler only
    std::optional<std::uint64_t> multiplications;  // polynomial strategies only
};

struct BenchReport {
    unsigned m = 1;
    unsigned n = 0;
    SignedDegree central_lambda = 0;
    std::string memo_mode;
    bool values_agree = true;
    std::vector<BenchRecord> records;
    std::vector<Natural> row;
    Natural central;

    nlohmann::ordered_json to_json() const {
        using nlohmann::ordered_json;
        ordered_json j;
        j["m"] = m;
        j["n"] = n;
        j["central_lambda"] = central_lambda;
        j["memo_mode"] = memo_mode;
        j["values_agree"] = values_agree;
        j["row_length"] = row.size();
        j["central_value"] = central.to_string();
        ordered_json results = ordered_json::array();
        for (const auto& r : records) {
            ordered_json e;
            e["strategy"] = std::string(to_string(r.strategy));
            e["task"] = r.task;
            e["wall_ns"] = r.wall_ns;
            e["peak_bits"] = r.peak_bits;
            e["memo_entries"] = r.memo_entries ? ordered_json(*r.memo_entries) : ordered_json(nullptr);
            e["multiplications"] =
                r.multiplications ? ordered_json(*r.multiplications) : ordered_json(nullptr);
            results.push_back(std::move(e));
        }
        j["results"] = std::move(results);
        return j;
    }
};

inline std::size_t peak_bits(const std::vector<Natural>& values) {
    std::size_t best = 0;
    for (const auto& v : values) best = std::max(best, v.bit_length());
    return best;
}

/// Strategies must be concrete (no auto); duplicates are run once.
inline BenchReport run_bench(unsigned m, unsigned n, std::vector<Strategy> strategies) {
    if (m == 0) throw std::invalid_argument("number of terms m must be at least 1");
    if (strategies.empty()) throw std::invalid_argument("at least one strategy is required");
    std::vector<Strategy> unique;
    for (auto s : strategies) {
        if (s == Strategy::automatic) throw std::invalid_argument("bench needs concrete strategies");
        if (std::find(unique.begin(), unique.end(), s) == unique.end()) unique.push_back(s);
    }

    BenchReport rep;
    rep.m = m;
    rep.n = n;
    rep.central_lambda = static_cast<SignedDegree>(static_cast<std::uint64_t>(m - 1) * n / 2);
    rep.memo_mode = std::string(MemoTable::mode());

    auto elapsed = [](auto t0) {
        return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(
                                              std::chrono::steady_clock::now() - t0)
                                              .count());
    };

    bool first = true;
    for (auto s : unique) {
        const bool euler = s == Strategy::euler;
        {
            MemoTable memo;
            MulCounter counter;
            const auto t0 = std::chrono::steady_clock::now();
            CoeffRow r = compute_row(s, m, n, memo, &counter);
            BenchRecord rec{s, "row", elapsed(t0), peak_bits(r.coeffs), std::nullopt, std::nullopt};
            if (euler) rec.memo_entries = memo.size();
            else rec.multiplications = counter.poly_muls;
            rep.records.push_back(rec);
            if (first) rep.row = std::move(r.coeffs);
            else if (rep.row != r.coeffs) rep.values_agree = false;
        }
        {
            MemoTable memo;
            MulCounter counter;
            const auto t0 = std::chrono::steady_clock::now();
            Natural c = compute_coeff(s, m, n, rep.central_lambda, memo, &counter);
            BenchRecord rec{s, "central", elapsed(t0), c.bit_length(), std::nullopt, std::nullopt};
            if (euler) rec.memo_entries = memo.size();
            else rec.multiplications = counter.poly_muls;
            rep.records.push_back(rec);
            if (first) rep.central = std::move(c);
            else if (rep.central != c) rep.values_agree = false;
        }
        first = false;
    }
    if (rep.values_agree && rep.row[static_cast<std::size_t>(rep.central_lambda)] != rep.central)
        rep.values_agree = false;
    return rep;
}

}  // namespace polycoef
