#pragma once

/**
 * @file fixtures.hpp
 * @brief Published expansion tables and reduced forms, embedded as data.
 *
 * Rows that were printed only up to some power are stored as that prefix;
 * the tail is implied by the palindrome property and expanded by
 * expected_values(). Misprints are kept next to the corrected value.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "natural.hpp"

namespace polycoef {

struct Erratum {
    SignedDegree lambda;
    std::string printed;
    std::string note;
};

struct PaperFixture {
    std::string source;
    unsigned m;
    unsigned n;
    /// Attested (lambda, value) pairs.
    std::vector<std::pair<SignedDegree, std::uint64_t>> values;
    std::optional<Erratum> erratum;

    /// Attested values plus their mirror images across (m-1)n/2, sorted by lambda.
    std::vector<std::pair<SignedDegree, Natural>> expected_values() const {
        const auto top = static_cast<SignedDegree>(m - 1) * n;
        std::vector<std::pair<SignedDegree, Natural>> out;
        std::vector<bool> seen(static_cast<std::size_t>(top) + 1, false);
        auto add = [&](SignedDegree l, std::uint64_t v) {
            if (l < 0 || l > top || seen[l]) return;
            seen[l] = true;
            out.emplace_back(l, Natural{v});
        };
        for (auto [l, v] : values) add(l, v);
        for (auto [l, v] : values) add(top - l, v);
        std::sort(out.begin(), out.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        return out;
    }
};

namespace detail {

inline PaperFixture row_fixture(std::string source, unsigned m, unsigned n,
                                std::vector<std::uint64_t> prefix,
                                std::optional<Erratum> erratum = std::nullopt) {
    PaperFixture f{std::move(source), m, n, {}, std::move(erratum)};
    for (std::size_t l = 0; l < prefix.size(); ++l) {
        f.values.emplace_back(static_cast<SignedDegree>(l), prefix[l]);
    }
    return f;
}

}  // namespace detail

/// Trinomial table (1 + x + xx)^n, n = 0..6.
inline std::vector<PaperFixture> trinomial_table() {
    using detail::row_fixture;
    const std::string src = "trinomial table";
    return {
        row_fixture(src, 3, 0, {1}),
        row_fixture(src, 3, 1, {1, 1, 1}),
        row_fixture(src, 3, 2, {1, 2, 3, 2, 1}),
        row_fixture(src, 3, 3, {1, 3, 6, 7, 6, 3, 1}),
        row_fixture(src, 3, 4, {1, 4, 10, 16, 19, 16, 10, 4, 1}),
        row_fixture(src, 3, 5, {1, 5, 15, 30, 45, 51},
                    Erratum{6, "45x^4+30x^3+ etc. [sic]",
                            "printed tail repeats lower exponents; only the prefix through x^5 "
                            "is attested, the rest follows by symmetry"}),
        row_fixture(src, 3, 6, {1, 6, 21, 50, 90, 126, 141, 126}),
    };
}

/// Quadrinomial table (1 + x + xx + x^3)^n, n = 0..6.
inline std::vector<PaperFixture> quadrinomial_table() {
    using detail::row_fixture;
    const std::string src = "quadrinomial table";
    return {
        row_fixture(src, 4, 0, {1}),
        row_fixture(src, 4, 1, {1, 1, 1, 1}),
        row_fixture(src, 4, 2, {1, 2, 3, 4, 3, 2, 1}),
        row_fixture(src, 4, 3, {1, 3, 6, 10, 12, 12, 10, 6, 3, 1}),
        row_fixture(src, 4, 4, {1, 4, 10, 20, 31, 40, 44, 40, 31}),
        row_fixture(src, 4, 5, {1, 5, 15, 35, 65, 101, 135, 155, 155}),
        row_fixture(src, 4, 6, {1, 6, 21, 56, 120, 216}),
    };
}

/// The worked values <6, lambda>^3 for lambda = 0..12, one fixture per value.
inline std::vector<PaperFixture> worked_n6_values() {
    const std::uint64_t values[] = {1, 6, 21, 50, 90, 126, 141, 126, 90, 50, 21, 6, 1};
    std::vector<PaperFixture> out;
    for (SignedDegree l = 0; l < 13; ++l) {
        PaperFixture f{"worked n=6 values", 3, 6, {{l, values[l]}}, std::nullopt};
        if (l == 9) {
            f.erratum = Erratum{9, "30",
                                "the listing under the n=6 row prints 30; the worked check "
                                "gives <6,9>^3 = <6,3>^3 = 50"};
        }
        out.push_back(std::move(f));
    }
    return out;
}

/// <n, lambda>^m = sum of coefficient * C(n, degree), as printed.
struct ReducedForm {
    std::string source;
    unsigned m;
    SignedDegree lambda;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> terms;  // (coefficient, binomial degree)
    std::optional<Erratum> erratum;
};

inline std::vector<ReducedForm> trinomial_reduced_forms() {
    return {
        {"trinomial reduced forms", 3, 0, {{1, 0}}, std::nullopt},
        {"trinomial reduced forms", 3, 1, {{1, 1}}, std::nullopt},
        {"trinomial reduced forms", 3, 2, {{1, 2}, {1, 1}}, std::nullopt},
        {"trinomial reduced forms", 3, 3, {{1, 3}, {2, 2}}, std::nullopt},
        {"trinomial reduced forms", 3, 4, {{1, 4}, {3, 3}, {1, 2}}, std::nullopt},
        {"trinomial reduced forms", 3, 5, {{1, 5}, {4, 4}, {3, 3}}, std::nullopt},
        {"trinomial reduced forms", 3, 6, {{1, 6}, {5, 5}, {6, 4}, {1, 3}}, std::nullopt},
        {"trinomial reduced forms", 3, 7, {{1, 7}, {6, 6}, {10, 5}, {4, 4}},
         Erratum{7, "4<n,2>^2", "last term must be 4<n,4>^2 since <4,3>^2 = 4 multiplies C(n,4)"}},
        {"trinomial reduced forms", 3, 8, {{1, 8}, {7, 7}, {15, 6}, {10, 5}, {1, 4}}, std::nullopt},
        {"trinomial reduced forms", 3, 9, {{1, 9}, {8, 8}, {21, 7}, {20, 6}, {5, 5}}, std::nullopt},
        {"trinomial reduced forms", 3, 10, {{1, 10}, {9, 9}, {28, 8}, {35, 7}, {15, 6}, {1, 5}}, std::nullopt},
    };
}

inline std::vector<ReducedForm> quadrinomial_reduced_forms() {
    return {
        {"quadrinomial reduced forms", 4, 0, {{1, 0}}, std::nullopt},
        {"quadrinomial reduced forms", 4, 1, {{1, 1}}, std::nullopt},
        {"quadrinomial reduced forms", 4, 2, {{1, 2}, {1, 1}}, std::nullopt},
        {"quadrinomial reduced forms", 4, 3, {{1, 3}, {2, 2}, {1, 1}}, std::nullopt},
        {"quadrinomial reduced forms", 4, 4, {{1, 4}, {3, 3}, {3, 2}}, std::nullopt},
    };
}

}  // namespace polycoef
