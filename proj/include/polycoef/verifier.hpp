#pragma once

/**
 * @file verifier.hpp
 * @brief Fixture replay, row invariants and cross-strategy equivalence.
 *
 * Every check produces an entry in a VerificationReport; nothing throws on
 * a mismatch. Entries are kept ordered by check_id so the JSON rendering is
 * byte-stable no matter in which order parallel checks complete.
 */

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <future>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "dense_poly.hpp"
#include "euler.hpp"
#include "fixtures.hpp"
#include "natural.hpp"

namespace polycoef {

enum class CheckStatus { pass, fail };

inline std::string_view to_string(CheckStatus s) { return s == CheckStatus::pass ? "pass" : "fail"; }

/// A single coefficient (lambda set) or a whole row (lambda empty).
struct CheckSubject {
    unsigned m = 1;
    unsigned n = 0;
    std::optional<SignedDegree> lambda;
};

/// Natural, row, or a signed value rendered in decimal.
using CheckValue = std::variant<Natural, std::vector<Natural>, std::string>;

struct CheckEntry {
    std::string check_id;
    CheckSubject subject;
    CheckStatus status = CheckStatus::pass;
    CheckValue expected;
    CheckValue actual;
    std::string note;
};

/// Wall time of each strategy for one (m, n) cell of a cross check.
struct CellTiming {
    unsigned m = 1;
    unsigned n = 0;
    std::uint64_t euler_ns = 0;
    std::uint64_t repeated_ns = 0;
    std::uint64_t binary_ns = 0;
};

class VerificationReport {
public:
    void add(CheckEntry e) {
        auto pos = std::upper_bound(entries_.begin(), entries_.end(), e.check_id,
                                    [](const std::string& id, const CheckEntry& x) { return id < x.check_id; });
        entries_.insert(pos, std::move(e));
    }

    /// Adds a check whose status is decided by expected == actual.
    void expect_equal(std::string id, CheckSubject subject, CheckValue expected, CheckValue actual,
                      std::string note = {}) {
        const auto status = expected == actual ? CheckStatus::pass : CheckStatus::fail;
        add({std::move(id), subject, status, std::move(expected), std::move(actual), std::move(note)});
    }

    void merge(VerificationReport other) {
        for (auto& e : other.entries_) add(std::move(e));
        for (auto& t : other.timings_) timings_.push_back(t);
        sort_timings();
    }

    void add_timing(CellTiming t) {
        timings_.push_back(t);
        sort_timings();
    }

    const std::vector<CheckEntry>& checks() const { return entries_; }
    const std::vector<CellTiming>& timings() const { return timings_; }

    std::size_t count(CheckStatus s) const {
        return static_cast<std::size_t>(
            std::count_if(entries_.begin(), entries_.end(), [s](const auto& e) { return e.status == s; }));
    }
    bool ok() const { return count(CheckStatus::fail) == 0; }

    std::vector<std::string> failing_ids() const {
        std::vector<std::string> out;
        for (const auto& e : entries_)
            if (e.status == CheckStatus::fail) out.push_back(e.check_id);
        return out;
    }

    /// Field order: check_id, subject, status, expected, actual[, note].
    nlohmann::ordered_json to_json() const {
        using nlohmann::ordered_json;
        ordered_json checks = ordered_json::array();
        for (const auto& e : entries_) {
            ordered_json j;
            j["check_id"] = e.check_id;
            ordered_json subj;
            subj["m"] = e.subject.m;
            subj["n"] = e.subject.n;
            if (e.subject.lambda) subj["lambda"] = *e.subject.lambda;
            j["subject"] = std::move(subj);
            j["status"] = std::string(to_string(e.status));
            j["expected"] = value_json(e.expected);
            j["actual"] = value_json(e.actual);
            if (!e.note.empty()) j["note"] = e.note;
            checks.push_back(std::move(j));
        }
        ordered_json out;
        out["checks"] = std::move(checks);
        out["summary"]["pass"] = count(CheckStatus::pass);
        out["summary"]["fail"] = count(CheckStatus::fail);
        return out;
    }

private:
    static nlohmann::ordered_json value_json(const CheckValue& v) {
        return std::visit(
            [](const auto& x) -> nlohmann::ordered_json {
                using T = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<T, Natural>) {
                    return x.to_string();
                } else if constexpr (std::is_same_v<T, std::string>) {
                    return x;
                } else {
                    auto arr = nlohmann::ordered_json::array();
                    for (const auto& c : x) arr.push_back(c.to_string());
                    return arr;
                }
            },
            v);
    }

    void sort_timings() {
        std::sort(timings_.begin(), timings_.end(),
                  [](const CellTiming& a, const CellTiming& b) {
                      return std::tie(a.m, a.n) < std::tie(b.m, b.n);
                  });
    }

    std::vector<CheckEntry> entries_;
    std::vector<CellTiming> timings_;
};

/**
 * The coefficient source under verification. The default wires in the
 * recurrence engine; tests swap members out to run negative controls.
 */
struct CoeffEngine {
    std::function<Natural(unsigned, unsigned, SignedDegree)> coeff;
    std::function<CoeffRow(unsigned, unsigned)> row;
    std::function<Natural(std::uint64_t, SignedDegree)> binomial;
};

/// Engine backed by the recurrence; memo must outlive the engine.
inline CoeffEngine euler_engine(MemoTable& memo) {
    return {
        [&memo](unsigned m, unsigned n, SignedDegree l) { return coeff(m, n, l, memo); },
        [&memo](unsigned m, unsigned n) { return row(m, n, memo); },
        [](std::uint64_t n, SignedDegree k) { return binom(n, k); },
    };
}

namespace detail {

inline std::string cell_id(std::string_view prefix, unsigned m, unsigned n) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "/m=%02u/n=%03u", m, n);
    return std::string(prefix) + buf;
}

inline std::string lambda_suffix(SignedDegree l) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "/l=%04lld", static_cast<long long>(l));
    return buf;
}

inline std::string slug(std::string_view s) {
    std::string out;
    for (char c : s) out.push_back(c == ' ' ? '-' : c);
    return out;
}

template <class F>
std::uint64_t time_ns(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
}

}  // namespace detail

/// Length, boundary ones, palindrome, row sum m^n and alternating sum.
inline VerificationReport check_row_invariants(const CoeffRow& r) {
    VerificationReport rep;
    const std::string base = detail::cell_id("row", r.terms_m, r.power_n);
    const CheckSubject subj{r.terms_m, r.power_n, std::nullopt};
    const auto& c = r.coeffs;

    rep.expect_equal(base + "/length", subj, Natural{r.top_degree() + 1},
                     Natural{static_cast<std::uint64_t>(c.size())});
    if (c.empty()) return rep;

    rep.expect_equal(base + "/boundary", subj, std::vector<Natural>{Natural{1u}, Natural{1u}},
                     std::vector<Natural>{c.front(), c.back()});

    std::vector<Natural> reversed(c.rbegin(), c.rend());
    rep.expect_equal(base + "/palindrome", subj, reversed, c);

    Natural sum{0u};
    for (const auto& v : c) sum += v;
    rep.expect_equal(base + "/row-sum", subj, nat_pow(r.terms_m, r.power_n), sum);

    if (r.power_n >= 1) {
        // Value at x = -1: 1 for odd m, 0 for even m.
        Natural::storage_type alt = 0;
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i % 2 == 0) alt += c[i].raw();
            else alt -= c[i].raw();
        }
        const std::string expected = r.terms_m % 2 == 1 ? "1" : "0";
        rep.expect_equal(base + "/alternating-sum", subj, expected, alt.str());
    }
    return rep;
}

namespace detail {

inline void replay_fixture(VerificationReport& rep, const PaperFixture& f, const CoeffEngine& engine) {
    const std::string base = cell_id("fixture/" + slug(f.source), f.m, f.n);
    const auto expected = f.expected_values();
    const CoeffRow r = engine.row(f.m, f.n);
    std::vector<Natural> want, got;
    for (const auto& [l, v] : expected) {
        std::string note;
        if (f.erratum && (f.erratum->lambda == l ||
                          f.erratum->lambda == static_cast<SignedDegree>(f.m - 1) * f.n - l)) {
            note = "erratum: printed " + f.erratum->printed + "; " + f.erratum->note;
        }
        rep.expect_equal(base + lambda_suffix(l), {f.m, f.n, l}, v, engine.coeff(f.m, f.n, l), note);
        want.push_back(v);
        got.push_back(static_cast<std::size_t>(l) < r.coeffs.size() ? r.coeffs[l] : Natural{0u});
    }
    rep.expect_equal(base + "/row", {f.m, f.n, std::nullopt}, want, got);
}

}  // namespace detail

/// Replays the embedded trinomial and quadrinomial tables and the worked n=6 values.
inline VerificationReport run_paper_fixtures(const CoeffEngine& engine) {
    VerificationReport rep;
    for (const auto& f : trinomial_table()) detail::replay_fixture(rep, f, engine);
    for (const auto& f : quadrinomial_table()) detail::replay_fixture(rep, f, engine);
    for (const auto& f : worked_n6_values()) {
        const auto l = f.values.front().first;
        std::string note;
        if (f.erratum) note = "erratum: printed " + f.erratum->printed + "; " + f.erratum->note;
        rep.expect_equal(detail::cell_id("fixture/" + detail::slug(f.source), f.m, f.n) +
                             detail::lambda_suffix(l),
                         {f.m, f.n, l}, Natural{f.values.front().second}, engine.coeff(f.m, f.n, l),
                         note);
    }
    return rep;
}

inline VerificationReport run_paper_fixtures() {
    MemoTable memo;
    return run_paper_fixtures(euler_engine(memo));
}

/**
 * Recurrence rows against repeated multiplication and binary powering for
 * every 1 <= m <= m_max, 0 <= n <= n_max. One task per m runs concurrently.
 */
inline VerificationReport cross_check(unsigned m_max, unsigned n_max, const CoeffEngine& engine) {
    auto run_m = [&engine, n_max](unsigned m) {
        VerificationReport rep;
        for (unsigned n = 0; n <= n_max; ++n) {
            CoeffRow euler, repeated, binary;
            CellTiming t{m, n};
            t.euler_ns = detail::time_ns([&] { euler = engine.row(m, n); });
            t.repeated_ns = detail::time_ns([&] { repeated = direct_row(m, n, PowMethod::repeated); });
            t.binary_ns = detail::time_ns([&] { binary = direct_row(m, n, PowMethod::binary); });
            const std::string base = detail::cell_id("cross", m, n);
            const CheckSubject subj{m, n, std::nullopt};
            rep.expect_equal(base + "/euler", subj, repeated.coeffs, euler.coeffs);
            rep.expect_equal(base + "/binary", subj, repeated.coeffs, binary.coeffs);
            rep.add_timing(t);
        }
        return rep;
    };
    std::vector<std::future<VerificationReport>> parts;
    for (unsigned m = 1; m <= m_max; ++m) parts.push_back(std::async(std::launch::async, run_m, m));
    VerificationReport rep;
    for (auto& p : parts) rep.merge(p.get());
    return rep;
}

inline VerificationReport cross_check(unsigned m_max, unsigned n_max) {
    MemoTable memo;
    return cross_check(m_max, n_max, euler_engine(memo));
}

/// Each embedded reduced form, sum of c * C(n, d), against coeff for n = 0..n_max.
inline VerificationReport check_reduced_forms(unsigned n_max, const CoeffEngine& engine) {
    VerificationReport rep;
    auto forms = trinomial_reduced_forms();
    for (auto& f : quadrinomial_reduced_forms()) forms.push_back(std::move(f));
    for (const auto& f : forms) {
        std::string note;
        if (f.erratum) note = "erratum: printed " + f.erratum->printed + "; " + f.erratum->note;
        for (unsigned n = 0; n <= n_max; ++n) {
            Natural combo{0u};
            for (auto [c, d] : f.terms) combo += engine.binomial(n, static_cast<SignedDegree>(d)) * c;
            rep.expect_equal(detail::cell_id("reduced/" + detail::slug(f.source), f.m, n) +
                                 detail::lambda_suffix(f.lambda),
                             {f.m, n, f.lambda}, combo, engine.coeff(f.m, n, f.lambda), note);
        }
    }
    // <n, 2>^3 = n(n+1)/2.
    for (unsigned n = 0; n <= n_max; ++n) {
        const std::uint64_t closed = static_cast<std::uint64_t>(n) * (n + 1) / 2;
        rep.expect_equal(detail::cell_id("reduced/trinomial-closed-form", 3, n) + detail::lambda_suffix(2),
                         {3, n, 2}, Natural{closed}, engine.coeff(3, n, 2));
    }
    return rep;
}

inline VerificationReport check_reduced_forms(unsigned n_max) {
    MemoTable memo;
    return check_reduced_forms(n_max, euler_engine(memo));
}

/// Everything the verify command runs: fixtures, cross check, reduced forms, row invariants.
inline VerificationReport verify_suite(unsigned m_max, unsigned n_max, const CoeffEngine& engine) {
    VerificationReport rep = run_paper_fixtures(engine);
    rep.merge(cross_check(m_max, n_max, engine));
    rep.merge(check_reduced_forms(n_max, engine));
    for (unsigned m = 1; m <= m_max; ++m)
        for (unsigned n = 0; n <= n_max; ++n) rep.merge(check_row_invariants(engine.row(m, n)));
    return rep;
}

inline VerificationReport verify_suite(unsigned m_max, unsigned n_max) {
    MemoTable memo;
    return verify_suite(m_max, n_max, euler_engine(memo));
}

}  // namespace polycoef
