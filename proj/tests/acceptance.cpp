// Acceptance suite: one line per criterion, exit status 0 only if all pass.
// Every comparison is exact integer equality.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "polycoef/cli.hpp"

using namespace polycoef;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

struct CliRun {
    int code;
    std::string out;
};

CliRun cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run_cli(args, out, err);
    return {code, out.str()};
}

std::vector<std::vector<std::string>> text_rows(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::istringstream words(line);
        std::vector<std::string> row;
        for (std::string w; words >> w;) row.push_back(w);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<std::string> strs(std::initializer_list<unsigned> xs) {
    std::vector<std::string> out;
    for (auto x : xs) out.push_back(std::to_string(x));
    return out;
}

// Checks that the attested prefix and its mirror image both appear in the row.
bool prefix_and_mirror(const std::vector<std::string>& row, std::size_t expected_len,
                       const std::vector<std::string>& prefix) {
    if (row.size() != expected_len) return false;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        if (row[i] != prefix[i] || row[expected_len - 1 - i] != prefix[i]) return false;
    }
    return true;
}

Outcome ac_trinomial_table() {
    Outcome o;
    const CliRun r = cli({"table", "-m", "3", "--max-n", "6"});
    o.require(r.code == 0, "table exited nonzero");
    const auto rows = text_rows(r.out);
    o.require(rows.size() == 7, "expected 7 rows");
    if (!o.ok) return o;
    o.require(rows[0] == strs({1}), "n=0");
    o.require(rows[1] == strs({1, 1, 1}), "n=1");
    o.require(rows[2] == strs({1, 2, 3, 2, 1}), "n=2");
    o.require(rows[3] == strs({1, 3, 6, 7, 6, 3, 1}), "n=3");
    o.require(rows[4] == strs({1, 4, 10, 16, 19, 16, 10, 4, 1}), "n=4");
    o.require(prefix_and_mirror(rows[5], 11, strs({1, 5, 15, 30, 45, 51})), "n=5 prefix + symmetric tail");
    o.require(prefix_and_mirror(rows[6], 13, strs({1, 6, 21, 50, 90, 126, 141, 126})), "n=6 printed prefix");
    o.require(rows[6] == strs({1, 6, 21, 50, 90, 126, 141, 126, 90, 50, 21, 6, 1}), "n=6 full row");
    return o;
}

Outcome ac_quadrinomial_table() {
    Outcome o;
    const CliRun r = cli({"table", "-m", "4", "--max-n", "6"});
    o.require(r.code == 0, "table exited nonzero");
    const auto rows = text_rows(r.out);
    o.require(rows.size() == 7, "expected 7 rows");
    if (!o.ok) return o;
    o.require(rows[0] == strs({1}), "n=0");
    o.require(rows[1] == strs({1, 1, 1, 1}), "n=1");
    o.require(rows[2] == strs({1, 2, 3, 4, 3, 2, 1}), "n=2");
    o.require(rows[3] == strs({1, 3, 6, 10, 12, 12, 10, 6, 3, 1}), "n=3");
    o.require(prefix_and_mirror(rows[4], 13, strs({1, 4, 10, 20, 31, 40, 44})), "n=4 prefix through x^6");
    o.require(prefix_and_mirror(rows[4], 13, strs({1, 4, 10, 20, 31, 40, 44, 40, 31})), "n=4 printed prefix");
    o.require(prefix_and_mirror(rows[5], 16, strs({1, 5, 15, 35, 65, 101, 135, 155, 155})),
              "n=5 prefix through x^8");
    o.require(prefix_and_mirror(rows[6], 19, strs({1, 6, 21, 56, 120, 216})), "n=6 prefix");
    return o;
}

Outcome ac_worked_values() {
    Outcome o;
    const unsigned expected[] = {1, 6, 21, 50, 90, 126, 141, 126, 90, 50, 21, 6, 1};
    MemoTable memo;
    for (SignedDegree l = 0; l <= 12; ++l) {
        o.require(coeff(3, 6, l, memo) == Natural{expected[l]}, "<6," + std::to_string(l) + ">^3");
    }
    o.require(coeff(3, 6, 9, memo) == Natural{50u}, "corrected <6,9>^3 = 50");
    return o;
}

Outcome ac_reduced_forms() {
    Outcome o;
    const auto rep = check_reduced_forms(20);
    o.require(rep.checks().size() == 17u * 21u, "unexpected number of identity checks");
    o.require(rep.ok(), rep.ok() ? "" : "failing: " + rep.failing_ids().front());
    return o;
}

Outcome ac_oracle_equivalence() {
    Outcome o;
    MemoTable memo;
    std::size_t cells = 0;
    for (unsigned m = 1; m <= 6; ++m) {
        for (unsigned n = 0; n <= 12; ++n) {
            const CoeffRow euler = row(m, n, memo);
            const CoeffRow repeated = direct_row(m, n, PowMethod::repeated);
            const CoeffRow binary = direct_row(m, n, PowMethod::binary);
            const std::string cell = "m=" + std::to_string(m) + " n=" + std::to_string(n);
            o.require(euler == repeated, "euler != repeated at " + cell);
            o.require(binary == repeated, "binary != repeated at " + cell);
            ++cells;
        }
    }
    o.require(cells == 78, "expected 78 (m, n) cells");
    const auto rep = cross_check(6, 12);
    o.require(rep.ok() && rep.checks().size() == 156, "verifier cross_check(6, 12)");
    return o;
}

Outcome ac_property_suite() {
    Outcome o;
    std::mt19937_64 rng(17780706);
    MemoTable memo;
    for (int sample = 0; sample < 200; ++sample) {
        const unsigned m = 1 + static_cast<unsigned>(rng() % 8);
        const unsigned n = static_cast<unsigned>(rng() % 31);
        const std::string cell = "m=" + std::to_string(m) + " n=" + std::to_string(n);
        const CoeffRow r = row(m, n, memo);
        const std::size_t top = static_cast<std::size_t>(m - 1) * n;
        o.require(r.coeffs.size() == top + 1, "length at " + cell);
        if (!o.ok) return o;
        o.require(r.coeffs.front() == Natural{1u} && r.coeffs.back() == Natural{1u}, "boundary at " + cell);
        Natural::storage_type sum = 0, alt = 0;
        for (std::size_t l = 0; l <= top; ++l) {
            o.require(r.coeffs[l] == r.coeffs[top - l], "palindrome at " + cell);
            o.require(coeff(m, n, static_cast<SignedDegree>(l), memo) == r.coeffs[l], "coeff vs row at " + cell);
            sum += r.coeffs[l].raw();
            if (l % 2) alt -= r.coeffs[l].raw();
            else alt += r.coeffs[l].raw();
        }
        o.require(sum == nat_pow(m, n).raw(), "row sum at " + cell);
        if (n >= 1) o.require(alt == (m % 2 ? 1 : 0), "alternating sum at " + cell);
        for (SignedDegree l : {SignedDegree{-3}, SignedDegree{-1}, static_cast<SignedDegree>(top) + 1,
                               static_cast<SignedDegree>(top) + 7}) {
            o.require(coeff(m, n, l, memo).is_zero(), "zero outside range at " + cell);
        }
        for (SignedDegree l = -1; l <= static_cast<SignedDegree>(n) + 1; ++l) {
            o.require(coeff(2, n, l, memo) == binom(n, l), "binomial degeneration at n=" + std::to_string(n));
        }
    }
    return o;
}

Outcome ac_bench_smoke() {
    Outcome o;
    const CliRun r = cli({"bench", "-m", "10", "-n", "200", "--strategies", "euler,binpow,direct"});
    o.require(r.code == 0, "bench exited nonzero");
    if (!o.ok) return o;
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(r.out);
    } catch (const std::exception& e) {
        o.require(false, std::string("report is not JSON: ") + e.what());
        return o;
    }
    o.require(j.value("m", 0) == 10 && j.value("n", 0) == 200, "m/n fields");
    o.require(j.contains("values_agree") && j["values_agree"].is_boolean() && j["values_agree"].get<bool>(),
              "values_agree");
    o.require(j.contains("memo_mode") && j["memo_mode"].is_string(), "memo_mode");
    o.require(j.value("central_lambda", -1) == 900, "central lambda");
    o.require(j.value("row_length", 0) == 1801, "row length");
    o.require(j.contains("central_value") && j["central_value"].is_string(), "central_value");
    o.require(j.contains("results") && j["results"].is_array() && j["results"].size() == 6, "six results");
    if (!o.ok) return o;
    for (const auto& rec : j["results"]) {
        const std::string s = rec.value("strategy", "");
        o.require(s == "euler" || s == "binpow" || s == "direct", "strategy name");
        o.require(rec.value("task", "") == "row" || rec.value("task", "") == "central", "task");
        o.require(rec["wall_ns"].is_number_unsigned(), "wall_ns");
        o.require(rec["peak_bits"].is_number_unsigned() && rec["peak_bits"].get<unsigned>() > 600, "peak_bits");
        if (s == "euler") {
            o.require(rec["memo_entries"].is_number_unsigned() && rec["multiplications"].is_null(),
                      "euler counters");
        } else {
            o.require(rec["multiplications"].is_number_unsigned() && rec["memo_entries"].is_null(),
                      "polynomial counters");
        }
    }
    return o;
}

Outcome ac_determinism() {
    Outcome o;
    const CliRun a = cli({"verify"});
    const CliRun b = cli({"verify"});
    o.require(a.code == 0 && b.code == 0, "verify exited nonzero");
    o.require(!a.out.empty() && a.out == b.out, "reports differ between runs");
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"AC1 trinomial table reproduction", ac_trinomial_table},
        {"AC2 quadrinomial table reproduction", ac_quadrinomial_table},
        {"AC3 worked n=6 trinomial values", ac_worked_values},
        {"AC4 reduced-form identities, n=0..20", ac_reduced_forms},
        {"AC5 oracle equivalence, m<=6, n<=12", ac_oracle_equivalence},
        {"AC6 property suite, 200 samples", ac_property_suite},
        {"AC7 bench smoke m=10 n=200", ac_bench_smoke},
        {"AC8 verify determinism", ac_determinism},
    };
    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << name << " (" << secs << " s)";
        if (!o.ok) std::cout << ": " << o.detail;
        std::cout << '\n';
        failed += o.ok ? 0 : 1;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
    return failed == 0 ? 0 : 1;
}
