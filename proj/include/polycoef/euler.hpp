#pragma once

/**
 * @file euler.hpp
 * @brief Polynomial coefficients <n, lambda>^m by reduction to binomials.
 *
 * Writing (1 + x + ... + x^(m-1))^n as [1 + x(1 + ... + x^(m-2))]^n and
 * expanding the outer binomial gives
 *
 *   <n, l>^m = sum_k C(n, l - k) * <l - k, k>^(m-1)
 *
 * so level m reduces to level m - 1 and binomials. Level 2 is C(n, l) and
 * level 1 is the monomial 1^n. Every coefficient vanishes outside
 * 0 <= l <= (m - 1) n and rows are palindromes, so lookups are canonicalized
 * to the lower half before touching the memo.
 *
 *   coeff(3, 6, 6, memo) == 141
 *   coeff(4, 5, 5, memo) == 101
 */

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dense_poly.hpp"
#include "natural.hpp"

namespace polycoef {

/// A symmetry-reduced (m, n, lambda) triple with 0 <= lambda <= (m-1)n/2.
struct CoeffKey {
    unsigned terms_m = 1;
    unsigned power_n = 0;
    std::uint64_t degree_lambda = 0;

    /// nullopt when lambda lies outside 0..(m-1)n, i.e. the coefficient is zero.
    static std::optional<CoeffKey> canonical(unsigned m, unsigned n, SignedDegree lambda) {
        if (m == 0) throw std::invalid_argument("number of terms m must be at least 1");
        const std::uint64_t top = static_cast<std::uint64_t>(m - 1) * n;
        if (lambda < 0 || static_cast<std::uint64_t>(lambda) > top) return std::nullopt;
        std::uint64_t l = static_cast<std::uint64_t>(lambda);
        return CoeffKey{m, n, std::min(l, top - l)};
    }

    friend bool operator==(const CoeffKey&, const CoeffKey&) = default;
    friend auto operator<=>(const CoeffKey&, const CoeffKey&) = default;
};

struct CoeffKeyHash {
    std::size_t operator()(const CoeffKey& k) const noexcept {
        std::uint64_t h = (static_cast<std::uint64_t>(k.terms_m) << 32) ^ k.power_n;
        h ^= k.degree_lambda + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return std::hash<std::uint64_t>{}(h);
    }
};

/// Lock policy that does nothing; for single-threaded memo tables.
struct NullSharedMutex {
    void lock() {}
    void unlock() {}
    void lock_shared() {}
    void unlock_shared() {}
};

template <class Mutex>
inline constexpr std::string_view memo_mode_name = "concurrent";
template <>
inline constexpr std::string_view memo_mode_name<NullSharedMutex> = "single-threaded";

/**
 * Cross-level memo store for recurrence values plus cached binomial rows.
 *
 * Entries are never erased while queries run, so references handed out by
 * find() and insert() stay valid (node-based map). Concurrent inserts of the
 * same key are benign: the first one wins and both values are equal.
 */
template <class Mutex>
class BasicMemoTable {
public:
    static constexpr unsigned default_max_terms = 64;

    explicit BasicMemoTable(unsigned max_terms = default_max_terms) : max_terms_(max_terms) {}

    BasicMemoTable(const BasicMemoTable&) = delete;
    BasicMemoTable& operator=(const BasicMemoTable&) = delete;

    unsigned max_terms() const { return max_terms_; }
    static constexpr std::string_view mode() { return memo_mode_name<Mutex>; }

    const Natural* find(const CoeffKey& key) const {
        std::shared_lock lock(mutex_);
        auto it = entries_.find(key);
        return it == entries_.end() ? nullptr : &it->second;
    }

    const Natural& insert(const CoeffKey& key, Natural value) {
        std::unique_lock lock(mutex_);
        return entries_.try_emplace(key, std::move(value)).first->second;
    }

    std::size_t size() const {
        std::shared_lock lock(mutex_);
        return entries_.size();
    }

    /// Snapshot of all entries; used by determinism checks.
    std::vector<std::pair<CoeffKey, Natural>> snapshot() const {
        std::shared_lock lock(mutex_);
        std::vector<std::pair<CoeffKey, Natural>> out(entries_.begin(), entries_.end());
        std::sort(out.begin(), out.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        return out;
    }

    /// Row C(n, 0..n), computed once per n with the product formula.
    const std::vector<Natural>& binomial_row(unsigned n) {
        {
            std::shared_lock lock(mutex_);
            auto it = binomial_rows_.find(n);
            if (it != binomial_rows_.end()) return *it->second;
        }
        auto fresh = std::make_unique<std::vector<Natural>>();
        fresh->reserve(n + 1);
        Natural c{1u};
        for (unsigned k = 0; k <= n; ++k) {
            fresh->push_back(c);
            c *= static_cast<std::uint64_t>(n - k);
            c.divide_exact(k + 1);
        }
        std::unique_lock lock(mutex_);
        return *binomial_rows_.try_emplace(n, std::move(fresh)).first->second;
    }

private:
    unsigned max_terms_;
    mutable Mutex mutex_;
    std::unordered_map<CoeffKey, Natural, CoeffKeyHash> entries_;
    std::unordered_map<unsigned, std::unique_ptr<std::vector<Natural>>> binomial_rows_;
};

using MemoTable = BasicMemoTable<std::shared_mutex>;
using LocalMemoTable = BasicMemoTable<NullSharedMutex>;

/// One summand C(n, alpha) * <alpha, beta>^(m-1) with alpha + beta = lambda.
struct RecurrenceTerm {
    std::uint64_t alpha = 0;
    std::uint64_t beta = 0;
    Natural outer;  // C(n, alpha)
    Natural inner;  // <alpha, beta>^(m-1)
    Natural value;  // outer * inner
};

namespace detail {

inline const Natural& zero_natural() {
    static const Natural z{0u};
    return z;
}
inline const Natural& one_natural() {
    static const Natural o{1u};
    return o;
}

template <class Memo>
void check_terms(unsigned m, const Memo& memo) {
    if (m == 0) throw std::invalid_argument("number of terms m must be at least 1");
    if (m > memo.max_terms()) {
        throw std::invalid_argument("number of terms m = " + std::to_string(m) +
                                    " exceeds the recursion ceiling " +
                                    std::to_string(memo.max_terms()));
    }
}

template <class Memo>
const Natural& coeff_ref(unsigned m, unsigned n, SignedDegree lambda, Memo& memo);

// Sum over the nonzero summands for canonical (or any in-range) lambda.
// k runs from max(0, lambda - n) upward; alpha = lambda - k shrinks, so once
// k > (m - 2) * alpha every later inner coefficient is out of range too.
template <class Memo, class Visit>
void for_each_term(unsigned m, unsigned n, std::uint64_t lambda, Memo& memo, Visit&& visit) {
    const auto& outer_row = memo.binomial_row(n);
    const std::uint64_t k_begin = lambda > n ? lambda - n : 0;
    for (std::uint64_t k = k_begin; k <= lambda; ++k) {
        const std::uint64_t alpha = lambda - k;
        if (k > static_cast<std::uint64_t>(m - 2) * alpha) break;
        const Natural& inner =
            coeff_ref(m - 1, static_cast<unsigned>(alpha), static_cast<SignedDegree>(k), memo);
        visit(alpha, k, outer_row[alpha], inner);
    }
}

template <class Memo>
const Natural& coeff_ref(unsigned m, unsigned n, SignedDegree lambda, Memo& memo) {
    auto key = CoeffKey::canonical(m, n, lambda);
    if (!key) return zero_natural();
    if (m == 1 || n == 0) return key->degree_lambda == 0 ? one_natural() : zero_natural();
    if (m == 2) return memo.binomial_row(n)[key->degree_lambda];
    if (const Natural* hit = memo.find(*key)) return *hit;

    Natural sum{0u};
    for_each_term(m, n, key->degree_lambda, memo,
                  [&](std::uint64_t, std::uint64_t, const Natural& outer, const Natural& inner) {
                      sum.add_product(outer, inner);
                  });
    return memo.insert(*key, std::move(sum));
}

}  // namespace detail

/// <n, lambda>^m; zero for lambda outside 0..(m-1)n.
template <class Memo>
Natural coeff(unsigned m, unsigned n, SignedDegree lambda, Memo& memo) {
    detail::check_terms(m, memo);
    return detail::coeff_ref(m, n, lambda, memo);
}

inline Natural coeff(unsigned m, unsigned n, SignedDegree lambda) {
    LocalMemoTable memo;
    return coeff(m, n, lambda, memo);
}

/// Full row; only the lower half is computed, the rest is mirrored.
template <class Memo>
CoeffRow row(unsigned m, unsigned n, Memo& memo) {
    detail::check_terms(m, memo);
    CoeffRow out{m, n, {}};
    const std::uint64_t top = out.top_degree();
    out.coeffs.resize(top + 1);
    for (std::uint64_t l = 0; l <= top / 2; ++l) {
        out.coeffs[l] = detail::coeff_ref(m, n, static_cast<SignedDegree>(l), memo);
    }
    for (std::uint64_t l = top / 2 + 1; l <= top; ++l) out.coeffs[l] = out.coeffs[top - l];
    return out;
}

inline CoeffRow row(unsigned m, unsigned n) {
    LocalMemoTable memo;
    return row(m, n, memo);
}

/**
 * The nonzero summands of the recurrence for <n, lambda>^m, in decreasing
 * alpha order. lambda is used as given (not mirrored); the values still sum
 * to coeff(m, n, lambda). Empty when lambda is out of range.
 */
template <class Memo>
std::vector<RecurrenceTerm> term_values(unsigned m, unsigned n, SignedDegree lambda, Memo& memo) {
    detail::check_terms(m, memo);
    if (m < 3) throw std::invalid_argument("term_values needs m >= 3");
    std::vector<RecurrenceTerm> terms;
    if (!CoeffKey::canonical(m, n, lambda)) return terms;
    detail::for_each_term(m, n, static_cast<std::uint64_t>(lambda), memo,
                          [&](std::uint64_t alpha, std::uint64_t beta, const Natural& outer,
                              const Natural& inner) {
                              if (outer.is_zero() || inner.is_zero()) return;
                              terms.push_back({alpha, beta, outer, inner, outer * inner});
                          });
    return terms;
}

inline std::vector<RecurrenceTerm> term_values(unsigned m, unsigned n, SignedDegree lambda) {
    LocalMemoTable memo;
    return term_values(m, n, lambda, memo);
}

}  // namespace polycoef
