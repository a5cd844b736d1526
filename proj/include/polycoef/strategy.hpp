#pragma once

/**
 * @file strategy.hpp
 * @brief Named computation strategies and the auto-selection rule.
 */

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dense_poly.hpp"
#include "euler.hpp"

namespace polycoef {

enum class Strategy { euler, direct, binpow, automatic };

inline constexpr std::uint64_t default_auto_threshold = 512;

inline std::string_view to_string(Strategy s) {
    switch (s) {
        case Strategy::euler: return "euler";
        case Strategy::direct: return "direct";
        case Strategy::binpow: return "binpow";
        case Strategy::automatic: return "auto";
    }
    return "?";
}

inline std::optional<Strategy> parse_strategy(std::string_view s) {
    if (s == "euler") return Strategy::euler;
    if (s == "direct") return Strategy::direct;
    if (s == "binpow") return Strategy::binpow;
    if (s == "auto") return Strategy::automatic;
    return std::nullopt;
}

/// POLYCOEF_AUTO_THRESHOLD if set to a nonnegative integer, else 512.
inline std::uint64_t auto_threshold_from_env() {
    const char* raw = std::getenv("POLYCOEF_AUTO_THRESHOLD");
    if (!raw || !*raw) return default_auto_threshold;
    std::string_view s(raw);
    std::uint64_t v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') {
            throw std::invalid_argument("POLYCOEF_AUTO_THRESHOLD must be a nonnegative integer, got '" +
                                        std::string(s) + "'");
        }
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return v;
}

/// auto -> euler for single coefficients; for rows, binpow once (m-1)n exceeds the threshold.
inline Strategy resolve_strategy(Strategy s, bool full_row, unsigned m, unsigned n,
                                 std::uint64_t threshold) {
    if (s != Strategy::automatic) return s;
    if (!full_row) return Strategy::euler;
    return static_cast<std::uint64_t>(m - 1) * n > threshold ? Strategy::binpow : Strategy::euler;
}

/// Row by a concrete (non-auto) strategy.
template <class Memo>
CoeffRow compute_row(Strategy s, unsigned m, unsigned n, Memo& memo, MulCounter* counter = nullptr) {
    switch (s) {
        case Strategy::euler: return row(m, n, memo);
        case Strategy::direct: return direct_row(m, n, PowMethod::repeated, counter);
        case Strategy::binpow: return direct_row(m, n, PowMethod::binary, counter);
        case Strategy::automatic: break;
    }
    throw std::logic_error("compute_row needs a resolved strategy");
}

/// Single coefficient; polynomial strategies expand the whole row and index it.
template <class Memo>
Natural compute_coeff(Strategy s, unsigned m, unsigned n, SignedDegree lambda, Memo& memo,
                      MulCounter* counter = nullptr) {
    if (s == Strategy::euler) return coeff(m, n, lambda, memo);
    if (m == 0) throw std::invalid_argument("number of terms m must be at least 1");
    if (lambda < 0 || static_cast<std::uint64_t>(lambda) > static_cast<std::uint64_t>(m - 1) * n)
        return Natural{0u};
    return compute_row(s, m, n, memo, counter).coeffs[static_cast<std::size_t>(lambda)];
}

}  // namespace polycoef
