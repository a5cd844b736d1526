#pragma once

/**
 * @file dense_poly.hpp
 * @brief Dense univariate polynomials over Natural and direct expansion.
 *
 * This is the brute-force side of the library: rows of
 * (1 + x + ... + x^(m-1))^n obtained by literally multiplying polynomials.
 *
 *   pow_repeated(all_ones(3), 2) == [1, 2, 3, 2, 1]
 *   pow_binary(all_ones(3), 6)   == [1, 6, 21, 50, 90, 126, 141, ...]
 */

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "natural.hpp"

namespace polycoef {

class DensePoly {
public:
    /// The zero polynomial, stored as [0].
    DensePoly() : coeffs_{Natural{0u}} {}

    DensePoly(std::initializer_list<Natural> cs) : coeffs_(cs) { normalize(); }
    explicit DensePoly(std::vector<Natural> cs) : coeffs_(std::move(cs)) { normalize(); }

    std::size_t degree() const { return coeffs_.size() - 1; }
    std::size_t size() const { return coeffs_.size(); }
    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0].is_zero(); }

    const std::vector<Natural>& coeffs() const& { return coeffs_; }
    std::vector<Natural> coeffs() && { return std::move(coeffs_); }

    /// Coefficient of x^i; zero past the top degree.
    Natural operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Natural{0u}; }

    friend bool operator==(const DensePoly&, const DensePoly&) = default;

private:
    void normalize() {
        while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
        if (coeffs_.empty()) coeffs_.push_back(Natural{0u});
    }

    std::vector<Natural> coeffs_;
};

/// One full row of (1 + x + ... + x^(m-1))^n.
struct CoeffRow {
    unsigned terms_m = 1;
    unsigned power_n = 0;
    std::vector<Natural> coeffs;

    /// (m - 1) * n, the index of the last coefficient.
    std::uint64_t top_degree() const {
        return static_cast<std::uint64_t>(terms_m - 1) * power_n;
    }

    friend bool operator==(const CoeffRow&, const CoeffRow&) = default;
};

/// Counts polynomial multiplications; the bench harness reads it.
struct MulCounter {
    std::uint64_t poly_muls = 0;
};

inline DensePoly all_ones(unsigned m) {
    if (m == 0) throw std::invalid_argument("number of terms m must be at least 1");
    return DensePoly(std::vector<Natural>(m, Natural{1u}));
}

/// Schoolbook convolution. The outer loop runs over the shorter operand.
inline DensePoly mul(const DensePoly& a, const DensePoly& b, MulCounter* counter = nullptr) {
    if (counter) ++counter->poly_muls;
    if (a.is_zero() || b.is_zero()) return DensePoly{};
    const auto& small = a.size() <= b.size() ? a.coeffs() : b.coeffs();
    const auto& large = a.size() <= b.size() ? b.coeffs() : a.coeffs();
    std::vector<Natural> out(small.size() + large.size() - 1);
    for (std::size_t i = 0; i < small.size(); ++i) {
        if (small[i].is_zero()) continue;
        for (std::size_t j = 0; j < large.size(); ++j) {
            out[i + j].add_product(small[i], large[j]);
        }
    }
    return DensePoly(std::move(out));
}

/// p^n by n - 1 successive multiplications by p.
inline DensePoly pow_repeated(const DensePoly& p, unsigned n, MulCounter* counter = nullptr) {
    if (n == 0) return DensePoly{Natural{1u}};
    DensePoly acc = p;
    for (unsigned i = 1; i < n; ++i) acc = mul(p, acc, counter);
    return acc;
}

/// p^n by square-and-multiply.
inline DensePoly pow_binary(const DensePoly& p, unsigned n, MulCounter* counter = nullptr) {
    DensePoly result{Natural{1u}};
    bool result_is_one = true;
    DensePoly square = p;
    while (n > 0) {
        if (n & 1u) {
            if (result_is_one) {
                result = square;
                result_is_one = false;
            } else {
                result = mul(result, square, counter);
            }
        }
        n >>= 1;
        if (n > 0) square = mul(square, square, counter);
    }
    return result;
}

enum class PowMethod { repeated, binary };

inline CoeffRow direct_row(unsigned m, unsigned n, PowMethod method, MulCounter* counter = nullptr) {
    DensePoly base = all_ones(m);
    DensePoly p = method == PowMethod::repeated ? pow_repeated(base, n, counter)
                                                : pow_binary(base, n, counter);
    return CoeffRow{m, n, std::move(p).coeffs()};
}

}  // namespace polycoef
