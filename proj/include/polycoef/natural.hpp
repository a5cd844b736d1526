#pragma once

/**
 * @file natural.hpp
 * @brief Arbitrary-precision natural numbers and binomial coefficients.
 *
 * Natural is a thin value type over GMP integers (boost::multiprecision) that
 * exposes only the subtraction-free operations the coefficient engines
 * need. Values render as plain decimal strings.
 *
 *   binom(6, 3)     == 20
 *   binom(4, 7)     == 0      // zero outside 0..n
 *   nat_pow(2, 64)  == 18446744073709551616
 */

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/gmp.hpp>

namespace polycoef {

/// Polynomial degree index as it appears in queries; may be negative.
using SignedDegree = std::int64_t;

class Natural {
public:
    using storage_type = boost::multiprecision::mpz_int;

    Natural() = default;

    template <std::unsigned_integral U>
    Natural(U v) : value_(v) {}

    /// Parses a nonempty string of decimal digits.
    static Natural parse(std::string_view text) {
        if (text.empty()) {
            throw std::invalid_argument("empty natural number literal");
        }
        for (char c : text) {
            if (c < '0' || c > '9') {
                throw std::invalid_argument("malformed natural number literal: '" +
                                            std::string(text) + "'");
            }
        }
        Natural out;
        out.value_ = storage_type(std::string(text));
        return out;
    }

    std::string to_string() const { return value_.str(); }

    bool is_zero() const { return value_.is_zero(); }

    /// Number of significant bits; 0 for zero.
    std::size_t bit_length() const {
        return is_zero() ? 0 : boost::multiprecision::msb(value_) + 1;
    }

    /// Divides by d, which must divide the value exactly.
    Natural& divide_exact(std::uint64_t d) {
        if (d == 0) throw std::domain_error("division by zero");
        value_ /= d;
        return *this;
    }

    const storage_type& raw() const { return value_; }

    Natural& operator+=(const Natural& o) {
        value_ += o.value_;
        return *this;
    }
    Natural& operator*=(const Natural& o) {
        value_ *= o.value_;
        return *this;
    }
    Natural& operator*=(std::uint64_t k) {
        value_ *= k;
        return *this;
    }

    friend Natural operator+(Natural a, const Natural& b) { return a += b; }
    friend Natural operator*(const Natural& a, const Natural& b) {
        Natural out;
        out.value_ = a.value_ * b.value_;
        return out;
    }
    friend Natural operator*(Natural a, std::uint64_t k) { return a *= k; }

    /// Fused accumulate: *this += a * b without a named temporary.
    Natural& add_product(const Natural& a, const Natural& b) {
        mpz_addmul(value_.backend().data(), a.value_.backend().data(), b.value_.backend().data());
        return *this;
    }

    friend bool operator==(const Natural& a, const Natural& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
        int c = a.value_.compare(b.value_);
        return c < 0 ? std::strong_ordering::less
                     : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Natural& v) {
        return os << v.to_string();
    }

private:
    storage_type value_{0};
};

/**
 * Binomial coefficient C(n, k), zero for k < 0 or k > n.
 *
 * Uses r <- r * (n - i) / (i + 1); each intermediate equals C(n, i + 1),
 * so every division is exact.
 */
inline Natural binom(std::uint64_t n, SignedDegree k) {
    if (k < 0 || static_cast<std::uint64_t>(k) > n) return Natural{0u};
    std::uint64_t kk = static_cast<std::uint64_t>(k);
    if (kk > n - kk) kk = n - kk;
    Natural r{1u};
    for (std::uint64_t i = 0; i < kk; ++i) {
        r *= (n - i);
        r.divide_exact(i + 1);
    }
    return r;
}

/// Exact base^exp by square-and-multiply; 0^0 = 1.
inline Natural nat_pow(std::uint64_t base, std::uint64_t exp) {
    Natural result{1u};
    Natural square{base};
    while (exp > 0) {
        if (exp & 1u) result *= square;
        exp >>= 1;
        if (exp > 0) square = square * square;
    }
    return result;
}

}  // namespace polycoef
