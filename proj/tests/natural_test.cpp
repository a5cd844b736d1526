#include <random>
#include <stdexcept>
#include <string>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "polycoef/natural.hpp"

using polycoef::binom;
using polycoef::Natural;
using polycoef::nat_pow;

TEST(Binom, PublishedAndTrivialValues) {
    EXPECT_EQ(binom(6, 3), Natural{20u});
    for (std::uint64_t n = 0; n < 20; ++n) {
        EXPECT_EQ(binom(n, 0), Natural{1u});
        EXPECT_EQ(binom(n, static_cast<std::int64_t>(n)), Natural{1u});
    }
}

TEST(Binom, ZeroOutsideRange) {
    EXPECT_EQ(binom(4, 7), Natural{0u});
    EXPECT_EQ(binom(4, -1), Natural{0u});
    EXPECT_EQ(binom(0, -100), Natural{0u});
    EXPECT_EQ(binom(0, 1), Natural{0u});
}

TEST(Binom, MatchesPascalTriangle) {
    const auto t = polycoef::testing::pascal(64);
    for (unsigned n = 0; n <= 64; ++n)
        for (unsigned k = 0; k <= n; ++k) EXPECT_EQ(binom(n, k), Natural{t[n][k]}) << n << " " << k;
}

TEST(Binom, PascalIdentityAndSymmetry) {
    for (std::uint64_t n = 1; n <= 64; ++n) {
        for (std::int64_t k = 0; k <= static_cast<std::int64_t>(n); ++k) {
            EXPECT_EQ(binom(n, k), binom(n - 1, k - 1) + binom(n - 1, k));
            EXPECT_EQ(binom(n, k), binom(n, static_cast<std::int64_t>(n) - k));
        }
    }
}

TEST(Binom, RowSumIsPowerOfTwo) {
    for (std::uint64_t n = 0; n <= 64; ++n) {
        Natural sum{0u};
        for (std::int64_t k = 0; k <= static_cast<std::int64_t>(n); ++k) sum += binom(n, k);
        EXPECT_EQ(sum.to_string(), polycoef::testing::decimal_pow2(static_cast<unsigned>(n)));
    }
}

TEST(Binom, LargeArgumentsStayExact) {
    // C(200, 100), a 59-digit value.
    EXPECT_EQ(binom(200, 100).to_string(),
              "90548514656103281165404177077484163874504589675413336841320");
}

TEST(NatPow, Values) {
    EXPECT_EQ(nat_pow(3, 6), Natural{729u});
    EXPECT_EQ(nat_pow(5, 0), Natural{1u});
    EXPECT_EQ(nat_pow(0, 0), Natural{1u});
    EXPECT_EQ(nat_pow(0, 3), Natural{0u});
    EXPECT_EQ(nat_pow(2, 64).to_string(), polycoef::testing::decimal_pow2(64));
    EXPECT_EQ(nat_pow(2, 64).to_string(), "18446744073709551616");
}

TEST(NatPow, PowersOfTwoMatchDoublingOracle) {
    for (unsigned e = 0; e <= 300; e += 7) {
        EXPECT_EQ(nat_pow(2, e).to_string(), polycoef::testing::decimal_pow2(e));
    }
}

TEST(Natural, DecimalRoundTrip) {
    std::mt19937_64 rng(20261015);
    for (int i = 0; i < 200; ++i) {
        std::string digits = std::to_string(rng() % 9 + 1);
        const int len = static_cast<int>(rng() % 120);
        for (int j = 0; j < len; ++j) digits.push_back(static_cast<char>('0' + rng() % 10));
        const Natural v = Natural::parse(digits);
        EXPECT_EQ(v.to_string(), digits);
        EXPECT_EQ(Natural::parse(v.to_string()), v);
    }
    EXPECT_EQ(Natural::parse("0").to_string(), "0");
}

TEST(Natural, ParseRejectsMalformed) {
    EXPECT_THROW(Natural::parse(""), std::invalid_argument);
    EXPECT_THROW(Natural::parse("-1"), std::invalid_argument);
    EXPECT_THROW(Natural::parse("1e5"), std::invalid_argument);
    EXPECT_THROW(Natural::parse("12 3"), std::invalid_argument);
}

TEST(Natural, BitLength) {
    EXPECT_EQ(Natural{0u}.bit_length(), 0u);
    EXPECT_EQ(Natural{1u}.bit_length(), 1u);
    EXPECT_EQ(Natural{255u}.bit_length(), 8u);
    EXPECT_EQ(nat_pow(2, 64).bit_length(), 65u);
}
