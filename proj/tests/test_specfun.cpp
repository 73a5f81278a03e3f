// Copyright 2026 The speclab Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "speclab/errors.hpp"
#include "speclab/specfun.hpp"

using namespace speclab::specfun;

TEST(BesselJ, Origin) {
    EXPECT_EQ(bessel_j(0, 0.0), 1.0);
    EXPECT_EQ(bessel_j(1, 0.0), 0.0);
    EXPECT_EQ(bessel_j(7, 0.0), 0.0);
}

TEST(BesselJ, NearFirstZero) { EXPECT_LT(std::abs(bessel_j(0, 2.4048)), 5e-4); }

TEST(BesselJ, MatchesStdlibUpTo50) {
    for (int m = 0; m <= 12; ++m) {
        for (double x = 0.0; x <= 50.0; x += 0.173) {
            EXPECT_NEAR(bessel_j(m, x), oracle::j(m, x), 1e-12) << "m=" << m << " x=" << x;
        }
    }
}

TEST(BesselJ, RejectsNegativeArguments) {
    EXPECT_THROW(bessel_j(-1, 1.0), std::invalid_argument);
    EXPECT_THROW(bessel_j(0, -1.0), std::invalid_argument);
}

TEST(BesselJ, RegimesAgreeAtSwitchover) {
    for (int m = 0; m <= 20; ++m) {
        const double x = detail::bessel_j_switchover(m);
        EXPECT_NEAR(detail::bessel_j_series(m, x), detail::bessel_j_large_argument(m, x * (1 + 1e-15)), 1e-10)
            << "m=" << m;
    }
}

TEST(BesselI, Values) {
    EXPECT_EQ(bessel_i(0, 0.0), 1.0);
    EXPECT_EQ(bessel_i(1, 0.0), 0.0);
    EXPECT_NEAR(bessel_i(0, 1.0), 1.2660658777520082, 1e-15);
    EXPECT_NEAR(bessel_i(0, 1.0), oracle::i_series(0, 1.0), 1e-15);
}

TEST(BesselI, RelativeAccuracyUpTo30) {
    for (int m = 0; m <= 10; ++m) {
        for (double x = 0.05; x <= 30.0; x += 0.31) {
            const double ref = oracle::i_series(m, x);
            EXPECT_NEAR(bessel_i(m, x) / ref, 1.0, 1e-12) << "m=" << m << " x=" << x;
        }
    }
}

TEST(BesselI, OverflowSignalled) { EXPECT_THROW(bessel_i(0, 800.0), std::overflow_error); }

TEST(BesselZeros, KnownValues) {
    EXPECT_NEAR(bessel_j_zero(0, 1), 2.404825557695773, 1e-10);
    EXPECT_NEAR(bessel_j_zero(1, 1), 3.831705970207512, 1e-10);
    EXPECT_NEAR(bessel_j_zero(0, 2), 5.520078110286311, 1e-10);
    // Bisection of J_0 over (j_1^(1), 7).
    const double ref = oracle::bisect([](double x) { return oracle::j(0, x); }, 3.8317, 7.0);
    EXPECT_NEAR(bessel_j_zero(0, 2), ref, 1e-10);
}

TEST(BesselZeros, MatchScanOracle) {
    for (int m = 0; m <= 10; ++m) {
        for (int l = 1; l <= 10; ++l) {
            EXPECT_NEAR(bessel_j_zero(m, l), oracle::j_zero(m, l), 1e-10) << m << "," << l;
        }
    }
}

TEST(BesselZeros, Interlacing) {
    for (int m = 0; m <= 10; ++m) {
        for (int l = 1; l <= 10; ++l) {
            const double a = bessel_j_zero(m, l);
            const double b = bessel_j_zero(m + 1, l);
            const double c = bessel_j_zero(m, l + 1);
            EXPECT_LT(a, b);
            EXPECT_LT(b, c);
        }
    }
}

TEST(BesselZeros, ResidualAtZero) {
    for (int m = 0; m <= 10; ++m) {
        for (int l = 1; l <= 10; ++l) EXPECT_LT(std::abs(bessel_j(m, bessel_j_zero(m, l))), 1e-9);
    }
}

TEST(BesselZeros, BelowAgreesWithIndexed) {
    const auto zs = bessel_j_zeros_below(3, 40.0);
    ASSERT_FALSE(zs.empty());
    for (std::size_t l = 0; l < zs.size(); ++l) EXPECT_EQ(zs[l], bessel_j_zero(3, static_cast<int>(l) + 1));
    EXPECT_GT(bessel_j_zero(3, static_cast<int>(zs.size()) + 1), 40.0);
}

TEST(BesselPrimeZeros, KnownValues) {
    EXPECT_NEAR(bessel_j_prime_zero(0, 1), bessel_j_zero(1, 1), 1e-10);
    const double d11 = oracle::bisect([](double x) { return oracle::j_prime(1, x); }, 1.0, 3.0);
    const double d21 = oracle::bisect([](double x) { return oracle::j_prime(2, x); }, 2.0, 4.0);
    EXPECT_NEAR(bessel_j_prime_zero(1, 1), d11, 1e-10);
    EXPECT_NEAR(bessel_j_prime_zero(2, 1), d21, 1e-10);
    EXPECT_NEAR(d11, 1.8412, 1e-4);
    EXPECT_NEAR(d21, 3.0542, 1e-4);
}

TEST(BesselPrimeZeros, MatchScanOracle) {
    for (int m = 0; m <= 8; ++m) {
        for (int l = 1; l <= 8; ++l) {
            EXPECT_NEAR(bessel_j_prime_zero(m, l), oracle::j_prime_zero(m, l), 1e-10) << m << "," << l;
        }
    }
}

TEST(FindRoot, Linear) {
    auto f = [](double x) { return x - 1.0; };
    EXPECT_NEAR(find_root(f, RootBracket::make(f, 0.0, 2.0)), 1.0, 1e-10);
}

TEST(FindRoot, TanEquationWithoutPoles) {
    auto f = [](double y) { return std::sin(y) - y * std::cos(y); };
    const double root = find_root(f, RootBracket::make(f, oracle::kPi, 1.5 * oracle::kPi));
    const double ref = oracle::bisect([](double y) { return std::tan(y) - y; }, oracle::kPi + 1e-9,
                                      1.5 * oracle::kPi - 1e-9);
    EXPECT_NEAR(root, ref, 1e-10);
    EXPECT_NEAR(root, 4.4934, 1e-4);
}

TEST(FindRoot, ClampedDiskDeterminant) {
    auto f = [](double k) { return bessel_j(0, k) * bessel_i(1, k) + bessel_j(1, k) * bessel_i(0, k); };
    const double root = find_root(f, RootBracket::make(f, 2.5, 3.5));
    const double ref = oracle::bisect(
        [](double k) { return oracle::j(0, k) * oracle::i(1, k) + oracle::j(1, k) * oracle::i(0, k); }, 2.5, 3.5);
    EXPECT_NEAR(root, ref, 1e-10);
    EXPECT_NEAR(root, 3.1962, 1e-4);
}

TEST(FindRoot, InvalidBracket) {
    auto f = [](double x) { return x * x + 1.0; };
    EXPECT_THROW(RootBracket::make(f, -1.0, 1.0), speclab::InvalidBracketError);
    auto g = [](double x) { return x; };
    EXPECT_THROW(RootBracket::make(g, 1.0, -1.0), speclab::InvalidBracketError);
}

TEST(FindRoot, Deterministic) {
    auto f = [](double x) { return std::cos(x) - x; };
    auto df = [](double x) { return -std::sin(x) - 1.0; };
    const auto b = RootBracket::make(f, 0.0, 1.0);
    const double r1 = find_root(f, b, 1e-14);
    const double r2 = find_root(f, b, 1e-14);
    EXPECT_EQ(r1, r2);
    EXPECT_EQ(find_root(f, df, b, 1e-14), find_root(f, df, b, 1e-14));
    EXPECT_NEAR(find_root(f, df, b, 1e-14), r1, 1e-13);
}
