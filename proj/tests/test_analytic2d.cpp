// Copyright 2026 The speclab Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <chrono>
#include <cmath>

#include "oracles.hpp"
#include "speclab/analytic2d.hpp"
#include "speclab/counting.hpp"
#include "speclab/interval1d.hpp"
#include "speclab/specfun.hpp"

using namespace speclab;
using namespace speclab::analytic2d;
using oracle::kPi;

TEST(RectSpectrum, SmallCases) {
    const auto d = rect_spectrum(RectDomain(1, 1), ProblemKind::Dirichlet, 3);
    EXPECT_NEAR(d.values[0], 2 * kPi * kPi, 1e-12);
    EXPECT_NEAR(d.values[1], 5 * kPi * kPi, 1e-12);
    EXPECT_NEAR(d.values[2], 5 * kPi * kPi, 1e-12);
    EXPECT_EQ(rect_spectrum(RectDomain(1, 1), ProblemKind::Neumann, 1).values[0], 0.0);
    const auto r = rect_spectrum(RectDomain(1, 2), ProblemKind::Dirichlet, 1);
    EXPECT_NEAR(r.values[0], oracle::rect_values(1, 2, true, 10)[0], 1e-12);
    EXPECT_NEAR(r.values[0], 12.337, 1e-3);
}

TEST(RectSpectrum, MatchesEnumeration) {
    for (bool dirichlet : {true, false}) {
        const auto kind = dirichlet ? ProblemKind::Dirichlet : ProblemKind::Neumann;
        const auto s = rect_spectrum(RectDomain(1.3, 0.7), kind, 200);
        const auto ref = oracle::rect_values(1.3, 0.7, dirichlet, 60);
        for (int k = 0; k < 200; ++k) EXPECT_NEAR(s.values[k], ref[k], 1e-9 * ref[k] + 1e-12);
    }
}

TEST(RectSpectrum, AxisSymmetry) {
    for (auto kind : {ProblemKind::Dirichlet, ProblemKind::Neumann}) {
        const auto ab = rect_spectrum(RectDomain(1.0, 2.5), kind, 100);
        const auto ba = rect_spectrum(RectDomain(2.5, 1.0), kind, 100);
        for (int k = 0; k < 100; ++k) EXPECT_NEAR(ab.values[k], ba.values[k], 1e-12 * ab.values[k]);
    }
}

TEST(RectSpectrum, ClampedAndBucklingRejected) {
    EXPECT_THROW(rect_spectrum(RectDomain(1, 1), ProblemKind::Clamped, 3), std::invalid_argument);
    EXPECT_THROW(rect_spectrum(RectDomain(1, 1), ProblemKind::Buckling, 3), std::invalid_argument);
}

TEST(LatticeCount, Examples) {
    const RectDomain unit(1, 1);
    EXPECT_EQ(rect_lattice_count(unit, ProblemKind::Dirichlet, 2 * kPi * kPi).count, 1);
    EXPECT_EQ(rect_lattice_count(unit, ProblemKind::Dirichlet, 5 * kPi * kPi + 1e-9).count, 3);
    EXPECT_EQ(rect_lattice_count(unit, ProblemKind::Neumann, 0.0).count, 1);
    EXPECT_EQ(rect_lattice_count(unit, ProblemKind::Dirichlet, 1000.0).count,
              oracle::lattice_count(1, 1, true, 1000.0));
    EXPECT_EQ(rect_lattice_count(unit, ProblemKind::Dirichlet, 1000.0).count, 71);
}

TEST(LatticeCount, BruteForceAgreement) {
    for (double tau : {37.0, 150.5, 999.0, 4321.0, 20000.0}) {
        for (bool dirichlet : {true, false}) {
            const auto kind = dirichlet ? ProblemKind::Dirichlet : ProblemKind::Neumann;
            EXPECT_EQ(rect_lattice_count(RectDomain(1, 2), kind, tau).count,
                      oracle::lattice_count(1, 2, dirichlet, tau))
                << tau;
        }
    }
}

TEST(LatticeCount, WeylIdentity) {
    const auto c = rect_lattice_count(RectDomain(1, 2), ProblemKind::Dirichlet, 5000.0);
    EXPECT_DOUBLE_EQ(c.weyl_term, 5000.0 * 2.0 / (4 * kPi));
    EXPECT_DOUBLE_EQ(static_cast<double>(c.count), c.weyl_term + c.remainder);
}

TEST(LatticeCount, AgreesWithSpectrumCounts) {
    const RectDomain rect(1.0, 1.6);
    const auto s = rect_spectrum(rect, ProblemKind::Dirichlet, 300);
    for (double tau = 10.0; tau < s.trusted_limit(); tau *= 1.07) {
        EXPECT_EQ(rect_lattice_count(rect, ProblemKind::Dirichlet, tau).count, analytics::count_leq(s, tau));
    }
}

TEST(LatticeCount, RemainderBound) {
    // |N - τab/4π| / (max(a,b)√τ) stays bounded on [1e2, 1e5].
    for (auto [a, b] : {std::pair{1.0, 1.0}, std::pair{1.0, 2.0}, std::pair{0.7, 1.9}}) {
        double worst = 0.0;
        for (double tau = 100.0; tau <= 1e5; tau *= 1.25) {
            const auto c = rect_lattice_count(RectDomain(a, b), ProblemKind::Dirichlet, tau);
            worst = std::max(worst, std::abs(c.remainder) / (std::max(a, b) * std::sqrt(tau)));
        }
        EXPECT_LT(worst, 0.5) << a << "x" << b;
    }
}

TEST(DiskSpectrum, UnitDiskValues) {
    const DiskDomain unit(1.0);
    const auto d = disk_spectrum(unit, ProblemKind::Dirichlet, 3);
    EXPECT_NEAR(d.values[0], std::pow(oracle::j_zero(0, 1), 2), 1e-9);
    EXPECT_NEAR(d.values[1], std::pow(oracle::j_zero(1, 1), 2), 1e-9);
    EXPECT_EQ(d.values[1], d.values[2]);
    EXPECT_NEAR(d.values[0], 5.783, 1e-3);
    EXPECT_NEAR(d.values[1], 14.682, 1e-3);

    const auto c = disk_spectrum(unit, ProblemKind::Clamped, 3);
    const double k1 = oracle::bisect(
        [](double k) { return oracle::j(0, k) * oracle::i(1, k) + oracle::j(1, k) * oracle::i(0, k); }, 2.5, 3.5);
    const double k2 = oracle::bisect(
        [](double k) { return oracle::j(1, k) * oracle::i(2, k) + oracle::i(1, k) * oracle::j(2, k); }, 4.0, 5.0);
    EXPECT_NEAR(c.values[0], k1 * k1, 1e-8);
    EXPECT_NEAR(c.values[1], k2 * k2, 1e-8);
    EXPECT_EQ(c.values[1], c.values[2]);
    EXPECT_NEAR(c.values[0], 10.216, 1e-3);

    const auto b = disk_spectrum(unit, ProblemKind::Buckling, 3);
    EXPECT_NEAR(b.values[0], std::pow(oracle::j_zero(1, 1), 2), 1e-9);
    EXPECT_NEAR(b.values[1], std::pow(oracle::j_zero(2, 1), 2), 1e-9);

    const auto n = disk_spectrum(unit, ProblemKind::Neumann, 4);
    EXPECT_EQ(n.values[0], 0.0);
    EXPECT_NEAR(n.values[1], std::pow(oracle::j_prime_zero(1, 1), 2), 1e-9);
    EXPECT_NEAR(n.values[3], std::pow(oracle::j_prime_zero(2, 1), 2), 1e-9);
}

TEST(DiskSpectrum, MatchesEnumerationOracle) {
    // All (m, l) with m, l <= 25, doubled for m >= 1.
    std::vector<double> ref;
    for (int m = 0; m <= 25; ++m) {
        for (int l = 1; l <= 25; ++l) {
            const double v = std::pow(oracle::j_zero(m, l), 2);
            ref.push_back(v);
            if (m > 0) ref.push_back(v);
        }
    }
    std::sort(ref.begin(), ref.end());
    const auto s = disk_spectrum(DiskDomain(1.0), ProblemKind::Dirichlet, 150);
    for (int k = 0; k < 150; ++k) EXPECT_NEAR(s.values[k], ref[k], 1e-8 * ref[k]);
}

TEST(DiskSpectrum, ClampedRootsSatisfyDeterminant) {
    for (int m = 0; m <= 6; ++m) {
        for (double k : disk_clamped_roots_below(m, 30.0)) {
            // I_m grows like e^k, so the residual is measured against the size of the terms.
            const double scale = oracle::i(m, k) * (std::abs(oracle::j(m, k)) + std::abs(oracle::j(m + 1, k)));
            EXPECT_LT(std::abs(disk_clamped_determinant(m, k)) / scale, 1e-10) << m << " " << k;
            auto det = [m](double x) { return oracle::j(m, x) * oracle::i(m + 1, x) + oracle::i(m, x) * oracle::j(m + 1, x); };
            EXPECT_LT(det(k - 1e-8) * det(k + 1e-8), 0.0) << m << " " << k;
        }
    }
}

TEST(DiskSpectrum, ClampedRootsInterlace) {
    for (int m = 0; m <= 5; ++m) {
        const auto roots = disk_clamped_roots_below(m, 25.0);
        for (std::size_t l = 0; l < roots.size(); ++l) {
            EXPECT_GT(roots[l], specfun::bessel_j_zero(m, static_cast<int>(l) + 1));
            EXPECT_LT(roots[l], specfun::bessel_j_zero(m + 1, static_cast<int>(l) + 1));
        }
    }
}

TEST(DiskSpectrum, RadiusScaling) {
    for (auto kind : kAllKinds) {
        const auto unit = disk_spectrum(DiskDomain(1.0), kind, 20);
        const auto big = disk_spectrum(DiskDomain(2.5), kind, 20);
        for (int k = 0; k < 20; ++k) {
            // Clamped values are Γ = k², which scale like the others.
            EXPECT_NEAR(big.values[k], unit.values[k] / 6.25, 1e-10 * std::max(1.0, unit.values[k]));
        }
    }
}

TEST(DiskSpectrum, Sharpness) {
    const DiskDomain unit(1.0);
    const auto d = disk_spectrum(unit, ProblemKind::Dirichlet, 3);
    const auto c = disk_spectrum(unit, ProblemKind::Clamped, 3);
    const auto b = disk_spectrum(unit, ProblemKind::Buckling, 3);
    EXPECT_GT(d.values[1], c.values[0]);
    EXPECT_GT(c.values[1], b.values[0]);
    EXPECT_NEAR(std::sqrt(c.values[1]), 4.6109, 1e-4);
}

TEST(DiskSpectrum, Fast) {
    const auto start = std::chrono::steady_clock::now();
    for (auto kind : kAllKinds) disk_spectrum(DiskDomain(1.0), kind, 50);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    EXPECT_LT(seconds, 1.0);
}

TEST(DiskSpectrum, TruncatedDegenerateGroupNotTrusted) {
    // Values 2 and 3 are the pair (j_1^(1))²; cutting after value 2 splits it.
    const auto s = disk_spectrum(DiskDomain(1.0), ProblemKind::Dirichlet, 2);
    EXPECT_EQ(s.values.size(), 2u);
    EXPECT_EQ(s.trusted_count, 1u);
}

TEST(BucklingFamilies, Counts) {
    const RectDomain unit(1, 1);
    EXPECT_EQ(candidate_buckling_family_count(unit, 8 * kPi * kPi - 1).families[0].count, 0);
    EXPECT_EQ(candidate_buckling_family_count(unit, 8 * kPi * kPi).families[0].count, 1);
    // Enumeration: (1,1) = 8π², (1,2) = (2,1) = 20π² ≈ 197.4 <= 200.
    std::int64_t brute = 0;
    for (int l = 1; l < 10; ++l) {
        for (int m = 1; m < 10; ++m) brute += 4 * kPi * kPi * (l * l + m * m) <= 200.0;
    }
    EXPECT_EQ(brute, 3);
    EXPECT_EQ(candidate_buckling_family_count(unit, 200.0).families[0].count, brute);
}

TEST(BucklingFamilies, TotalIsSumOfFamilies) {
    const auto f = candidate_buckling_family_count(RectDomain(1, 1.5), 3000.0);
    std::int64_t sum = 0;
    for (const auto& c : f.families) sum += c.count;
    EXPECT_EQ(f.total, sum);
    // Family 4 by brute force over tan-root pairs.
    const interval1d::IntervalDomain a(1.0), b(1.5);
    std::int64_t brute = 0;
    for (int l = 1; l < 40; ++l) {
        for (int m = 1; m < 40; ++m) {
            const double v = std::pow(2 * interval1d::tan_root(l) / 1.0, 2) +
                             std::pow(2 * interval1d::tan_root(m) / 1.5, 2);
            brute += v <= 3000.0;
        }
    }
    EXPECT_EQ(f.families[3].count, brute);
}

TEST(ProductResidual, NotAnEigenfunction) {
    const double r = buckling_product_residual(RectDomain(1, 1), 1, 1, 256);
    EXPECT_GT(r, 10.0);
    // Symbolic substitution: residual α²β²(cos αx + cos βy), of size 2α²β²
    // at the centre (a grid point); max |u| = 4.
    const double alpha = 2 * kPi;
    EXPECT_NEAR(r, 2 * std::pow(alpha, 4) / 4, 1e-9 * r);
    // Finite-difference evaluation at an interior point.
    const double x = 0.3, y = 0.45;
    EXPECT_NEAR(oracle::product_residual_fd(alpha, alpha, x, y),
                alpha * alpha * alpha * alpha * (std::cos(alpha * x) + std::cos(alpha * y)), 1e-2 * std::pow(alpha, 4));
}

TEST(ProductResidual, OtherModes) {
    EXPECT_GT(buckling_product_residual(RectDomain(2, 1), 2, 1, 256), 0.0);
    EXPECT_GT(buckling_product_residual(RectDomain(2, 1), 2, 1, 256), 1.0);
}

TEST(ProductResidual, OneDimensionalFactorIsExact) {
    for (double L : {1.0, 2.0, 0.6}) {
        EXPECT_LT(buckling_factor_residual_1d(L, 1, 256), 1e-9);
        EXPECT_LT(buckling_factor_residual_1d(L, 3, 256), 1e-9);
    }
}
