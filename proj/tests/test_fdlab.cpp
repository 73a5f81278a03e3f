// Copyright 2026 The speclab Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "speclab/cap.hpp"
#include "speclab/errors.hpp"
#include "speclab/fd_spectrum.hpp"
#include "speclab/gevp.hpp"
#include "speclab/grid.hpp"
#include "speclab/interval1d.hpp"
#include "speclab/operators.hpp"

using namespace speclab;
using namespace speclab::fdlab;
using oracle::kPi;

namespace {

Eigen::VectorXd dense_eigenvalues(const SparseSymOperator& op) {
    Eigen::MatrixXd m(op.matrix());
    return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m, Eigen::EigenvaluesOnly).eigenvalues();
}

std::vector<GridDomain> sample_domains() {
    return {build_grid_domain(RectShape{1, 1}, 1.0 / 8),
            build_grid_domain(RectShape{1, 0.5, 0.25, 0.0}, 1.0 / 8, Centering::Cell),
            build_grid_domain(DiskShape{1.0}, 1.0 / 6),
            build_grid_domain(LShape{1, 1, 0.5}, 1.0 / 8),
            build_interval_grid(1.0, 12)};
}

double observed_order(double e1, double e2) { return std::log2(std::abs(e1) / std::abs(e2)); }

}  // namespace

TEST(Grid, RectangleQuarterMesh) {
    const auto g = build_grid_domain(RectShape{1, 1}, 0.25);
    EXPECT_EQ(g.unknowns(), 9);
    std::vector<std::pair<int, int>> expected;
    for (int j = 1; j <= 3; ++j)
        for (int i = 1; i <= 3; ++i) expected.emplace_back(i, j);
    auto cells = g.global_cells();
    std::sort(cells.begin(), cells.end());
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(cells, expected);
}

TEST(Grid, DegenerateRejected) {
    EXPECT_THROW(build_grid_domain(RectShape{1, 1}, 0.5), DegenerateDomainError);
    EXPECT_THROW(build_grid_domain(RectShape{1, 1}, 0.0), std::invalid_argument);
}

TEST(Grid, DiskInclusionRule) {
    const auto g = build_grid_domain(DiskShape{1.0}, 0.5);
    EXPECT_EQ(g.unknowns(), 9);
    for (const auto& [i, j] : g.global_cells()) EXPECT_LT(std::hypot(i * 0.5, j * 0.5), 1.0);
    // Every lattice point with norm < 1 is present.
    int inside = 0;
    for (int i = -3; i <= 3; ++i)
        for (int j = -3; j <= 3; ++j) inside += std::hypot(i * 0.5, j * 0.5) < 1.0;
    EXPECT_EQ(inside, g.unknowns());
}

TEST(Grid, LShapeCount) {
    for (int n : {8, 16, 20}) {
        const double h = 1.0 / n;
        const auto g = build_grid_domain(LShape{1, 1, 0.5}, h);
        // Full square interior minus the points in the closed notch [0.5, 1]².
        int expected = 0;
        for (int i = 1; i < n; ++i)
            for (int j = 1; j < n; ++j) expected += !(i * h >= 0.5 - 1e-12 && j * h >= 0.5 - 1e-12);
        EXPECT_EQ(g.unknowns(), expected) << n;
    }
    EXPECT_EQ(build_grid_domain(LShape{1, 1, 0.5}, 1.0 / 8).unknowns(), 33);
}

TEST(Grid, MaskParsing) {
    const auto g = parse_mask("h 0.1\n.###.\n#####\n#####\n.###.\n", "blob");
    EXPECT_DOUBLE_EQ(g.h(), 0.1);
    EXPECT_EQ(g.unknowns(), 16);
    EXPECT_FALSE(g.inside(0, 0));
    EXPECT_TRUE(g.inside(1, 0));
    EXPECT_THROW(parse_mask("h 0.1\n##x\n", "bad"), std::invalid_argument);
    EXPECT_THROW(parse_mask("width 3\n###\n", "bad"), std::invalid_argument);
    EXPECT_THROW(parse_mask("h 0.1\n###\n##\n", "bad"), std::invalid_argument);
    // Two blocks joined only at a corner are not 4-connected.
    EXPECT_THROW(parse_mask("h 0.1\n###...\n###...\n###...\n...###\n...###\n...###\n", "split"),
                 DegenerateDomainError);
}

TEST(Operators, ExactlySymmetric) {
    for (const auto& g : sample_domains()) {
        EXPECT_TRUE(assemble_laplacian(g, LaplaceBoundary::Dirichlet).is_exactly_symmetric()) << g.label();
        EXPECT_TRUE(assemble_laplacian(g, LaplaceBoundary::Neumann).is_exactly_symmetric()) << g.label();
        EXPECT_TRUE(assemble_bilaplacian_clamped(g).is_exactly_symmetric()) << g.label();
        for (const auto& e : assemble_bilaplacian_clamped(g).upper_entries()) EXPECT_LE(e.row, e.col);
    }
}

TEST(Operators, NeumannNullVectorExact) {
    for (const auto& g : sample_domains()) {
        const auto n = assemble_laplacian(g, LaplaceBoundary::Neumann);
        const Eigen::VectorXd ones = Eigen::VectorXd::Ones(n.dimension());
        const Eigen::VectorXd r = n.matrix() * ones;
        EXPECT_EQ(r.cwiseAbs().maxCoeff(), 0.0) << g.label();
    }
}

TEST(Operators, Definiteness) {
    for (const auto& g : sample_domains()) {
        EXPECT_GT(dense_eigenvalues(assemble_laplacian(g, LaplaceBoundary::Dirichlet))(0), 0.0) << g.label();
        EXPECT_GT(dense_eigenvalues(assemble_bilaplacian_clamped(g))(0), 0.0) << g.label();
        const auto n = dense_eigenvalues(assemble_laplacian(g, LaplaceBoundary::Neumann));
        EXPECT_LT(std::abs(n(0)), 1e-9 * n(n.size() - 1)) << g.label();
        EXPECT_GT(n(1), 1e-6 * n(n.size() - 1)) << g.label();  // one-dimensional kernel
    }
}

TEST(Operators, DiscreteSineMode) {
    const auto g = build_grid_domain(RectShape{1, 1}, 0.25);
    const double h = 0.25;
    const double expected = 4 / (h * h) * 2 * std::pow(std::sin(kPi * h / 2), 2);
    EXPECT_NEAR(dense_eigenvalues(assemble_laplacian(g, LaplaceBoundary::Dirichlet))(0), expected, 1e-12);
    EXPECT_NEAR(expected, 18.745, 1e-3);
}

TEST(Gevp, DiagonalIdentity) {
    Eigen::SparseMatrix<double> a(3, 3);
    a.insert(0, 0) = 3.0;
    a.insert(1, 1) = 1.0;
    a.insert(2, 2) = 2.0;
    const auto sol = solve_gevp(SparseSymOperator(a), nullptr, 3);
    ASSERT_EQ(sol.eigenvalues.size(), 3u);
    EXPECT_DOUBLE_EQ(sol.eigenvalues[0], 1.0);
    EXPECT_DOUBLE_EQ(sol.eigenvalues[1], 2.0);
    EXPECT_DOUBLE_EQ(sol.eigenvalues[2], 3.0);
}

TEST(Gevp, SquareDirichletBothMethods) {
    const double h = 1.0 / 32;
    const auto g = build_grid_domain(RectShape{1, 1}, h);
    const auto a = assemble_laplacian(g, LaplaceBoundary::Dirichlet);
    auto disc = [h](int l, int m) {
        return 4 / (h * h) * (std::pow(std::sin(l * kPi * h / 2), 2) + std::pow(std::sin(m * kPi * h / 2), 2));
    };
    const std::vector<double> expected = {disc(1, 1), disc(1, 2), disc(2, 1), disc(2, 2), disc(1, 3), disc(3, 1)};
    for (auto method : {EvpMethod::Dense, EvpMethod::ShiftInvert}) {
        EvpOptions options;
        options.method = method;
        const auto sol = solve_gevp(a, nullptr, 6, options);
        for (int k = 0; k < 6; ++k) EXPECT_NEAR(sol.eigenvalues[k], expected[k], 1e-8 * expected[k]) << sol.method;
        for (double r : sol.residuals) EXPECT_LE(r, options.tol);
    }
    EXPECT_NEAR(expected[0] / (2 * kPi * kPi), 1.0, 0.01);
}

TEST(Gevp, PencilMethodsAgreeAndAreDeterministic) {
    const auto g = build_grid_domain(LShape{1, 1, 0.5}, 1.0 / 24);
    const auto b = assemble_bilaplacian_clamped(g);
    const auto d = assemble_laplacian(g, LaplaceBoundary::Dirichlet);
    EvpOptions dense;
    dense.method = EvpMethod::Dense;
    EvpOptions krylov;
    krylov.method = EvpMethod::ShiftInvert;
    const auto s1 = solve_gevp(b, &d, 10, dense);
    const auto s2 = solve_gevp(b, &d, 10, krylov);
    const auto s3 = solve_gevp(b, &d, 10, krylov);
    for (int k = 0; k < 10; ++k) {
        EXPECT_NEAR(s1.eigenvalues[k], s2.eigenvalues[k], 1e-8 * s1.eigenvalues[k]);
        EXPECT_EQ(s2.eigenvalues[k], s3.eigenvalues[k]);
        EXPECT_LE(s2.residuals[k], krylov.tol);
    }
}

TEST(Gevp, NeumannKernelResolved) {
    const auto g = build_grid_domain(RectShape{1, 1}, 1.0 / 40, Centering::Cell);
    EvpOptions options;
    options.method = EvpMethod::ShiftInvert;
    const auto sol = solve_gevp(assemble_laplacian(g, LaplaceBoundary::Neumann), nullptr, 4, options);
    EXPECT_LT(std::abs(sol.eigenvalues[0]), 1e-8);
    for (double r : sol.residuals) EXPECT_LE(r, options.tol);
}

TEST(FdSpectrum, SquareDirichletAndNeumann) {
    const auto d = fd_spectrum(RectShape{1, 1}, ProblemKind::Dirichlet, 1.0 / 32, 1);
    EXPECT_NEAR(d.values[0] / (2 * kPi * kPi), 1.0, 0.01);
    const auto n = fd_spectrum(RectShape{1, 1}, ProblemKind::Neumann, 1.0 / 32, 3);
    EXPECT_EQ(n.values[0], 0.0);
    EXPECT_EQ(n.source.type, SpectrumSource::Type::FiniteDifference);
    EXPECT_EQ(n.domain, "rect(a=1,b=1)");
}

TEST(FdSpectrum, TrustedCount) {
    const auto g = build_grid_domain(RectShape{1, 1}, 1.0 / 8);  // 49 unknowns
    const auto s = fd_spectrum(g, ProblemKind::Dirichlet, 20);
    EXPECT_EQ(s.values.size(), 20u);
    EXPECT_EQ(s.trusted_count, 12u);
}

TEST(FdSpectrum, UnitDiskPlateValues) {
    const auto c = fd_spectrum(DiskShape{1.0}, ProblemKind::Clamped, 1.0 / 64, 1);
    EXPECT_NEAR(c.values[0] / 10.2158, 1.0, 0.05);
    const auto b = fd_spectrum(DiskShape{1.0}, ProblemKind::Buckling, 1.0 / 64, 1);
    EXPECT_NEAR(b.values[0] / 14.682, 1.0, 0.05);
}

TEST(FdSpectrum, ClampedSquareSelfConvergence) {
    std::vector<double> g;
    for (int n : {32, 64, 128}) g.push_back(fd_spectrum(RectShape{1, 1}, ProblemKind::Clamped, 1.0 / n, 1).values[0]);
    const double limit = g[2] + (g[2] - g[1]) / 3;  // second order
    EXPECT_NEAR(g[1] / limit, 1.0, 0.03);
    EXPECT_GT((g[1] - g[0]) / (g[2] - g[1]), 2.0);
}

TEST(FdSpectrum, BucklingDominatesDirichlet) {
    for (const auto& g : sample_domains()) {
        const auto d = fd_spectrum(g, ProblemKind::Dirichlet, 1);
        const auto b = fd_spectrum(g, ProblemKind::Buckling, 1);
        EXPECT_GE(b.values[0], d.values[0]) << g.label();
    }
}

TEST(FdSpectrum, RichardsonRatiosOnSquare) {
    for (auto kind : kAllKinds) {
        const int index = kind == ProblemKind::Neumann ? 1 : 0;
        std::vector<double> v;
        for (int n : {10, 20, 40}) v.push_back(fd_spectrum(RectShape{1, 1}, kind, 1.0 / n, 2).values[index]);
        const double ratio = (v[1] - v[0]) / (v[2] - v[1]);
        EXPECT_GT(ratio, 2.0) << to_string(kind);  // order >= 1; 4 is second order
    }
}

TEST(FdSpectrum, ConvergenceOrderAgainstClosedForms) {
    // Grid-aligned boundaries: the unit square (Laplacians) and the unit
    // interval (all four kinds).
    for (auto kind : {ProblemKind::Dirichlet, ProblemKind::Neumann}) {
        const int index = kind == ProblemKind::Neumann ? 1 : 0;
        const double exact = kPi * kPi * (kind == ProblemKind::Dirichlet ? 2 : 1);
        const double e1 = fd_spectrum(RectShape{1, 1}, kind, 1.0 / 20, 2).values[index] - exact;
        const double e2 = fd_spectrum(RectShape{1, 1}, kind, 1.0 / 40, 2).values[index] - exact;
        EXPECT_GE(observed_order(e1, e2), 1.8) << to_string(kind);
    }
    for (auto kind : {ProblemKind::Dirichlet, ProblemKind::Clamped, ProblemKind::Buckling}) {
        const double exact = interval1d::interval_spectrum(interval1d::IntervalDomain(1.0), kind, 1).values[0];
        const double e1 = fd_spectrum(build_interval_grid(1.0, 40), kind, 1).values[0] - exact;
        const double e2 = fd_spectrum(build_interval_grid(1.0, 80), kind, 1).values[0] - exact;
        EXPECT_GE(observed_order(e1, e2), 1.8) << to_string(kind);
    }
}

TEST(FdSpectrum, BeamAnalogue) {
    // Single-row mask against the dense beam oracle on the same grid.
    const auto s = fd_spectrum(build_interval_grid(1.0, 200), ProblemKind::Clamped, 3);
    const auto ref = oracle::beam_fd(200, 3);
    for (int k = 0; k < 3; ++k) EXPECT_NEAR(s.values[k], std::sqrt(ref[k]), 1e-8 * s.values[k]);
}

TEST(Cap, Hemisphere) {
    const CapDomain half(kPi / 2, 4000);
    const auto d = cap_spectrum(half, ProblemKind::Dirichlet, 1);
    const auto n = cap_spectrum(half, ProblemKind::Neumann, 2);
    EXPECT_NEAR(d.values[0], 2.0, 1e-3);
    EXPECT_EQ(n.values[0], 0.0);
    EXPECT_NEAR(n.values[1], 2.0, 1e-3);
}

TEST(Cap, HemisphereSphericalHarmonics) {
    // Dirichlet: l(l+1) with l + m odd; Neumann: l + m even.
    const CapDomain half(kPi / 2, 2000);
    const auto d = cap_spectrum(half, ProblemKind::Dirichlet, 6);
    const std::vector<double> dref = {2, 6, 6, 12, 12, 12};
    for (int k = 0; k < 6; ++k) EXPECT_NEAR(d.values[k], dref[k], 1e-3) << k;
    const auto n = cap_spectrum(half, ProblemKind::Neumann, 6);
    const std::vector<double> nref = {0, 2, 2, 6, 6, 6};
    for (int k = 0; k < 6; ++k) EXPECT_NEAR(n.values[k], nref[k], 1e-3) << k;
}

TEST(Cap, LargeAndSmallApertures) {
    const CapDomain big(0.75 * kPi, 4000);
    EXPECT_GT(cap_spectrum(big, ProblemKind::Neumann, 2).values[1], cap_spectrum(big, ProblemKind::Dirichlet, 1).values[0]);
    const CapDomain small(0.40 * kPi, 4000);
    EXPECT_LT(cap_spectrum(small, ProblemKind::Neumann, 2).values[1],
              cap_spectrum(small, ProblemKind::Dirichlet, 1).values[0]);
}

TEST(Cap, Validation) {
    EXPECT_THROW(CapDomain(0.0, 100), std::invalid_argument);
    EXPECT_THROW(CapDomain(kPi, 100), std::invalid_argument);
    EXPECT_THROW(cap_spectrum(CapDomain(1.0, 100), ProblemKind::Clamped, 1), std::invalid_argument);
}
