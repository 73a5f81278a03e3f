// Copyright 2026 The speclab Authors
// SPDX-License-Identifier: Apache-2.0

#include "speclab/cap.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace speclab::fdlab {

CapDomain::CapDomain(double aperture, int grid_points) : aperture_(aperture), grid_points_(grid_points) {
    if (!(aperture > 0.0 && aperture < std::numbers::pi))
        throw std::invalid_argument("cap aperture must lie in (0, pi)");
    if (grid_points < 8) throw std::invalid_argument("cap needs at least 8 grid points");
}

std::string CapDomain::label() const { return "cap(delta=" + format_number(aperture_) + ")"; }

std::vector<double> cap_order_eigenvalues(const CapDomain& domain, ProblemKind kind, int m, int count) {
    if (kind != ProblemKind::Dirichlet && kind != ProblemKind::Neumann)
        throw std::invalid_argument("cap supports Dirichlet and Neumann only");
    if (m < 0 || count < 1) throw std::invalid_argument("bad cap order or count");
    const int n = domain.grid_points();
    const double delta = domain.aperture();
    // Dirichlet puts δ on the node after the last unknown; Neumann puts it
    // on the last cell face.
    const bool dirichlet = kind == ProblemKind::Dirichlet;
    const double h = dirichlet ? delta / (n + 0.5) : delta / n;

    // Symmetric tridiagonal A, diagonal mass W; solve W^{-1/2} A W^{-1/2}.
    Eigen::VectorXd diag(n);
    Eigen::VectorXd sub(n - 1);
    Eigen::VectorXd w(n);
    for (int i = 0; i < n; ++i) {
        const double theta = (i + 0.5) * h;
        const double s = std::sin(theta);
        const double face_lo = std::sin(i * h);        // θ_{i-1/2}, zero at i = 0
        double face_hi = std::sin((i + 1) * h);        // θ_{i+1/2}
        if (i == n - 1 && !dirichlet) face_hi = 0.0;   // no flux through θ = δ
        w(i) = h * s;
        diag(i) = (face_lo + face_hi) / h + m * m * h / s;
        if (i + 1 < n) sub(i) = -face_hi / h;
    }
    for (int i = 0; i < n; ++i) diag(i) /= w(i);
    for (int i = 0; i + 1 < n; ++i) sub(i) /= std::sqrt(w(i) * w(i + 1));

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw std::runtime_error("cap tridiagonal solve failed");
    const int k = std::min(count, n);
    std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + k);
    return out;
}

Spectrum cap_spectrum(const CapDomain& domain, ProblemKind kind, int count) {
    if (count < 1) throw std::invalid_argument("cap_spectrum needs count >= 1");
    std::vector<double> values;
    for (int m = 0;; ++m) {
        const auto order = cap_order_eigenvalues(domain, kind, m, count);
        // The lowest eigenvalue grows with m; stop once an order cannot
        // contribute to the `count` smallest.
        if (static_cast<int>(values.size()) >= count) {
            std::sort(values.begin(), values.end());
            if (order.front() > values[count - 1]) break;
        }
        for (double v : order) {
            values.push_back(v);
            if (m > 0) values.push_back(v);
        }
    }
    std::sort(values.begin(), values.end());
    const std::size_t trusted = truncate_complete(values, static_cast<std::size_t>(count));
    if (kind == ProblemKind::Neumann && std::abs(values.front()) < 1e-9) values.front() = 0.0;
    return make_spectrum(kind, domain.label(), std::move(values),
                         SpectrumSource::cap(domain.grid_points()), trusted);
}

}  // namespace speclab::fdlab
