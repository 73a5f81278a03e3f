// Copyright 2026 The speclab Authors
// SPDX-License-Identifier: Apache-2.0

#include "speclab/fd_spectrum.hpp"

#include <cmath>

#include "speclab/operators.hpp"

namespace speclab::fdlab {

namespace {

std::string shape_part(const std::string& label) {
    const auto at = label.find('@');
    return at == std::string::npos ? label : label.substr(0, at);
}

}  // namespace

Centering preferred_centering(ProblemKind kind) {
    return kind == ProblemKind::Neumann ? Centering::Cell : Centering::Vertex;
}

Spectrum fd_spectrum(const GridDomain& domain, ProblemKind kind, int count, const EvpOptions& options) {
    EvpSolution sol;
    switch (kind) {
        case ProblemKind::Neumann: {
            const auto a = assemble_laplacian(domain, LaplaceBoundary::Neumann);
            sol = solve_gevp(a, nullptr, count, options);
            // Row sums vanish exactly, so 0 is an exact eigenvalue; the
            // solver returns it only up to rounding.
            const double scale = 8.0 / (domain.h() * domain.h());
            if (std::abs(sol.eigenvalues.front()) <= 1e-9 * scale) sol.eigenvalues.front() = 0.0;
            break;
        }
        case ProblemKind::Dirichlet: {
            const auto a = assemble_laplacian(domain, LaplaceBoundary::Dirichlet);
            sol = solve_gevp(a, nullptr, count, options);
            break;
        }
        case ProblemKind::Clamped: {
            const auto b = assemble_bilaplacian_clamped(domain);
            sol = solve_gevp(b, nullptr, count, options);
            for (double& v : sol.eigenvalues) v = std::sqrt(v);
            break;
        }
        case ProblemKind::Buckling: {
            const auto b = assemble_bilaplacian_clamped(domain);
            const auto a = assemble_laplacian(domain, LaplaceBoundary::Dirichlet);
            sol = solve_gevp(b, &a, count, options);
            break;
        }
    }
    const std::size_t trusted = static_cast<std::size_t>(domain.unknowns() / 4);
    return make_spectrum(kind, shape_part(domain.label()), std::move(sol.eigenvalues),
                         SpectrumSource::finite_difference(domain.h()), trusted);
}

Spectrum fd_spectrum(const Shape& shape, ProblemKind kind, double h, int count,
                     const EvpOptions& options) {
    return fd_spectrum(build_grid_domain(shape, h, preferred_centering(kind)), kind, count, options);
}

}  // namespace speclab::fdlab
