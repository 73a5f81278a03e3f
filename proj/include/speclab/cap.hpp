// Copyright 2026 The speclab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "speclab/spectrum.hpp"

namespace speclab::fdlab {

/// Geodesic ball {θ < δ} on the unit sphere S², discretized radially.
class CapDomain {
public:
    CapDomain(double aperture, int grid_points);
    double aperture() const { return aperture_; }
    int grid_points() const { return grid_points_; }
    std::string label() const;

private:
    double aperture_;
    int grid_points_;
};

/// Lowest `count` eigenvalues of the angular-order-m radial problem
///   -(sin θ f')' + (m² / sin θ) f = λ sin θ f  on (0, δ)
/// with f(δ) = 0 (Dirichlet) or f'(δ) = 0 (Neumann). Nodes sit at cell
/// centres θ_i = (i - ½)h, so the weight sin θ never vanishes and the face
/// at θ = 0 carries no flux.
std::vector<double> cap_order_eigenvalues(const CapDomain& domain, ProblemKind kind, int m, int count);

/// Merged spectrum over m = 0, 1, 2, ... with multiplicity 2 for m >= 1.
/// Only Dirichlet and Neumann are supported.
Spectrum cap_spectrum(const CapDomain& domain, ProblemKind kind, int count);

}  // namespace speclab::fdlab
