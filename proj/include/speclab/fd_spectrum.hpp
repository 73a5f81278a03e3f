// Copyright 2026 The speclab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "speclab/gevp.hpp"
#include "speclab/grid.hpp"
#include "speclab/spectrum.hpp"

namespace speclab::fdlab {

/// Finite-difference spectrum of `kind` on a grid domain.
///   Neumann / Dirichlet: eigenvalues of the Laplacian.
///   Clamped:  Γ_k = √(eigenvalues of the clamped bilaplacian).
///   Buckling: the pencil (bilaplacian, Dirichlet Laplacian).
/// trusted_count is min(count, unknowns / 4). The Neumann ground state is
/// reported as exactly 0: the constant vector is an exact null vector.
Spectrum fd_spectrum(const GridDomain& domain, ProblemKind kind, int count,
                     const EvpOptions& options = {});

/// Grid layout used for each kind: cell-centred for Neumann, vertex for the
/// others. Both are second order on grid-aligned boundaries.
Centering preferred_centering(ProblemKind kind);

/// Builds the preferred grid for `kind` and solves.
Spectrum fd_spectrum(const Shape& shape, ProblemKind kind, double h, int count,
                     const EvpOptions& options = {});

}  // namespace speclab::fdlab
