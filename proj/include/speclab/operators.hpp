// Copyright 2026 The speclab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/SparseCore>
#include <vector>

#include "speclab/grid.hpp"

namespace speclab::fdlab {

/// Symmetric sparse operator on the unknowns of a grid. Both triangles are
/// stored; assembly writes every off-diagonal pair with one value, so the
/// matrix is symmetric bit for bit.
class SparseSymOperator {
public:
    using Matrix = Eigen::SparseMatrix<double, Eigen::ColMajor, int>;

    struct Entry {
        int row;
        int col;
        double value;
    };

    explicit SparseSymOperator(Matrix matrix);
    static SparseSymOperator identity(int dimension);

    int dimension() const { return static_cast<int>(matrix_.rows()); }
    const Matrix& matrix() const { return matrix_; }

    /// Entries with row <= col.
    std::vector<Entry> upper_entries() const;
    bool is_exactly_symmetric() const;

private:
    Matrix matrix_;
};

enum class LaplaceBoundary { Dirichlet, Neumann };

/// Discrete -Δ, scaled 1/h².
///   Dirichlet: 5-point stencil with zero values outside the mask.
///   Neumann:   finite-volume form; a missing neighbour contributes no flux,
///              so the diagonal is the number of present neighbours and the
///              constant vector is an exact null vector.
/// Single-row masks get the 3-point 1D stencil.
SparseSymOperator assemble_laplacian(const GridDomain& domain, LaplaceBoundary bc);

/// Discrete Δ² with clamped conditions, scaled 1/h⁴: the 13-point stencil
/// (1D: 5-point) with u = 0 outside the mask, and the mirror ghost
/// u(p + 2d) = u(p) whenever p + d is outside, which enforces ∂u/∂ν = 0.
SparseSymOperator assemble_bilaplacian_clamped(const GridDomain& domain);

}  // namespace speclab::fdlab
