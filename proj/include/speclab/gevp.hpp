// Copyright 2026 The speclab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "speclab/operators.hpp"

namespace speclab::fdlab {

enum class EvpMethod { Auto, Dense, ShiftInvert };

struct EvpOptions {
    double tol = 1e-8;
    EvpMethod method = EvpMethod::Auto;
    /// Auto picks the dense solver up to this dimension.
    int dense_limit = 400;
    /// Spectral shift for the sparse solver; NaN chooses 0, or a small
    /// negative shift when A is singular.
    double shift = std::numeric_limits<double>::quiet_NaN();
    std::uint64_t seed = 0x5eed;
    int block_size = 6;
    bool keep_vectors = false;
};

struct EvpSolution {
    std::vector<double> eigenvalues;  // ascending
    std::vector<double> residuals;    // ‖Au - θMu‖ / (‖Au‖ + |θ|‖Mu‖)
    std::string method;
    double tolerance = 0.0;
    Eigen::MatrixXd vectors;          // M-orthonormal columns, if requested
};

class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, EvpSolution partial)
        : std::runtime_error(what), partial_(std::move(partial)) {}
    const EvpSolution& partial() const { return partial_; }

private:
    EvpSolution partial_;
};

/// The K smallest eigenvalues of A u = θ M u, with A symmetric and M
/// symmetric positive definite (`mass == nullptr` means M = I).
///
/// Small problems are reduced densely. Larger ones use a block Krylov
/// method on (A - σM)⁻¹M with full M-orthogonalization and a sparse LDLᵀ
/// factorization; blocks make repeated eigenvalues visible. Results are
/// deterministic for fixed inputs and options.
EvpSolution solve_gevp(const SparseSymOperator& a, const SparseSymOperator* mass, int count,
                       const EvpOptions& options = {});

}  // namespace speclab::fdlab
