// Copyright 2026 The speclab Authors
// SPDX-License-Identifier: Apache-2.0

#include "speclab/operators.hpp"

#include <stdexcept>

namespace speclab::fdlab {

namespace {

using Triplet = Eigen::Triplet<double, int>;

struct Offset {
    int di;
    int dj;
};

constexpr Offset kAxes2d[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
constexpr Offset kAxes1d[] = {{1, 0}, {-1, 0}};
constexpr Offset kDiagonals[] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};

SparseSymOperator::Matrix from_triplets(int n, const std::vector<Triplet>& triplets) {
    SparseSymOperator::Matrix m(n, n);
    m.setFromTriplets(triplets.begin(), triplets.end());
    m.makeCompressed();
    return m;
}

}  // namespace

SparseSymOperator::SparseSymOperator(Matrix matrix) : matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols()) throw std::invalid_argument("operator must be square");
    matrix_.makeCompressed();
}

SparseSymOperator SparseSymOperator::identity(int dimension) {
    Matrix m(dimension, dimension);
    m.setIdentity();
    return SparseSymOperator(std::move(m));
}

std::vector<SparseSymOperator::Entry> SparseSymOperator::upper_entries() const {
    std::vector<Entry> out;
    for (int c = 0; c < matrix_.outerSize(); ++c)
        for (Matrix::InnerIterator it(matrix_, c); it; ++it)
            if (it.row() <= it.col()) out.push_back({static_cast<int>(it.row()), static_cast<int>(it.col()), it.value()});
    return out;
}

bool SparseSymOperator::is_exactly_symmetric() const {
    const Matrix t = matrix_.transpose();
    if (t.nonZeros() != matrix_.nonZeros()) return false;
    for (int c = 0; c < matrix_.outerSize(); ++c) {
        Matrix::InnerIterator a(matrix_, c);
        Matrix::InnerIterator b(t, c);
        for (; a && b; ++a, ++b) {
            if (a.row() != b.row() || a.value() != b.value()) return false;
        }
        if (a || b) return false;
    }
    return true;
}

SparseSymOperator assemble_laplacian(const GridDomain& domain, LaplaceBoundary bc) {
    const double s = 1.0 / (domain.h() * domain.h());
    const bool one_d = domain.is_one_dimensional();
    const auto* axes = one_d ? kAxes1d : kAxes2d;
    const int n_axes = one_d ? 2 : 4;
    std::vector<Triplet> t;
    t.reserve(static_cast<std::size_t>(domain.unknowns()) * 5);
    for (int j = 0; j < domain.ny(); ++j) {
        for (int i = 0; i < domain.nx(); ++i) {
            const int p = domain.index(i, j);
            if (p < 0) continue;
            double diag = 0.0;
            for (int a = 0; a < n_axes; ++a) {
                const int q = domain.index(i + axes[a].di, j + axes[a].dj);
                if (q >= 0) {
                    diag += 1.0;
                    t.emplace_back(p, q, -s);
                } else if (bc == LaplaceBoundary::Dirichlet) {
                    diag += 1.0;
                }
            }
            t.emplace_back(p, p, diag * s);
        }
    }
    return SparseSymOperator(from_triplets(domain.unknowns(), t));
}

SparseSymOperator assemble_bilaplacian_clamped(const GridDomain& domain) {
    const double h2 = domain.h() * domain.h();
    const double s = 1.0 / (h2 * h2);
    const bool one_d = domain.is_one_dimensional();
    const auto* axes = one_d ? kAxes1d : kAxes2d;
    const int n_axes = one_d ? 2 : 4;
    const double center = one_d ? 6.0 : 20.0;
    const double near = one_d ? -4.0 : -8.0;
    std::vector<Triplet> t;
    t.reserve(static_cast<std::size_t>(domain.unknowns()) * 13);
    for (int j = 0; j < domain.ny(); ++j) {
        for (int i = 0; i < domain.nx(); ++i) {
            const int p = domain.index(i, j);
            if (p < 0) continue;
            double diag = center;
            for (int a = 0; a < n_axes; ++a) {
                const int q1 = domain.index(i + axes[a].di, j + axes[a].dj);
                if (q1 < 0) {
                    diag += 1.0;  // ghost at p + 2d mirrors u(p)
                    continue;
                }
                t.emplace_back(p, q1, near * s);
                const int q2 = domain.index(i + 2 * axes[a].di, j + 2 * axes[a].dj);
                if (q2 >= 0) t.emplace_back(p, q2, s);
            }
            if (!one_d) {
                for (const auto& d : kDiagonals) {
                    const int q = domain.index(i + d.di, j + d.dj);
                    if (q >= 0) t.emplace_back(p, q, 2.0 * s);
                }
            }
            t.emplace_back(p, p, diag * s);
        }
    }
    return SparseSymOperator(from_triplets(domain.unknowns(), t));
}

}  // namespace speclab::fdlab
