// Copyright 2026 The speclab Authors
// SPDX-License-Identifier: Apache-2.0

#include "speclab/gevp.hpp"

#include <Eigen/SparseCholesky>
#include <algorithm>
#include <cmath>
#include <random>

namespace speclab::fdlab {

namespace {

using SpMat = SparseSymOperator::Matrix;

// ‖Au - θMu‖ / (‖Au‖ + |θ|‖Mu‖). The denominator is floored at
// 1e-6·‖A‖∞‖Mu‖: near θ = 0 (null vectors) the residual is measured
// against the operator norm instead.
double relative_residual(const Eigen::VectorXd& au, const Eigen::VectorXd& mu, double theta,
                         double a_norm) {
    const double denom = std::max(au.norm() + std::abs(theta) * mu.norm(), 1e-6 * a_norm * mu.norm());
    if (denom == 0.0) return 0.0;
    return (au - theta * mu).norm() / denom;
}

double inf_norm(const SpMat& a) {
    Eigen::VectorXd rows = Eigen::VectorXd::Zero(a.rows());
    for (int c = 0; c < a.outerSize(); ++c)
        for (SpMat::InnerIterator it(a, c); it; ++it) rows(it.row()) += std::abs(it.value());
    return rows.size() ? rows.maxCoeff() : 0.0;
}

EvpSolution solve_dense(const SpMat& a, const SpMat* m, int count, const EvpOptions& opt) {
    const Eigen::MatrixXd ad = Eigen::MatrixXd(a);
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors;
    if (m == nullptr) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(ad);
        if (es.info() != Eigen::Success) throw std::runtime_error("dense eigensolver failed");
        values = es.eigenvalues();
        vectors = es.eigenvectors().leftCols(count);
    } else {
        const Eigen::MatrixXd md = Eigen::MatrixXd(*m);
        Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(ad, md);
        if (es.info() != Eigen::Success)
            throw std::runtime_error("dense generalized eigensolver failed (is M positive definite?)");
        values = es.eigenvalues();
        vectors = es.eigenvectors().leftCols(count);
    }
    EvpSolution sol;
    sol.method = "dense";
    sol.tolerance = opt.tol;
    for (int k = 0; k < count; ++k) {
        const Eigen::VectorXd u = vectors.col(k);
        const Eigen::VectorXd au = a * u;
        const Eigen::VectorXd mu = m ? Eigen::VectorXd(*m * u) : u;
        sol.eigenvalues.push_back(values(k));
        sol.residuals.push_back(relative_residual(au, mu, values(k), inf_norm(a)));
    }
    if (opt.keep_vectors) sol.vectors = std::move(vectors);
    for (double r : sol.residuals) {
        if (r > opt.tol) throw ConvergenceError("dense solve residual above tolerance", sol);
    }
    return sol;
}

class ShiftInvertSolver {
public:
    ShiftInvertSolver(const SpMat& a, const SpMat* m, const EvpOptions& opt)
        : a_(a), m_(m), opt_(opt), n_(static_cast<int>(a.rows())), a_norm_(inf_norm(a)) {
        factorize();
    }

    EvpSolution run(int count) {
        const int b = std::clamp(opt_.block_size, 1, n_);
        const int max_cols = std::min(n_, std::max(12 * count + 10 * b, 200));
        Eigen::MatrixXd q(n_, max_cols);
        Eigen::MatrixXd mq(n_, max_cols);
        Eigen::MatrixXd tq(n_, max_cols);
        Eigen::MatrixXd h = Eigen::MatrixXd::Zero(max_cols, max_cols);
        std::mt19937_64 rng(opt_.seed);
        std::normal_distribution<double> normal;

        int cols = 0;
        Eigen::MatrixXd block = Eigen::MatrixXd::NullaryExpr(n_, b, [&] { return normal(rng); });
        EvpSolution best;
        for (;;) {
            const int added = append_block(block, q, mq, cols, max_cols, rng, normal);
            if (added == 0) break;
            // T·Q_new and the new rows/columns of the projected matrix
            // H = (MQ)ᵀ T Q, symmetric because T is M-self-adjoint.
            tq.middleCols(cols, added) = apply_t(q.middleCols(cols, added));
            const int total = cols + added;
            h.block(0, cols, total, added) = mq.leftCols(total).transpose() * tq.middleCols(cols, added);
            h.block(cols, 0, added, cols) = h.block(0, cols, cols, added).transpose();
            cols = total;
            h.block(cols - added, cols - added, added, added) =
                0.5 * (h.block(cols - added, cols - added, added, added) +
                       h.block(cols - added, cols - added, added, added).transpose()).eval();

            if (cols >= std::min(n_, count + b)) {
                best = rayleigh_ritz(q, h, cols, count);
                if (converged(best) || cols >= max_cols || cols == n_) break;
            }
            block = tq.middleCols(cols - added, added);
        }
        if (!converged(best)) {
            throw ConvergenceError("shift-invert Krylov did not reach tolerance with " +
                                       std::to_string(cols) + " basis vectors",
                                   best);
        }
        if (!opt_.keep_vectors) best.vectors.resize(0, 0);
        return best;
    }

private:
    void factorize() {
        double sigma = opt_.shift;
        if (std::isnan(sigma)) {
            sigma = 0.0;
            if (try_factorize(sigma)) {
                sigma_ = sigma;
                return;
            }
            // Singular (e.g. Neumann): shift just below zero, scaled to the operator.
            double scale = 0.0;
            for (int i = 0; i < n_; ++i) {
                const double mii = m_ ? m_->coeff(i, i) : 1.0;
                scale = std::max(scale, a_.coeff(i, i) / mii);
            }
            sigma = -1e-6 * scale;
        }
        if (!try_factorize(sigma)) throw std::runtime_error("A - σM is not positive definite");
        sigma_ = sigma;
    }

    bool try_factorize(double sigma) {
        SpMat shifted = a_;
        if (sigma != 0.0) {
            if (m_) {
                shifted = a_ - sigma * (*m_);
            } else {
                SpMat id(n_, n_);
                id.setIdentity();
                shifted = a_ - sigma * id;
            }
        }
        ldlt_.compute(shifted);
        if (ldlt_.info() != Eigen::Success) return false;
        const auto d = ldlt_.vectorD();
        const double dmax = d.cwiseAbs().maxCoeff();
        return d.minCoeff() > 1e-10 * dmax;
    }

    Eigen::MatrixXd apply_m(const Eigen::MatrixXd& x) const {
        if (m_) return *m_ * x;
        return x;
    }

    Eigen::MatrixXd apply_t(const Eigen::MatrixXd& x) const { return ldlt_.solve(apply_m(x)); }

    // M-orthonormalizes `block` against the basis (two passes of block
    // Gram-Schmidt) and appends it. Columns that vanish are replaced by
    // random ones. Returns the number of columns added.
    int append_block(Eigen::MatrixXd block, Eigen::MatrixXd& q, Eigen::MatrixXd& mq, int cols,
                     int max_cols, std::mt19937_64& rng, std::normal_distribution<double>& normal) {
        const int room = max_cols - cols;
        if (room <= 0) return 0;
        if (block.cols() > room) block.conservativeResize(Eigen::NoChange, room);
        int added = 0;
        for (int c = 0; c < block.cols(); ++c) {
            Eigen::VectorXd v = block.col(c);
            for (int attempt = 0; attempt < 4; ++attempt) {
                const double before = std::sqrt(std::max(0.0, v.dot(apply_m(v).col(0))));
                for (int pass = 0; pass < 2; ++pass) {
                    const int k = cols + added;
                    if (k > 0) v -= q.leftCols(k) * (mq.leftCols(k).transpose() * v);
                }
                const Eigen::VectorXd mv = apply_m(v);
                const double norm = std::sqrt(std::max(0.0, v.dot(mv)));
                if (norm > 1e-8 * before && norm > 0.0) {
                    q.col(cols + added) = v / norm;
                    mq.col(cols + added) = mv / norm;
                    ++added;
                    break;
                }
                v = Eigen::VectorXd::NullaryExpr(n_, [&] { return normal(rng); });
            }
        }
        return added;
    }

    EvpSolution rayleigh_ritz(const Eigen::MatrixXd& q, const Eigen::MatrixXd& h, int cols,
                              int count) const {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h.topLeftCorner(cols, cols));
        // Largest ν = 1/(θ - σ) are the wanted smallest θ.
        const int k = std::min(count, cols);
        EvpSolution sol;
        sol.method = "shift-invert-block-krylov";
        sol.tolerance = opt_.tol;
        Eigen::MatrixXd s(cols, k);
        for (int i = 0; i < k; ++i) s.col(i) = es.eigenvectors().col(cols - 1 - i);
        Eigen::MatrixXd x = q.leftCols(cols) * s;
        const Eigen::MatrixXd ax = a_ * x;
        const Eigen::MatrixXd mx = apply_m(x);
        for (int i = 0; i < k; ++i) {
            // Rayleigh quotient of the Ritz vector is more accurate than σ + 1/ν.
            const double theta = x.col(i).dot(ax.col(i)) / x.col(i).dot(mx.col(i));
            sol.eigenvalues.push_back(theta);
            sol.residuals.push_back(relative_residual(ax.col(i), mx.col(i), theta, a_norm_));
        }
        // Rayleigh quotients can reorder within clusters at the last digit.
        std::vector<int> order(k);
        for (int i = 0; i < k; ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](int l, int r) { return sol.eigenvalues[l] < sol.eigenvalues[r]; });
        EvpSolution sorted;
        sorted.method = sol.method;
        sorted.tolerance = sol.tolerance;
        sorted.vectors.resize(n_, k);
        for (int i = 0; i < k; ++i) {
            sorted.eigenvalues.push_back(sol.eigenvalues[order[i]]);
            sorted.residuals.push_back(sol.residuals[order[i]]);
            sorted.vectors.col(i) = x.col(order[i]);
        }
        return sorted;
    }

    bool converged(const EvpSolution& sol) const {
        if (sol.residuals.empty()) return false;
        return std::all_of(sol.residuals.begin(), sol.residuals.end(),
                           [&](double r) { return r <= opt_.tol; });
    }

    const SpMat& a_;
    const SpMat* m_;
    EvpOptions opt_;
    int n_;
    double a_norm_;
    double sigma_ = 0.0;
    Eigen::SimplicialLDLT<SpMat> ldlt_;
};

}  // namespace

EvpSolution solve_gevp(const SparseSymOperator& a, const SparseSymOperator* mass, int count,
                       const EvpOptions& options) {
    const int n = a.dimension();
    if (count < 1 || count > n) throw std::invalid_argument("requested eigenvalue count out of range");
    if (mass && mass->dimension() != n) throw std::invalid_argument("operator dimensions differ");
    const SpMat* m = mass ? &mass->matrix() : nullptr;
    const bool dense = options.method == EvpMethod::Dense ||
                       (options.method == EvpMethod::Auto && n <= options.dense_limit);
    if (dense) return solve_dense(a.matrix(), m, count, options);
    ShiftInvertSolver solver(a.matrix(), m, options);
    return solver.run(count);
}

}  // namespace speclab::fdlab
