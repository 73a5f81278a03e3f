// Copyright 2026 The speclab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "speclab/spectrum.hpp"

namespace speclab::interval1d {

/// The interval [0, L].
class IntervalDomain {
public:
    explicit IntervalDomain(double length);
    double length() const { return length_; }
    std::string label() const;

private:
    double length_;
};

/// Buckling eigenvalues on [0, L] come in two families: the cosine modes
/// 1 - cos(2kπx/L) with value (2kπ/L)², and the roots of tan y = y with
/// y = √Λ·L/2.
enum class BucklingBranch { Cosine, TanRoot };

struct BucklingEigenvalue {
    BucklingBranch branch;
    int index;  // k >= 1 within its branch
    double value;
};

/// k-th positive root of tan y = y, located in (kπ, kπ + π/2). Solved as
/// sin y - y cos y = 0, which has no poles.
double tan_root(int k);

/// k-th positive root κL of cos(κL)·cosh(κL) = 1, located in (kπ, (k+1)π).
double clamped_beam_root(int k);

/// Smallest `count` buckling eigenvalues, merged from both branches in
/// ascending order (they alternate Cosine, TanRoot, Cosine, ...).
std::vector<BucklingEigenvalue> buckling_eigenvalues(const IntervalDomain& domain, int count);

/// The K smallest eigenvalues of `kind` on [0, L]. Clamped values are
/// reported as Γ_k = κ_k².
Spectrum interval_spectrum(const IntervalDomain& domain, ProblemKind kind, int count);

/// Λ_2 against λ_3 on [0, L]: the one-dimensional counterexample to
/// λ_{k+1} <= Λ_k.
struct PayneCounterexample {
    double buckling_2;
    double dirichlet_3;
    bool buckling_below_dirichlet;  // Λ_2 < λ_3
};

PayneCounterexample payne_check_1d(const IntervalDomain& domain);

}  // namespace speclab::interval1d
