// Copyright 2026 The speclab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "speclab/spectrum.hpp"

namespace speclab::analytic2d {

/// Q = [0, a] x [0, b].
class RectDomain {
public:
    RectDomain(double a, double b);
    double a() const { return a_; }
    double b() const { return b_; }
    double area() const { return a_ * b_; }
    double perimeter() const { return 2.0 * (a_ + b_); }
    std::string label() const;

private:
    double a_;
    double b_;
};

class DiskDomain {
public:
    explicit DiskDomain(double radius);
    double radius() const { return radius_; }
    std::string label() const;

private:
    double radius_;
};

/// Separable rectangle eigenvalue π²(l²/a² + m²/b²). Every routine in this
/// module evaluates it through this one expression so that counts and
/// spectra agree bit-for-bit.
double rect_mode_value(const RectDomain& domain, std::int64_t l, std::int64_t m);

/// Dirichlet (l, m >= 1) or Neumann (l, m >= 0) spectrum, K smallest values
/// with multiplicity.
Spectrum rect_spectrum(const RectDomain& domain, ProblemKind kind, int count);

/// Disk spectra. Dirichlet (j_m^(l)/R)², Neumann (j'_m^(l)/R)² plus 0,
/// Clamped k² with J_m(kR)I_{m+1}(kR) + I_m(kR)J_{m+1}(kR) = 0,
/// Buckling (j_{m+1}^(l)/R)². Orders m >= 1 are doubly degenerate.
Spectrum disk_spectrum(const DiskDomain& domain, ProblemKind kind, int count);

/// J_m(k)I_{m+1}(k) + I_m(k)J_{m+1}(k); its positive roots k give the clamped
/// unit-disk values Γ = k².
double disk_clamped_determinant(int m, double k);

/// Positive roots of disk_clamped_determinant(m, ·) below k_max. The l-th
/// root lies between j_m^(l) and j_{m+1}^(l).
std::vector<double> disk_clamped_roots_below(int m, double k_max);

struct LatticeCount {
    double tau = 0.0;
    std::int64_t count = 0;
    double weyl_term = 0.0;   // τ·ab/(4π)
    double remainder = 0.0;   // count - weyl_term
};

/// Exact number of rectangle eigenvalues <= tau, by enumerating lattice
/// points in the quarter ellipse l²/a² + m²/b² <= τ/π².
LatticeCount rect_lattice_count(const RectDomain& domain, ProblemKind kind, double tau);

/// The four product families proposed for rectangle buckling:
///   1: (2πl/a)² + (2πm/b)²       2: (2πl/a)² + Λ_{2,m}(b)
///   3: Λ_{2,l}(a) + (2πm/b)²     4: Λ_{2,l}(a) + Λ_{2,m}(b)
/// with l, m >= 1 and Λ_{2,k}(L) the tan-root family on [0, L]. These are
/// candidate-family counts, not the rectangle's actual buckling spectrum.
struct BucklingFamilyCounts {
    double tau = 0.0;
    std::array<LatticeCount, 4> families{};
    std::int64_t total = 0;
};

BucklingFamilyCounts candidate_buckling_family_count(const RectDomain& domain, double tau);

/// max |Δ²u + ΛΔu| / max |u| over the interior points of a (grid+1)² lattice,
/// for u = (1 - cos αx)(1 - cos βy), α = 2lπ/a, β = 2mπ/b, Λ = α² + β².
/// Derivatives are exact.
double buckling_product_residual(const RectDomain& domain, int l, int m, int grid);

/// Same measure for the one-dimensional factor 1 - cos αx under
/// u'''' + Λu'' with Λ = α², on [0, L].
double buckling_factor_residual_1d(double length, int l, int grid);

}  // namespace speclab::analytic2d
