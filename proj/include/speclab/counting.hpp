// Copyright 2026 The speclab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "speclab/spectrum.hpp"

namespace speclab::analytics {

/// #{k : e_k <= tau}. Throws OutOfTrustedRangeError when tau lies above the
/// last trusted value.
std::int64_t count_leq(const Spectrum& spectrum, double tau);

struct CountingFunction {
    std::string domain;
    ProblemKind kind = ProblemKind::Dirichlet;
    std::vector<double> taus;
    std::vector<std::int64_t> counts;
};

CountingFunction counting_function(const Spectrum& spectrum, std::vector<double> taus);

/// ω_n, the volume of the unit ball in R^n.
double unit_ball_volume(int n);

/// (2π)^{-n} ω_n vol(Ω).
double weyl_leading_coefficient(int n, double volume);

/// ¼ (2π)^{1-n} ω_{n-1} vol(∂Ω), the magnitude of the boundary term.
double weyl_boundary_coefficient(int n, double boundary);

struct WeylFit {
    int dimension = 0;
    double volume = 0.0;
    double boundary = 0.0;
    double tau_lo = 0.0;
    double tau_hi = 0.0;
    int points = 0;
    double fitted_leading = 0.0;
    double theoretical_leading = 0.0;
    double ratio = 0.0;  // fitted / theoretical
    std::optional<double> fitted_second;
    std::optional<double> theoretical_second;  // magnitude; sign is + Neumann, - Dirichlet
};

/// Least squares N(τ) ≈ c τ^{n/2} over the spectrum values in [tau_lo, tau_hi].
/// N is sampled at each distinct value using the midpoint of its jump.
/// Throws InsufficientDataError for fewer than 10 sample points.
WeylFit weyl_fit(const Spectrum& spectrum, int n, double volume, double tau_lo, double tau_hi);

/// Least squares N(τ) ≈ c₀ τ^{n/2} + c₁ τ^{(n-1)/2}. Analytic spectra only:
/// discretization noise swamps the boundary term.
WeylFit weyl_two_term_fit(const Spectrum& spectrum, int n, double volume, double boundary,
                          double tau_lo, double tau_hi);

/// N(τ) / ((2π)^{-n} ω_n vol τ^{n/2}) at a single τ.
double weyl_ratio(const Spectrum& spectrum, int n, double volume, double tau);

struct HeatTracePoint {
    double t = 0.0;
    double scaled_trace = 0.0;  // (4πt)^{n/2} Σ e^{-t e_k}
    double predicted = 0.0;     // vol(Ω) ± ¼ √(4πt) vol(∂Ω)
    double relative_deviation = 0.0;
    double tail_estimate = 0.0;
    /// False once t is so large that the lowest modes dominate the sum.
    bool asymptotic_regime = true;
};

struct HeatTraceReport {
    std::string domain;
    ProblemKind kind = ProblemKind::Dirichlet;
    int dimension = 0;
    double volume = 0.0;
    double boundary = 0.0;
    std::vector<HeatTracePoint> points;
};

inline constexpr double kHeatTailLimit = 1e-12;

/// Estimated Σ_{e_k > last} e^{-t e_k}: twice the Weyl-density integral.
double heat_trace_tail(int n, double volume, double t, double last);

/// A spectrum cutoff whose tail estimate at time t is well below
/// kHeatTailLimit.
double heat_trace_cutoff(int n, double volume, double t);

/// Compares the scaled heat trace with its two-term small-t expansion,
/// + boundary term for Neumann and - for Dirichlet. Throws TruncationError
/// if the estimated tail beyond the last value reaches kHeatTailLimit.
HeatTraceReport heat_trace_check(const Spectrum& spectrum, int n, double volume, double boundary,
                                 const std::vector<double>& ts);

}  // namespace speclab::analytics
