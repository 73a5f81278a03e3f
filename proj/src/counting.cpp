// Copyright 2026 The speclab Authors
// SPDX-License-Identifier: Apache-2.0

#include "speclab/counting.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "speclab/errors.hpp"

namespace speclab::analytics {

namespace {

constexpr double kPi = std::numbers::pi;

struct Samples {
    std::vector<double> tau;
    std::vector<double> count;
};

// Distinct values inside the window, with N taken halfway up each jump.
Samples sample_counting(const Spectrum& s, double lo, double hi) {
    if (!(lo < hi)) throw std::invalid_argument("empty tau window");
    if (hi > s.trusted_limit()) {
        throw OutOfTrustedRangeError("tau window end " + format_number(hi) +
                                     " exceeds trusted range " + format_number(s.trusted_limit()));
    }
    Samples out;
    const auto& v = s.values;
    std::size_t i = 0;
    while (i < v.size()) {
        std::size_t j = i;
        while (j < v.size() && v[j] == v[i]) ++j;
        if (v[i] >= lo && v[i] <= hi && v[i] > 0.0) {
            out.tau.push_back(v[i]);
            out.count.push_back(static_cast<double>(i) + 0.5 * static_cast<double>(j - i));
        }
        i = j;
    }
    if (out.tau.size() < 10) {
        throw InsufficientDataError("Weyl fit needs at least 10 distinct values in the window, found " +
                                    std::to_string(out.tau.size()));
    }
    return out;
}

}  // namespace

std::int64_t count_leq(const Spectrum& spectrum, double tau) {
    if (spectrum.trusted_count == 0 || tau > spectrum.trusted_limit()) {
        throw OutOfTrustedRangeError("tau = " + format_number(tau) + " beyond trusted range of " +
                                     std::string(to_string(spectrum.kind)) + " spectrum on " +
                                     spectrum.domain);
    }
    const auto end = spectrum.values.begin() + static_cast<std::ptrdiff_t>(spectrum.trusted_count);
    return std::upper_bound(spectrum.values.begin(), end, tau) - spectrum.values.begin();
}

CountingFunction counting_function(const Spectrum& spectrum, std::vector<double> taus) {
    CountingFunction cf;
    cf.domain = spectrum.domain;
    cf.kind = spectrum.kind;
    cf.taus = std::move(taus);
    cf.counts.reserve(cf.taus.size());
    for (double t : cf.taus) cf.counts.push_back(count_leq(spectrum, t));
    return cf;
}

double unit_ball_volume(int n) {
    if (n < 0) throw std::invalid_argument("dimension must be nonnegative");
    return std::pow(kPi, 0.5 * n) / std::tgamma(0.5 * n + 1.0);
}

double weyl_leading_coefficient(int n, double volume) {
    return unit_ball_volume(n) * volume / std::pow(2.0 * kPi, n);
}

double weyl_boundary_coefficient(int n, double boundary) {
    return 0.25 * std::pow(2.0 * kPi, 1 - n) * unit_ball_volume(n - 1) * boundary;
}

WeylFit weyl_fit(const Spectrum& spectrum, int n, double volume, double tau_lo, double tau_hi) {
    if (n < 1) throw std::invalid_argument("dimension must be >= 1");
    const auto s = sample_counting(spectrum, tau_lo, tau_hi);
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < s.tau.size(); ++i) {
        const double basis = std::pow(s.tau[i], 0.5 * n);
        num += basis * s.count[i];
        den += basis * basis;
    }
    WeylFit fit;
    fit.dimension = n;
    fit.volume = volume;
    fit.tau_lo = tau_lo;
    fit.tau_hi = tau_hi;
    fit.points = static_cast<int>(s.tau.size());
    fit.fitted_leading = num / den;
    fit.theoretical_leading = weyl_leading_coefficient(n, volume);
    fit.ratio = fit.fitted_leading / fit.theoretical_leading;
    return fit;
}

WeylFit weyl_two_term_fit(const Spectrum& spectrum, int n, double volume, double boundary,
                          double tau_lo, double tau_hi) {
    if (n < 1) throw std::invalid_argument("dimension must be >= 1");
    if (spectrum.source.type != SpectrumSource::Type::Analytic)
        throw std::invalid_argument("two-term Weyl fit requires an analytic spectrum");
    const auto s = sample_counting(spectrum, tau_lo, tau_hi);
    const int rows = static_cast<int>(s.tau.size());
    // Columns scaled by their value at tau_hi to keep the normal equations
    // well conditioned.
    const double s0 = std::pow(tau_hi, 0.5 * n);
    const double s1 = std::pow(tau_hi, 0.5 * (n - 1));
    Eigen::MatrixXd design(rows, 2);
    Eigen::VectorXd rhs(rows);
    for (int i = 0; i < rows; ++i) {
        design(i, 0) = std::pow(s.tau[i], 0.5 * n) / s0;
        design(i, 1) = std::pow(s.tau[i], 0.5 * (n - 1)) / s1;
        rhs(i) = s.count[i];
    }
    const Eigen::Vector2d c = design.colPivHouseholderQr().solve(rhs);
    WeylFit fit;
    fit.dimension = n;
    fit.volume = volume;
    fit.boundary = boundary;
    fit.tau_lo = tau_lo;
    fit.tau_hi = tau_hi;
    fit.points = rows;
    fit.fitted_leading = c(0) / s0;
    fit.theoretical_leading = weyl_leading_coefficient(n, volume);
    fit.ratio = fit.fitted_leading / fit.theoretical_leading;
    fit.fitted_second = c(1) / s1;
    fit.theoretical_second = weyl_boundary_coefficient(n, boundary);
    return fit;
}

double weyl_ratio(const Spectrum& spectrum, int n, double volume, double tau) {
    const double expected = weyl_leading_coefficient(n, volume) * std::pow(tau, 0.5 * n);
    return static_cast<double>(count_leq(spectrum, tau)) / expected;
}

double heat_trace_tail(int n, double volume, double t, double last) {
    // ∫_E^∞ e^{-tτ} dN with the Weyl density (n/2) c τ^{n/2-1}, doubled.
    return 2.0 * std::exp(-t * last) * 0.5 * n * weyl_leading_coefficient(n, volume) *
           std::pow(last, 0.5 * n - 1.0) / t;
}

double heat_trace_cutoff(int n, double volume, double t) {
    double e = 1.0 / t;
    while (heat_trace_tail(n, volume, t, e) >= 1e-3 * kHeatTailLimit) e += 1.0 / t;
    return e;
}

HeatTraceReport heat_trace_check(const Spectrum& spectrum, int n, double volume, double boundary,
                                 const std::vector<double>& ts) {
    if (spectrum.kind != ProblemKind::Dirichlet && spectrum.kind != ProblemKind::Neumann)
        throw std::invalid_argument("heat trace check supports Dirichlet and Neumann spectra");
    if (spectrum.values.empty()) throw std::invalid_argument("empty spectrum");
    const double sign = spectrum.kind == ProblemKind::Neumann ? 1.0 : -1.0;
    const auto end = spectrum.values.begin() + static_cast<std::ptrdiff_t>(spectrum.trusted_count);
    const double last = spectrum.values[spectrum.trusted_count - 1];
    const auto first_positive = std::upper_bound(spectrum.values.begin(), end, 0.0);

    HeatTraceReport report;
    report.domain = spectrum.domain;
    report.kind = spectrum.kind;
    report.dimension = n;
    report.volume = volume;
    report.boundary = boundary;
    for (double t : ts) {
        if (!(t > 0.0)) throw std::invalid_argument("heat trace times must be positive");
        const double tail = heat_trace_tail(n, volume, t, last);
        if (!(tail < kHeatTailLimit)) {
            throw TruncationError("heat trace at t = " + format_number(t) + " needs values beyond " +
                                  format_number(last) + " (tail ~ " + format_number(tail) + ")");
        }
        // Sum from the top so that small terms are not lost.
        double sum = 0.0;
        for (auto it = end; it != spectrum.values.begin();) {
            --it;
            sum += std::exp(-t * *it);
        }
        HeatTracePoint p;
        p.t = t;
        p.scaled_trace = std::pow(4.0 * kPi * t, 0.5 * n) * sum;
        p.predicted = volume + sign * 0.25 * std::sqrt(4.0 * kPi * t) * boundary;
        p.relative_deviation = (p.scaled_trace - p.predicted) / std::abs(p.predicted);
        p.tail_estimate = tail;
        p.asymptotic_regime = first_positive == end || t * *first_positive < 1.0;
        report.points.push_back(p);
    }
    return report;
}

}  // namespace speclab::analytics
