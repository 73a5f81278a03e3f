// Copyright 2026 The speclab Authors
// SPDX-License-Identifier: Apache-2.0

#include "speclab/interval1d.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "speclab/specfun.hpp"

namespace speclab::interval1d {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kRootTol = 1e-14;

double square(double v) { return v * v; }
}  // namespace

IntervalDomain::IntervalDomain(double length) : length_(length) {
    if (!(length > 0.0)) throw std::invalid_argument("interval length must be positive");
}

std::string IntervalDomain::label() const { return "interval(L=" + format_number(length_) + ")"; }

double tan_root(int k) {
    if (k < 1) throw std::invalid_argument("tan_root index must be >= 1");
    const auto f = [](double y) { return std::sin(y) - y * std::cos(y); };
    const auto df = [](double y) { return y * std::sin(y); };
    const auto bracket = specfun::RootBracket::make(f, k * kPi, (k + 0.5) * kPi);
    return specfun::find_root(f, df, bracket, kRootTol);
}

double clamped_beam_root(int k) {
    if (k < 1) throw std::invalid_argument("clamped_beam_root index must be >= 1");
    // cos z - sech z keeps the equation bounded for large z.
    const auto f = [](double z) { return std::cos(z) - 1.0 / std::cosh(z); };
    const auto df = [](double z) { return -std::sin(z) + std::tanh(z) / std::cosh(z); };
    const auto bracket = specfun::RootBracket::make(f, k * kPi, (k + 1) * kPi);
    return specfun::find_root(f, df, bracket, kRootTol);
}

std::vector<BucklingEigenvalue> buckling_eigenvalues(const IntervalDomain& domain, int count) {
    const double L = domain.length();
    std::vector<BucklingEigenvalue> out;
    out.reserve(count);
    for (int k = 1; static_cast<int>(out.size()) < count; ++k) {
        out.push_back({BucklingBranch::Cosine, k, square(2.0 * k * kPi / L)});
        if (static_cast<int>(out.size()) < count)
            out.push_back({BucklingBranch::TanRoot, k, square(2.0 * tan_root(k) / L)});
    }
    return out;
}

Spectrum interval_spectrum(const IntervalDomain& domain, ProblemKind kind, int count) {
    if (count < 1) throw std::invalid_argument("interval_spectrum needs count >= 1");
    const double L = domain.length();
    std::vector<double> values;
    values.reserve(count);
    switch (kind) {
        case ProblemKind::Dirichlet:
            for (int k = 1; k <= count; ++k) values.push_back(square(k * kPi / L));
            break;
        case ProblemKind::Neumann:
            for (int k = 0; k < count; ++k) values.push_back(square(k * kPi / L));
            break;
        case ProblemKind::Clamped:
            for (int k = 1; k <= count; ++k) values.push_back(square(clamped_beam_root(k) / L));
            break;
        case ProblemKind::Buckling:
            for (const auto& e : buckling_eigenvalues(domain, count)) values.push_back(e.value);
            break;
    }
    return make_spectrum(kind, domain.label(), std::move(values), SpectrumSource::analytic());
}

PayneCounterexample payne_check_1d(const IntervalDomain& domain) {
    const auto buckling = interval_spectrum(domain, ProblemKind::Buckling, 2);
    const auto dirichlet = interval_spectrum(domain, ProblemKind::Dirichlet, 3);
    const double b2 = buckling.values[1];
    const double d3 = dirichlet.values[2];
    return {b2, d3, b2 < d3};
}

}  // namespace speclab::interval1d
