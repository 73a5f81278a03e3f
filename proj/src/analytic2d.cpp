// Copyright 2026 The speclab Authors
// SPDX-License-Identifier: Apache-2.0

#include "speclab/analytic2d.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "speclab/interval1d.hpp"
#include "speclab/specfun.hpp"

namespace speclab::analytic2d {

namespace {

constexpr double kPi = std::numbers::pi;

double square(double v) { return v * v; }

// Largest m >= m0 with value(m) <= tau, or m0 - 1 if none. `value` must be
// increasing in m; `guess` is a floating-point estimate that is corrected
// against the exact comparison.
std::int64_t last_index_leq(const std::function<double(std::int64_t)>& value, double tau,
                            std::int64_t m0, double guess) {
    std::int64_t m = std::max<std::int64_t>(m0 - 1, static_cast<std::int64_t>(std::floor(guess)));
    while (value(m + 1) <= tau) ++m;
    while (m >= m0 && value(m) > tau) --m;
    return m;
}

// Appends (value, multiplicity) pairs for one angular order.
void append_modes(std::vector<double>& out, const std::vector<double>& roots, double radius,
                  int multiplicity) {
    for (double r : roots) {
        const double v = square(r / radius);
        for (int i = 0; i < multiplicity; ++i) out.push_back(v);
    }
}

}  // namespace

RectDomain::RectDomain(double a, double b) : a_(a), b_(b) {
    if (!(a > 0.0 && b > 0.0)) throw std::invalid_argument("rectangle sides must be positive");
}

std::string RectDomain::label() const {
    return "rect(a=" + format_number(a_) + ",b=" + format_number(b_) + ")";
}

DiskDomain::DiskDomain(double radius) : radius_(radius) {
    if (!(radius > 0.0)) throw std::invalid_argument("disk radius must be positive");
}

std::string DiskDomain::label() const { return "disk(R=" + format_number(radius_) + ")"; }

double rect_mode_value(const RectDomain& domain, std::int64_t l, std::int64_t m) {
    const double la = static_cast<double>(l) / domain.a();
    const double mb = static_cast<double>(m) / domain.b();
    return kPi * kPi * (la * la + mb * mb);
}

LatticeCount rect_lattice_count(const RectDomain& domain, ProblemKind kind, double tau) {
    if (!(tau >= 0.0)) throw std::invalid_argument("tau must be nonnegative");
    if (kind != ProblemKind::Dirichlet && kind != ProblemKind::Neumann)
        throw std::invalid_argument("rect_lattice_count supports Dirichlet and Neumann only");
    const std::int64_t start = kind == ProblemKind::Dirichlet ? 1 : 0;
    std::int64_t count = 0;
    for (std::int64_t l = start; rect_mode_value(domain, l, start) <= tau; ++l) {
        const auto value = [&](std::int64_t m) { return rect_mode_value(domain, l, m); };
        const double rest = tau / (kPi * kPi) - square(l / domain.a());
        const double guess = rest > 0.0 ? domain.b() * std::sqrt(rest) : 0.0;
        count += last_index_leq(value, tau, start, guess) - start + 1;
    }
    LatticeCount out;
    out.tau = tau;
    out.count = count;
    out.weyl_term = tau * domain.area() / (4.0 * kPi);
    out.remainder = static_cast<double>(count) - out.weyl_term;
    return out;
}

Spectrum rect_spectrum(const RectDomain& domain, ProblemKind kind, int count) {
    if (count < 1) throw std::invalid_argument("rect_spectrum needs count >= 1");
    if (kind != ProblemKind::Dirichlet && kind != ProblemKind::Neumann)
        throw std::invalid_argument("rect_spectrum supports Dirichlet and Neumann only");
    const std::int64_t start = kind == ProblemKind::Dirichlet ? 1 : 0;
    // Grow a threshold until it holds at least `count` modes, then list them.
    double tau = rect_mode_value(domain, start, start) + 1.0;
    while (rect_lattice_count(domain, kind, tau).count < count) tau *= 2.0;
    std::vector<double> values;
    for (std::int64_t l = start; rect_mode_value(domain, l, start) <= tau; ++l) {
        for (std::int64_t m = start; rect_mode_value(domain, l, m) <= tau; ++m) {
            values.push_back(rect_mode_value(domain, l, m));
        }
    }
    std::sort(values.begin(), values.end());
    const std::size_t trusted = truncate_complete(values, static_cast<std::size_t>(count));
    return make_spectrum(kind, domain.label(), std::move(values), SpectrumSource::analytic(), trusted);
}

double disk_clamped_determinant(int m, double k) {
    using specfun::bessel_i;
    using specfun::bessel_j;
    return bessel_j(m, k) * bessel_i(m + 1, k) + bessel_i(m, k) * bessel_j(m + 1, k);
}

std::vector<double> disk_clamped_roots_below(int m, double k_max) {
    const auto jm = specfun::bessel_j_zeros_below(m, k_max);
    if (jm.empty()) return {};
    const auto jm1 = specfun::bessel_j_zeros(m + 1, static_cast<int>(jm.size()));
    const auto f = [m](double k) { return disk_clamped_determinant(m, k); };
    std::vector<double> roots;
    for (std::size_t l = 0; l < jm.size(); ++l) {
        const double r = specfun::find_root(f, specfun::RootBracket::make(f, jm[l], jm1[l]), 1e-13);
        if (r < k_max) roots.push_back(r);
    }
    return roots;
}

Spectrum disk_spectrum(const DiskDomain& domain, ProblemKind kind, int count) {
    if (count < 1) throw std::invalid_argument("disk_spectrum needs count >= 1");
    const double R = domain.radius();
    // All roots below a cutoff are captured because every family is
    // increasing in both the angular and the radial index. Start from the
    // Weyl estimate N ~ k²R²/4 and widen until `count` modes are inside.
    double k_max = std::sqrt(4.0 * count) + 6.0;
    std::vector<double> values;
    for (;;) {
        values.clear();
        if (kind == ProblemKind::Neumann) values.push_back(0.0);
        for (int m = 0;; ++m) {
            const int mult = m == 0 ? 1 : 2;
            std::vector<double> roots;
            switch (kind) {
                case ProblemKind::Dirichlet: roots = specfun::bessel_j_zeros_below(m, k_max); break;
                case ProblemKind::Neumann: roots = specfun::bessel_j_prime_zeros_below(m, k_max); break;
                case ProblemKind::Clamped: roots = disk_clamped_roots_below(m, k_max); break;
                case ProblemKind::Buckling: roots = specfun::bessel_j_zeros_below(m + 1, k_max); break;
            }
            if (roots.empty()) break;
            // Roots are in units of k·R = 1; rescale by the radius.
            append_modes(values, roots, R, mult);
        }
        if (static_cast<int>(values.size()) >= count) break;
        k_max *= 1.5;
    }
    std::sort(values.begin(), values.end());
    const std::size_t trusted = truncate_complete(values, static_cast<std::size_t>(count));
    return make_spectrum(kind, domain.label(), std::move(values), SpectrumSource::analytic(), trusted);
}

BucklingFamilyCounts candidate_buckling_family_count(const RectDomain& domain, double tau) {
    if (!(tau >= 0.0)) throw std::invalid_argument("tau must be nonnegative");
    const double a = domain.a();
    const double b = domain.b();
    const auto cosine = [](double L, std::int64_t k) { return square(2.0 * kPi * k / L); };

    // Λ_{2,k}(L) lies above (2kπ/L)², so tan-root lists are only needed up to τ.
    const auto tan_family = [&](double L) {
        std::vector<double> out;
        for (int k = 1; cosine(L, k) <= tau; ++k) {
            const double v = square(2.0 * interval1d::tan_root(k) / L);
            if (v > tau) break;
            out.push_back(v);
        }
        return out;
    };
    const auto cos_family = [&](double L) {
        std::vector<double> out;
        for (int k = 1; cosine(L, k) <= tau; ++k) out.push_back(cosine(L, k));
        return out;
    };
    const std::array<std::vector<double>, 2> x_lists{cos_family(a), tan_family(a)};
    const std::array<std::vector<double>, 2> y_lists{cos_family(b), tan_family(b)};

    BucklingFamilyCounts out;
    out.tau = tau;
    // Family index: 1 = (cos, cos), 2 = (cos, tan), 3 = (tan, cos), 4 = (tan, tan).
    for (int f = 0; f < 4; ++f) {
        const auto& xs = x_lists[f / 2];
        const auto& ys = y_lists[f % 2];
        std::int64_t count = 0;
        for (double x : xs) {
            count += std::upper_bound(ys.begin(), ys.end(), tau - x) - ys.begin();
        }
        auto& lc = out.families[f];
        lc.tau = tau;
        lc.count = count;
        lc.weyl_term = tau * domain.area() / (16.0 * kPi);
        lc.remainder = static_cast<double>(count) - lc.weyl_term;
        out.total += count;
    }
    return out;
}

double buckling_product_residual(const RectDomain& domain, int l, int m, int grid) {
    if (l < 1 || m < 1) throw std::invalid_argument("mode indices must be >= 1");
    if (grid < 2) throw std::invalid_argument("grid must be >= 2");
    const double alpha = 2.0 * l * kPi / domain.a();
    const double beta = 2.0 * m * kPi / domain.b();
    const double a2 = alpha * alpha;
    const double b2 = beta * beta;
    const double lambda = a2 + b2;
    double max_res = 0.0;
    double max_u = 0.0;
    for (int i = 1; i < grid; ++i) {
        const double cx = std::cos(alpha * domain.a() * i / grid);
        const double X = 1.0 - cx;
        const double X2 = a2 * cx;         // X''
        const double X4 = -a2 * a2 * cx;   // X''''
        for (int j = 1; j < grid; ++j) {
            const double cy = std::cos(beta * domain.b() * j / grid);
            const double Y = 1.0 - cy;
            const double Y2 = b2 * cy;
            const double Y4 = -b2 * b2 * cy;
            const double lap = X2 * Y + X * Y2;
            const double bilap = X4 * Y + 2.0 * X2 * Y2 + X * Y4;
            max_res = std::max(max_res, std::abs(bilap + lambda * lap));
            max_u = std::max(max_u, std::abs(X * Y));
        }
    }
    return max_res / max_u;
}

double buckling_factor_residual_1d(double length, int l, int grid) {
    if (!(length > 0.0)) throw std::invalid_argument("length must be positive");
    if (l < 1) throw std::invalid_argument("mode index must be >= 1");
    if (grid < 2) throw std::invalid_argument("grid must be >= 2");
    const double alpha = 2.0 * l * kPi / length;
    const double a2 = alpha * alpha;
    double max_res = 0.0;
    double max_u = 0.0;
    for (int i = 1; i < grid; ++i) {
        const double c = std::cos(alpha * length * i / grid);
        max_res = std::max(max_res, std::abs(-a2 * a2 * c + a2 * (a2 * c)));
        max_u = std::max(max_u, std::abs(1.0 - c));
    }
    return max_res / max_u;
}

}  // namespace speclab::analytic2d
