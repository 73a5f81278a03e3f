// Copyright 2026 The speclab Authors
// SPDX-License-Identifier: Apache-2.0

#include "speclab/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "speclab/errors.hpp"

namespace speclab::specfun {

namespace {

constexpr double kPi = std::numbers::pi;

// The series is summed in long double. Cancellation below the switchover
// costs at most I_0(17) ~ 3e6 times the extended epsilon.
constexpr double kSeriesLimit = 17.0;

// Internal zero tolerance, tighter than the public contract.
constexpr double kZeroTolerance = 1e-13;

int sign_of(double v) { return (v > 0) - (v < 0); }

void check_order(int m, double x) {
    if (m < 0) throw std::invalid_argument("Bessel order must be nonnegative");
    if (!(x >= 0.0)) throw std::invalid_argument("Bessel argument must be nonnegative");
}

// (x/2)^m / m! evaluated by repeated multiplication.
long double leading_term(int m, long double half_x) {
    long double t = 1.0L;
    for (int k = 1; k <= m; ++k) t *= half_x / k;
    return t;
}

long double modified_series(int m, double x) {
    const long double half_x = 0.5L * x;
    const long double q = half_x * half_x;
    long double term = leading_term(m, half_x);
    long double sum = term;
    for (int k = 0; k < 100000; ++k) {
        term *= q / ((k + 1.0L) * (m + k + 1.0L));
        sum += term;
        if (term <= std::numeric_limits<long double>::epsilon() * sum) break;
    }
    return sum;
}

// Hankel expansion J_nu(x) = sqrt(2/(pi x)) (P cos chi - Q sin chi), nu in {0, 1}.
double hankel_j(int nu, double x) {
    const double mu = 4.0 * nu * nu;
    double p = 1.0;
    double q = 0.0;
    double term = 1.0;
    double last = std::numeric_limits<double>::infinity();
    for (int k = 1; k < 200; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= (mu - odd * odd) / (k * 8.0 * x);
        const double mag = std::abs(term);
        if (mag >= last) break;  // asymptotic series started diverging
        last = mag;
        // a_k / x^k alternates between Q (odd k) and P (even k), with signs
        // (-1)^{k/2} for P and (-1)^{(k-1)/2} for Q.
        if (k % 2 == 1) {
            q += ((k / 2) % 2 == 0 ? term : -term);
        } else {
            p += ((k / 2) % 2 == 0 ? term : -term);
        }
        if (mag < 1e-17) break;
    }
    const double chi = x - (0.5 * nu + 0.25) * kPi;
    return std::sqrt(2.0 / (kPi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

}  // namespace

RootBracket RootBracket::make(const ScalarFunction& f, double lo, double hi) {
    if (!(lo < hi)) throw InvalidBracketError("root bracket requires lo < hi");
    const int s_lo = sign_of(f(lo));
    const int s_hi = sign_of(f(hi));
    if (s_lo == s_hi) {
        throw InvalidBracketError("no sign change on [" + std::to_string(lo) + ", " +
                                  std::to_string(hi) + "]");
    }
    return {lo, hi, s_lo, s_hi};
}

double find_root(const ScalarFunction& f, const RootBracket& bracket, double tol) {
    if (bracket.lo_sign() == 0) return bracket.lo();
    if (bracket.hi_sign() == 0) return bracket.hi();
    double lo = bracket.lo();
    double hi = bracket.hi();
    const int s_lo = bracket.lo_sign();
    while (hi - lo > tol) {
        const double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi) break;  // bracket at machine resolution
        const int s = sign_of(f(mid));
        if (s == 0) return mid;
        if (s == s_lo) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo + 0.5 * (hi - lo);
}

double find_root(const ScalarFunction& f, const ScalarFunction& df, const RootBracket& bracket,
                 double tol) {
    if (bracket.lo_sign() == 0) return bracket.lo();
    if (bracket.hi_sign() == 0) return bracket.hi();
    double lo = bracket.lo();
    double hi = bracket.hi();
    const int s_lo = bracket.lo_sign();
    double x = lo + 0.5 * (hi - lo);
    for (int iter = 0; iter < 400 && hi - lo > tol; ++iter) {
        const double fx = f(x);
        const int s = sign_of(fx);
        if (s == 0) return x;
        if (s == s_lo) {
            lo = x;
        } else {
            hi = x;
        }
        const double d = df(x);
        double next = (d != 0.0) ? x - fx / d : lo + 0.5 * (hi - lo);
        if (!(next > lo && next < hi)) next = lo + 0.5 * (hi - lo);
        if (std::abs(next - x) <= 0.5 * tol) return next;
        x = next;
    }
    return lo + 0.5 * (hi - lo);
}

namespace detail {

double bessel_j_switchover(int m) { return std::max(kSeriesLimit, static_cast<double>(m)); }

double bessel_j_series(int m, double x) {
    check_order(m, x);
    const long double half_x = 0.5L * x;
    const long double q = half_x * half_x;
    long double term = leading_term(m, half_x);
    long double sum = term;
    long double peak = std::abs(term);
    for (int k = 0; k < 100000; ++k) {
        term *= -q / ((k + 1.0L) * (m + k + 1.0L));
        sum += term;
        peak = std::max(peak, std::abs(term));
        // Stop once past the largest term and below extended resolution.
        if (k + 1 > half_x && std::abs(term) <= std::numeric_limits<long double>::epsilon() *
                                                     std::max(std::abs(sum), 1e-30L * peak)) {
            break;
        }
    }
    return static_cast<double>(sum);
}

double bessel_j_large_argument(int m, double x) {
    check_order(m, x);
    if (!(x > m)) throw std::invalid_argument("large-argument branch requires x > m");
    const double j0 = hankel_j(0, x);
    if (m == 0) return j0;
    const double j1 = hankel_j(1, x);
    double prev = j0;
    double cur = j1;
    for (int k = 1; k < m; ++k) {
        const double next = (2.0 * k / x) * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace detail

double bessel_j(int m, double x) {
    check_order(m, x);
    if (x == 0.0) return m == 0 ? 1.0 : 0.0;
    if (x <= detail::bessel_j_switchover(m)) return detail::bessel_j_series(m, x);
    return detail::bessel_j_large_argument(m, x);
}

double bessel_i(int m, double x) {
    check_order(m, x);
    if (x > kBesselIMaxArgument) {
        throw std::overflow_error("bessel_i: argument " + std::to_string(x) +
                                  " beyond supported range");
    }
    if (x == 0.0) return m == 0 ? 1.0 : 0.0;
    const long double v = modified_series(m, x);
    if (v > std::numeric_limits<double>::max()) throw std::overflow_error("bessel_i overflow");
    return static_cast<double>(v);
}

double bessel_j_prime(int m, double x) {
    if (m == 0) return -bessel_j(1, x);
    return 0.5 * (bessel_j(m - 1, x) - bessel_j(m + 1, x));
}

std::vector<double> bessel_j_zeros(int m, int count) {
    if (m < 0) throw std::invalid_argument("Bessel order must be nonnegative");
    if (count <= 0) return {};
    // J_0 zeros sit in ((l - 1/2)π, lπ); each higher order takes its l-th zero
    // from between the l-th and (l+1)-th zeros of the order below.
    const int base_count = count + m;
    std::vector<double> zeros(base_count);
    const auto j0 = [](double x) { return bessel_j(0, x); };
    for (int l = 1; l <= base_count; ++l) {
        zeros[l - 1] = find_root(j0, RootBracket::make(j0, (l - 0.5) * kPi, l * kPi), kZeroTolerance);
    }
    for (int order = 1; order <= m; ++order) {
        const auto jm = [order](double x) { return bessel_j(order, x); };
        std::vector<double> next(zeros.size() - 1);
        for (std::size_t l = 0; l + 1 < zeros.size(); ++l) {
            next[l] = find_root(jm, RootBracket::make(jm, zeros[l], zeros[l + 1]), kZeroTolerance);
        }
        zeros = std::move(next);
    }
    zeros.resize(count);
    return zeros;
}

double bessel_j_zero(int m, int l) {
    if (l < 1) throw std::invalid_argument("zero index must be >= 1");
    return bessel_j_zeros(m, l).back();
}

std::vector<double> bessel_j_zeros_below(int m, double x_max) {
    if (m < 0) throw std::invalid_argument("Bessel order must be nonnegative");
    // Zeros of J_m are more than π apart, and j_m^(1) > m.
    if (x_max <= m) return {};
    const int bound = static_cast<int>(std::ceil((x_max - m) / kPi)) + 2;
    std::vector<double> zeros = bessel_j_zeros(m, bound);
    while (zeros.back() < x_max) zeros = bessel_j_zeros(m, 2 * static_cast<int>(zeros.size()));
    zeros.erase(std::lower_bound(zeros.begin(), zeros.end(), x_max), zeros.end());
    return zeros;
}

namespace {

std::vector<double> prime_zeros_from(int m, const std::vector<double>& j_zeros) {
    // For m >= 1: one zero of J_m' in (m, j_m^(1)) and one between each pair
    // of consecutive zeros of J_m.
    const auto dj = [m](double x) { return bessel_j_prime(m, x); };
    std::vector<double> out;
    out.reserve(j_zeros.size());
    double lo = static_cast<double>(m);
    for (double hi : j_zeros) {
        out.push_back(find_root(dj, RootBracket::make(dj, lo, hi), kZeroTolerance));
        lo = hi;
    }
    return out;
}

}  // namespace

double bessel_j_prime_zero(int m, int l) {
    if (l < 1) throw std::invalid_argument("zero index must be >= 1");
    if (m == 0) return bessel_j_zero(1, l);
    return prime_zeros_from(m, bessel_j_zeros(m, l)).back();
}

std::vector<double> bessel_j_prime_zeros_below(int m, double x_max) {
    if (m == 0) return bessel_j_zeros_below(1, x_max);
    auto j = bessel_j_zeros_below(m, x_max);
    // The zero of J_m' just below x_max may lie above the last zero of J_m.
    j.push_back(bessel_j_zeros(m, static_cast<int>(j.size()) + 1).back());
    auto out = prime_zeros_from(m, j);
    out.erase(std::lower_bound(out.begin(), out.end(), x_max), out.end());
    return out;
}

}  // namespace speclab::specfun
