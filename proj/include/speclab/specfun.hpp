// Copyright 2026 The speclab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <vector>

namespace speclab::specfun {

inline constexpr double kEvalTolerance = 1e-12;
inline constexpr double kRootTolerance = 1e-10;

using ScalarFunction = std::function<double(double)>;

/// A closed interval on which a continuous function changes sign.
class RootBracket {
public:
    /// Evaluates `f` at both ends. Throws InvalidBracketError if lo >= hi or
    /// the endpoint values share a sign. An exact zero at an endpoint counts
    /// as a sign change.
    static RootBracket make(const ScalarFunction& f, double lo, double hi);

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    int lo_sign() const { return lo_sign_; }
    int hi_sign() const { return hi_sign_; }

private:
    RootBracket(double lo, double hi, int lo_sign, int hi_sign)
        : lo_(lo), hi_(hi), lo_sign_(lo_sign), hi_sign_(hi_sign) {}

    double lo_;
    double hi_;
    int lo_sign_;
    int hi_sign_;
};

/// Bisection to a bracket width <= tol. Returns the midpoint of the final
/// bracket (or an endpoint that evaluates to exactly zero).
double find_root(const ScalarFunction& f, const RootBracket& bracket, double tol = kRootTolerance);

/// Newton steps from the bracket midpoint, falling back to bisection
/// whenever a step would leave the current bracket or fails to halve it.
double find_root(const ScalarFunction& f, const ScalarFunction& df, const RootBracket& bracket,
                 double tol = kRootTolerance);

/// J_m(x) for integer m >= 0, x >= 0.
double bessel_j(int m, double x);

/// I_m(x) for integer m >= 0, 0 <= x <= kBesselIMaxArgument.
/// Throws std::overflow_error above that.
double bessel_i(int m, double x);

inline constexpr double kBesselIMaxArgument = 700.0;

/// Derivative J_m'(x) via the recurrence 2J_m' = J_{m-1} - J_{m+1}.
double bessel_j_prime(int m, double x);

/// l-th positive zero of J_m (l >= 1).
double bessel_j_zero(int m, int l);

/// First `count` positive zeros of J_m.
std::vector<double> bessel_j_zeros(int m, int count);

/// All positive zeros of J_m strictly below x_max.
std::vector<double> bessel_j_zeros_below(int m, double x_max);

/// l-th positive zero of J_m'. For m = 0 the zero at the origin is skipped.
double bessel_j_prime_zero(int m, int l);

/// All positive zeros of J_m' strictly below x_max (origin excluded).
std::vector<double> bessel_j_prime_zeros_below(int m, double x_max);

namespace detail {

/// Argument at which bessel_j switches from the power series to the
/// large-argument branch.
double bessel_j_switchover(int m);

/// Ascending power series, summed in extended precision.
double bessel_j_series(int m, double x);

/// Hankel expansion for J_0 and J_1, forward recurrence for higher m.
/// Requires x > m.
double bessel_j_large_argument(int m, double x);

}  // namespace detail

}  // namespace speclab::specfun
