// Copyright 2026 The speclab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace speclab {

/// The four boundary eigenvalue problems.
///
///   Neumann    -Δu = μu,       ∂u/∂ν = 0
///   Dirichlet  -Δu = λu,       u = 0
///   Clamped     Δ²u = Γ²u,     u = ∂u/∂ν = 0   (values stored as Γ)
///   Buckling    Δ²u = -ΛΔu,    u = ∂u/∂ν = 0
enum class ProblemKind { Neumann, Dirichlet, Clamped, Buckling };

inline constexpr ProblemKind kAllKinds[] = {ProblemKind::Neumann, ProblemKind::Dirichlet,
                                            ProblemKind::Clamped, ProblemKind::Buckling};

std::string_view to_string(ProblemKind kind);
ProblemKind parse_problem_kind(std::string_view name);

struct SpectrumSource {
    enum class Type { Analytic, FiniteDifference, Cap };
    Type type = Type::Analytic;
    double h = 0.0;      // mesh width, FiniteDifference only
    int grid_points = 0; // radial points, Cap only

    static SpectrumSource analytic() { return {}; }
    static SpectrumSource finite_difference(double h) { return {Type::FiniteDifference, h, 0}; }
    static SpectrumSource cap(int points) { return {Type::Cap, 0.0, points}; }

    std::string label() const;
};

/// Eigenvalues of one problem on one domain, in nondecreasing order and
/// repeated according to multiplicity. Only the first `trusted_count`
/// values may be used for counting; discretized spectra are unreliable
/// at the top end.
struct Spectrum {
    ProblemKind kind = ProblemKind::Dirichlet;
    std::string domain;
    std::vector<double> values;
    SpectrumSource source;
    std::size_t trusted_count = 0;

    /// Largest value that counting queries may go up to.
    double trusted_limit() const;
};

/// Builds a spectrum, checking ordering. `trusted` defaults to all values.
Spectrum make_spectrum(ProblemKind kind, std::string domain, std::vector<double> values,
                       SpectrumSource source, std::size_t trusted = static_cast<std::size_t>(-1));

/// Truncates sorted `values` to `count` entries and returns how many of
/// them are trusted: a degenerate group split by the cut is excluded, so
/// counts below the trusted limit stay exact.
std::size_t truncate_complete(std::vector<double>& values, std::size_t count);

/// "%.12g" formatting used for domain labels and report files.
std::string format_number(double value);

}  // namespace speclab
