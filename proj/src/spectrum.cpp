// Copyright 2026 The speclab Authors
// SPDX-License-Identifier: Apache-2.0

#include "speclab/spectrum.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace speclab {

std::string_view to_string(ProblemKind kind) {
    switch (kind) {
        case ProblemKind::Neumann: return "neumann";
        case ProblemKind::Dirichlet: return "dirichlet";
        case ProblemKind::Clamped: return "clamped";
        case ProblemKind::Buckling: return "buckling";
    }
    return "unknown";
}

ProblemKind parse_problem_kind(std::string_view name) {
    for (auto kind : kAllKinds) {
        if (to_string(kind) == name) return kind;
    }
    throw std::invalid_argument("unknown problem kind '" + std::string(name) + "'");
}

std::string SpectrumSource::label() const {
    switch (type) {
        case Type::Analytic: return "analytic";
        case Type::FiniteDifference: return "fd(h=" + format_number(h) + ")";
        case Type::Cap: return "cap(grid=" + std::to_string(grid_points) + ")";
    }
    return "unknown";
}

double Spectrum::trusted_limit() const {
    if (trusted_count == 0) throw std::logic_error("spectrum has no trusted values");
    return values[trusted_count - 1];
}

Spectrum make_spectrum(ProblemKind kind, std::string domain, std::vector<double> values,
                       SpectrumSource source, std::size_t trusted) {
    if (!std::is_sorted(values.begin(), values.end()))
        throw std::invalid_argument("spectrum values must be nondecreasing");
    Spectrum s;
    s.kind = kind;
    s.domain = std::move(domain);
    s.trusted_count = std::min(trusted, values.size());
    s.values = std::move(values);
    s.source = source;
    return s;
}

std::size_t truncate_complete(std::vector<double>& values, std::size_t count) {
    if (values.size() <= count) return values.size();
    std::size_t trusted = count;
    if (count > 0 && values[count] == values[count - 1]) {
        trusted = static_cast<std::size_t>(
            std::lower_bound(values.begin(), values.begin() + count, values[count - 1]) - values.begin());
    }
    values.resize(count);
    return trusted;
}

std::string format_number(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

}  // namespace speclab
