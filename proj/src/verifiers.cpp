// Copyright 2026 The speclab Authors
// SPDX-License-Identifier: Apache-2.0

#include "speclab/verifiers.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "speclab/counting.hpp"
#include "speclab/errors.hpp"
#include "speclab/fd_spectrum.hpp"

namespace speclab::analytics {

namespace {

void require_same_domain(const ChainSpectra& s) {
    const std::string& d = s.neumann.domain;
    for (const Spectrum* x : {&s.dirichlet, &s.clamped, &s.buckling}) {
        if (x->domain != d) throw DomainMismatchError("spectra on " + d + " and " + x->domain);
    }
    if (s.neumann.kind != ProblemKind::Neumann || s.dirichlet.kind != ProblemKind::Dirichlet ||
        s.clamped.kind != ProblemKind::Clamped || s.buckling.kind != ProblemKind::Buckling) {
        throw std::invalid_argument("chain spectra supplied in the wrong slots");
    }
}

}  // namespace

const Spectrum& ChainSpectra::operator[](ProblemKind kind) const {
    switch (kind) {
        case ProblemKind::Neumann: return neumann;
        case ProblemKind::Dirichlet: return dirichlet;
        case ProblemKind::Clamped: return clamped;
        case ProblemKind::Buckling: return buckling;
    }
    throw std::logic_error("bad kind");
}

ChainReport inequality_chain_check(const ChainSpectra& spectra, int count, const ChainSpectra* coarse) {
    require_same_domain(spectra);
    if (coarse) {
        require_same_domain(*coarse);
        if (coarse->neumann.domain != spectra.neumann.domain)
            throw DomainMismatchError("coarse spectra describe " + coarse->neumann.domain);
    }
    for (auto kind : kAllKinds) {
        if (static_cast<int>(spectra[kind].trusted_count) < count ||
            (coarse && static_cast<int>((*coarse)[kind].trusted_count) < count)) {
            throw OutOfTrustedRangeError("chain check index " + std::to_string(count) +
                                         " beyond trusted " + std::string(to_string(kind)) + " values");
        }
    }
    ChainReport report;
    report.domain = spectra.neumann.domain;
    for (int k = 1; k <= count; ++k) {
        ChainRow row;
        row.k = k;
        for (int c = 0; c < 4; ++c) {
            const auto kind = kAllKinds[c];
            row.values[c] = spectra[kind].values[k - 1];
            row.uncertainty[c] = coarse ? std::abs(row.values[c] - (*coarse)[kind].values[k - 1]) : 0.0;
        }
        for (int c = 0; c < 3; ++c) {
            row.margins[c] = row.values[c + 1] - row.values[c];
            row.pass[c] = row.margins[c] > row.uncertainty[c] + row.uncertainty[c + 1];
            report.all_pass = report.all_pass && row.pass[c];
        }
        report.rows.push_back(row);
    }
    return report;
}

CountingChainReport counting_chain_check(const ChainSpectra& spectra, const std::vector<double>& taus) {
    require_same_domain(spectra);
    CountingChainReport report;
    report.domain = spectra.neumann.domain;
    report.taus = taus;
    for (double t : taus) {
        std::array<std::int64_t, 4> n{};
        for (int c = 0; c < 4; ++c) n[c] = count_leq(spectra[kAllKinds[c]], t);
        report.counts.push_back(n);
        if (!(n[0] >= n[1] && n[1] >= n[2] && n[2] >= n[3])) report.violations.push_back({t, n});
    }
    return report;
}

std::vector<double> default_tau_grid(const ChainSpectra& spectra, int points) {
    if (points < 2) throw std::invalid_argument("tau grid needs at least 2 points");
    double limit = spectra.neumann.trusted_limit();
    for (auto kind : kAllKinds) limit = std::min(limit, spectra[kind].trusted_limit());
    std::vector<double> out(points);
    for (int i = 0; i + 1 < points; ++i) out[i] = limit * i / (points - 1);
    out.back() = limit;  // limit * n / n can round above limit
    return out;
}

PayneScanReport payne_scan(const Spectrum& dirichlet, const Spectrum& buckling, int count) {
    if (dirichlet.domain != buckling.domain)
        throw DomainMismatchError("spectra on " + dirichlet.domain + " and " + buckling.domain);
    if (static_cast<int>(dirichlet.trusted_count) < count + 1 ||
        static_cast<int>(buckling.trusted_count) < count) {
        throw OutOfTrustedRangeError("payne scan needs " + std::to_string(count + 1) +
                                     " trusted Dirichlet values");
    }
    PayneScanReport report;
    report.domain = dirichlet.domain;
    for (int k = 1; k <= count; ++k) {
        PayneRow row;
        row.k = k;
        row.dirichlet_next = dirichlet.values[k];
        row.buckling = buckling.values[k - 1];
        row.gap = row.dirichlet_next - row.buckling;
        row.conjecture_holds = row.dirichlet_next <= row.buckling;
        if (!row.conjecture_holds) ++report.violations;
        report.rows.push_back(row);
    }
    return report;
}

DecompositionReport decomposition_check(const fdlab::GridDomain& whole,
                                        const std::vector<fdlab::GridDomain>& parts, int count,
                                        const fdlab::EvpOptions& options) {
    if (parts.empty()) throw PartitionError("decomposition needs at least one part");
    const auto whole_cells = whole.global_cells();
    const std::set<std::pair<int, int>> whole_set(whole_cells.begin(), whole_cells.end());
    std::set<std::pair<int, int>> used;
    for (const auto& part : parts) {
        if (std::abs(part.h() - whole.h()) > 1e-12 * whole.h() || part.centering() != whole.centering())
            throw PartitionError("part " + part.label() + " is not on the whole domain's lattice");
        for (const auto& c : part.global_cells()) {
            if (!whole_set.count(c)) throw PartitionError("part " + part.label() + " leaves the whole domain");
            if (!used.insert(c).second) throw PartitionError("part " + part.label() + " overlaps another part");
        }
    }
    const auto whole_spec = fdlab::fd_spectrum(whole, ProblemKind::Buckling, count, options);
    std::vector<double> merged;
    DecompositionReport report;
    report.whole = whole.label();
    for (const auto& part : parts) {
        const int k = std::min(count, part.unknowns());
        const auto s = fdlab::fd_spectrum(part, ProblemKind::Buckling, k, options);
        merged.insert(merged.end(), s.values.begin(), s.values.end());
        report.parts.push_back(part.label());
    }
    std::sort(merged.begin(), merged.end());
    const int rows = std::min<int>(count, static_cast<int>(merged.size()));
    const double slack = 10.0 * options.tol;
    for (int k = 1; k <= rows; ++k) {
        DecompositionRow row;
        row.k = k;
        row.whole = whole_spec.values[k - 1];
        row.merged = merged[k - 1];
        row.holds = row.whole <= row.merged * (1.0 + slack);
        if (!row.holds) ++report.violations;
        report.rows.push_back(row);
    }
    return report;
}

bool SharpnessReport::all_asserted_hold() const {
    return std::all_of(records.begin(), records.end(),
                       [](const SharpnessRecord& r) { return !r.asserted || r.holds; });
}

SharpnessReport sharpness_report(const Spectrum& disk_dirichlet, const Spectrum& disk_clamped,
                                 const Spectrum& disk_buckling, const std::vector<CapSpectra>& caps) {
    if (disk_dirichlet.values.size() < 2 || disk_clamped.values.size() < 2 || disk_buckling.values.empty())
        throw std::invalid_argument("sharpness report needs lambda_2, Gamma_2 and Lambda_1");
    SharpnessReport report;
    report.records.push_back({disk_dirichlet.domain + ": lambda_2 > Gamma_1", disk_dirichlet.values[1],
                              disk_clamped.values[0], true, disk_dirichlet.values[1] > disk_clamped.values[0]});
    report.records.push_back({disk_dirichlet.domain + ": Gamma_2 > Lambda_1", disk_clamped.values[1],
                              disk_buckling.values[0], true, disk_clamped.values[1] > disk_buckling.values[0]});
    for (const auto& cap : caps) {
        if (cap.neumann.values.size() < 2 || cap.dirichlet.values.empty())
            throw std::invalid_argument("cap sharpness needs mu_2 and lambda_1");
        const double mu2 = cap.neumann.values[1];
        const double l1 = cap.dirichlet.values[0];
        report.records.push_back({cap.dirichlet.domain + ": mu_2 > lambda_1", mu2, l1,
                                  cap.aperture > 0.5 * std::numbers::pi, mu2 > l1});
    }
    return report;
}

}  // namespace speclab::analytics
