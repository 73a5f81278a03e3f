// Copyright 2026 The speclab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "speclab/gevp.hpp"
#include "speclab/grid.hpp"
#include "speclab/spectrum.hpp"

namespace speclab::analytics {

/// The four spectra of one domain: μ, λ, Γ, Λ.
struct ChainSpectra {
    Spectrum neumann;
    Spectrum dirichlet;
    Spectrum clamped;
    Spectrum buckling;

    const Spectrum& operator[](ProblemKind kind) const;
};

struct ChainRow {
    int k = 0;
    std::array<double, 4> values{};       // μ_k, λ_k, Γ_k, Λ_k
    std::array<double, 4> uncertainty{};  // per value; 0 for analytic spectra
    std::array<double, 3> margins{};      // λ-μ, Γ-λ, Λ-Γ
    std::array<bool, 3> pass{};           // margin > uncertainty of both sides
};

struct ChainReport {
    std::string domain;
    std::vector<ChainRow> rows;
    bool all_pass = true;
};

/// Checks μ_k < λ_k < Γ_k < Λ_k for k = 1..count. With `coarse` spectra
/// (same domain, coarser mesh) the uncertainty of each value is
/// |e_k(fine) - e_k(coarse)|, and a link passes only if its margin exceeds
/// the summed uncertainty of its two ends.
ChainReport inequality_chain_check(const ChainSpectra& spectra, int count,
                                   const ChainSpectra* coarse = nullptr);

struct CountingChainViolation {
    double tau = 0.0;
    std::array<std::int64_t, 4> counts{};
};

struct CountingChainReport {
    std::string domain;
    std::vector<double> taus;
    std::vector<std::array<std::int64_t, 4>> counts;  // N^N, N^D, N^P, N^B
    std::vector<CountingChainViolation> violations;
    bool holds() const { return violations.empty(); }
};

/// N^N(τ) >= N^D(τ) >= N^P(τ) >= N^B(τ) at every τ.
CountingChainReport counting_chain_check(const ChainSpectra& spectra, const std::vector<double>& taus);

/// `points` equally spaced τ from 0 to the smallest trusted limit.
std::vector<double> default_tau_grid(const ChainSpectra& spectra, int points);

struct PayneRow {
    int k = 0;
    double dirichlet_next = 0.0;  // λ_{k+1}
    double buckling = 0.0;        // Λ_k
    double gap = 0.0;             // λ_{k+1} - Λ_k
    bool conjecture_holds = false;  // λ_{k+1} <= Λ_k
};

struct PayneScanReport {
    std::string domain;
    std::vector<PayneRow> rows;
    int violations = 0;
};

PayneScanReport payne_scan(const Spectrum& dirichlet, const Spectrum& buckling, int count);

struct DecompositionRow {
    int k = 0;
    double whole = 0.0;   // Λ_k of the whole domain
    double merged = 0.0;  // Λ*_k, sorted union over the parts
    bool holds = false;
};

struct DecompositionReport {
    std::string whole;
    std::vector<std::string> parts;
    std::vector<DecompositionRow> rows;
    int violations = 0;
};

/// Verifies Λ_k(whole) <= Λ*_k for k = 1..count on buckling FD spectra.
/// Parts must share the whole's mesh width and centering, lie inside it and
/// be pairwise disjoint (PartitionError otherwise). A relative slack of
/// 10·tol absorbs solver error.
DecompositionReport decomposition_check(const fdlab::GridDomain& whole,
                                        const std::vector<fdlab::GridDomain>& parts, int count,
                                        const fdlab::EvpOptions& options = {});

struct SharpnessRecord {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    bool asserted = true;  // false: recorded observation only
    bool holds = false;    // lhs > rhs
};

struct SharpnessReport {
    std::vector<SharpnessRecord> records;
    bool all_asserted_hold() const;
};

struct CapSpectra {
    double aperture = 0.0;
    Spectrum dirichlet;
    Spectrum neumann;
};

/// Disk: λ_2 > Γ_1 and Γ_2 > Λ_1. Cap: μ_2 > λ_1, asserted for δ > π/2
/// and recorded otherwise.
SharpnessReport sharpness_report(const Spectrum& disk_dirichlet, const Spectrum& disk_clamped,
                                 const Spectrum& disk_buckling, const std::vector<CapSpectra>& caps);

}  // namespace speclab::analytics
