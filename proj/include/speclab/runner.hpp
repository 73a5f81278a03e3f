// Copyright 2026 The speclab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "speclab/config.hpp"

namespace speclab::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitError = 2;

/// Which analytics a run executes.
///   spectrum: none (spectra only)
///   verify:   chain, counting-chain, payne, decomposition, sharpness
///   weyl:     weyl, weyl2, heat
///   report:   everything
enum class Verb { Spectrum, Verify, Weyl, Report };

std::string_view to_string(Verb verb);
bool verb_runs(Verb verb, AnalyticSpec::Type type);

struct ExperimentResult {
    enum class Status { Pass, Fail, Error };
    std::string name;
    Status status = Status::Pass;
    std::string csv;     // <name>.spectra.csv contents
    std::string report;  // <name>.report.json contents
};

/// Computes the spectra of one experiment and runs the analytics selected by
/// `verb`. Never throws: failures are recorded in the report with
/// Status::Error.
ExperimentResult run_experiment(const ExperimentSpec& spec, Verb verb);

struct RunOptions {
    Verb verb = Verb::Report;
    std::filesystem::path out_dir = ".";
    int jobs = 1;
};

struct RunSummary {
    std::vector<ExperimentResult> results;  // config order
    int exit_code = kExitPass;
};

/// Runs every experiment, up to `jobs` at a time, and writes
/// <name>.spectra.csv and <name>.report.json into out_dir as each one
/// finishes. Exit code: 2 if any experiment errored, else 1 if any asserted
/// check failed, else 0. Throws std::runtime_error on I/O failure.
RunSummary run_config(const ExperimentConfig& config, const RunOptions& options);

}  // namespace speclab::cli
