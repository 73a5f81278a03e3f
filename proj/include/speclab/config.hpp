// Copyright 2026 The speclab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "speclab/gevp.hpp"
#include "speclab/spectrum.hpp"

namespace speclab::cli {

/// Malformed or invalid experiment configuration. Syntax errors carry the
/// 1-based line and column; schema errors carry the JSON pointer of the
/// offending value.
class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& message, int line, int column, std::string pointer);
    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& pointer() const { return pointer_; }

private:
    int line_;
    int column_;
    std::string pointer_;
};

struct DomainSpec {
    enum class Type { Interval, Rect, Disk, Cap, LShape, Mask };
    Type type = Type::Rect;
    double length = 1.0;    // interval
    double a = 1.0;         // rect, lshape
    double b = 1.0;
    double x0 = 0.0;        // rect corner
    double y0 = 0.0;
    double radius = 1.0;    // disk
    double cx = 0.0;
    double cy = 0.0;
    double aperture = 0.0;  // cap, radians
    double notch = 0.5;     // lshape
    std::string path;       // mask, resolved against the config directory
};

struct BackendSpec {
    enum class Type { Analytic, FiniteDifference, Cap };
    Type type = Type::Analytic;
    std::vector<double> h;  // fd: sorted coarse to fine
    int grid = 4000;        // cap radial points
};

struct AnalyticSpec {
    enum class Type { Chain, CountingChain, Weyl, Weyl2, Heat, Payne, Decomposition, Sharpness };
    Type type = Type::Chain;
    ProblemKind kind = ProblemKind::Dirichlet;  // weyl, weyl2, heat
    double tau_lo = 0.0;                        // weyl, weyl2
    double tau_hi = 0.0;
    std::vector<double> ts;                     // heat
    std::optional<double> tolerance;            // weyl, weyl2, heat
    int count = 0;                              // chain, payne, decomposition; 0 = experiment K
    int points = 50;                            // counting-chain
    std::vector<DomainSpec> parts;              // decomposition
    std::vector<double> cap_apertures;          // sharpness, radians
    int cap_grid = 4000;
};

struct ExperimentSpec {
    std::string name;
    DomainSpec domain;
    std::vector<ProblemKind> kinds;
    BackendSpec backend;
    int count = 10;
    std::vector<AnalyticSpec> analytics;
    fdlab::EvpOptions solver;
};

struct ExperimentConfig {
    std::optional<std::string> output;
    std::vector<ExperimentSpec> experiments;
};

std::string_view to_string(AnalyticSpec::Type type);

/// Parses and validates a JSON configuration. Relative mask paths are
/// resolved against `base_dir`.
ExperimentConfig parse_config(const std::string& text, const std::filesystem::path& base_dir = {});
ExperimentConfig load_config(const std::filesystem::path& path);

}  // namespace speclab::cli
