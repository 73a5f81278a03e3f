// Copyright 2026 The speclab Authors
// SPDX-License-Identifier: Apache-2.0

// speclab <verb> --config <file> [--out <dir>] [--jobs <n>]

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "speclab/config.hpp"
#include "speclab/runner.hpp"

namespace {

int default_jobs() {
    if (const char* env = std::getenv("SPECLAB_JOBS")) {
        try {
            const int n = std::stoi(env);
            if (n >= 1) return n;
        } catch (const std::exception&) {
        }
        std::cerr << "speclab: ignoring SPECLAB_JOBS=" << env << "\n";
    }
    return 1;
}

const char* status_word(speclab::cli::ExperimentResult::Status status) {
    using Status = speclab::cli::ExperimentResult::Status;
    switch (status) {
        case Status::Pass: return "pass";
        case Status::Fail: return "FAIL";
        case Status::Error: return "ERROR";
    }
    return "?";
}

}  // namespace

int main(int argc, char** argv) {
    using namespace speclab::cli;

    CLI::App app{"Eigenvalue experiments for the Neumann, Dirichlet, clamped-plate and buckling problems"};
    app.require_subcommand(1);
    std::string config_path;
    std::string out_dir;
    int jobs = default_jobs();

    const std::pair<const char*, const char*> verbs[] = {
        {"spectrum", "compute spectra only"},
        {"verify", "inequality chains, Payne scan, decomposition and sharpness checks"},
        {"weyl", "Weyl fits and heat-trace checks"},
        {"report", "run every analytic in the config"},
    };
    for (const auto& [name, help] : verbs) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("--config", config_path, "experiment configuration (JSON)")->required();
        sub->add_option("--out", out_dir, "output directory (default: the config's \"output\", else .)");
        sub->add_option("--jobs", jobs, "experiments run concurrently (default: $SPECLAB_JOBS or 1)")
            ->check(CLI::PositiveNumber);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    RunOptions options;
    const std::string verb = app.get_subcommands().front()->get_name();
    options.verb = verb == "spectrum" ? Verb::Spectrum
                   : verb == "verify" ? Verb::Verify
                   : verb == "weyl"   ? Verb::Weyl
                                      : Verb::Report;
    options.jobs = jobs;

    ExperimentConfig config;
    try {
        config = load_config(config_path);
    } catch (const ConfigError& e) {
        std::cerr << config_path << ": " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "speclab: " << e.what() << "\n";
        return kExitError;
    }
    options.out_dir = !out_dir.empty() ? out_dir : config.output.value_or(".");

    RunSummary summary;
    try {
        summary = run_config(config, options);
    } catch (const std::exception& e) {
        std::cerr << "speclab: " << e.what() << "\n";
        return kExitError;
    }
    for (const auto& r : summary.results) {
        std::cout << status_word(r.status) << "  " << r.name << "\n";
    }
    return summary.exit_code;
}
