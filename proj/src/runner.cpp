// Copyright 2026 The speclab Authors
// SPDX-License-Identifier: Apache-2.0

#include "speclab/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <thread>

#include "json.hpp"
#include "speclab/analytic2d.hpp"
#include "speclab/cap.hpp"
#include "speclab/counting.hpp"
#include "speclab/fd_spectrum.hpp"
#include "speclab/interval1d.hpp"
#include "speclab/verifiers.hpp"

namespace speclab::cli {

using Json = nlohmann::ordered_json;

std::string_view to_string(Verb verb) {
    switch (verb) {
        case Verb::Spectrum: return "spectrum";
        case Verb::Verify: return "verify";
        case Verb::Weyl: return "weyl";
        case Verb::Report: return "report";
    }
    return "?";
}

bool verb_runs(Verb verb, AnalyticSpec::Type type) {
    using T = AnalyticSpec::Type;
    const bool weyl_family = type == T::Weyl || type == T::Weyl2 || type == T::Heat;
    switch (verb) {
        case Verb::Spectrum: return false;
        case Verb::Verify: return !weyl_family;
        case Verb::Weyl: return weyl_family;
        case Verb::Report: return true;
    }
    return false;
}

namespace {

constexpr double kPi = std::numbers::pi;

// Report numbers carry 12 significant digits.
Json num(double x) {
    if (!std::isfinite(x)) return nullptr;
    return std::strtod(format_number(x).c_str(), nullptr);
}

Json nums(const double* first, std::size_t n) {
    Json out = Json::array();
    for (std::size_t i = 0; i < n; ++i) out.push_back(num(first[i]));
    return out;
}

// Spectra computed at one resolution (one mesh width, or the single
// analytic / cap level).
struct Level {
    std::optional<double> h;
    std::map<ProblemKind, Spectrum> spectra;
};

int dimension(const DomainSpec& d) { return d.type == DomainSpec::Type::Interval ? 1 : 2; }

fdlab::Shape to_shape(const DomainSpec& d) {
    switch (d.type) {
        case DomainSpec::Type::Rect: return fdlab::RectShape{d.a, d.b, d.x0, d.y0};
        case DomainSpec::Type::Disk: return fdlab::DiskShape{d.radius, d.cx, d.cy};
        case DomainSpec::Type::LShape: return fdlab::LShape{d.a, d.b, d.notch};
        case DomainSpec::Type::Mask: return fdlab::MaskShape{d.path};
        default: break;
    }
    throw std::invalid_argument("domain is not a planar grid shape");
}

double volume(const DomainSpec& d) {
    switch (d.type) {
        case DomainSpec::Type::Interval: return d.length;
        case DomainSpec::Type::Cap: return 2.0 * kPi * (1.0 - std::cos(d.aperture));
        default: return fdlab::shape_area(to_shape(d));
    }
}

// A 1D boundary is two points.
double boundary(const DomainSpec& d) {
    switch (d.type) {
        case DomainSpec::Type::Interval: return 2.0;
        case DomainSpec::Type::Cap: return 2.0 * kPi * std::sin(d.aperture);
        default: return fdlab::shape_perimeter(to_shape(d));
    }
}

Spectrum analytic_spectrum(const DomainSpec& d, ProblemKind kind, int count) {
    switch (d.type) {
        case DomainSpec::Type::Interval:
            return interval1d::interval_spectrum(interval1d::IntervalDomain(d.length), kind, count);
        case DomainSpec::Type::Rect:
            return analytic2d::rect_spectrum(analytic2d::RectDomain(d.a, d.b), kind, count);
        case DomainSpec::Type::Disk:
            return analytic2d::disk_spectrum(analytic2d::DiskDomain(d.radius), kind, count);
        default: break;
    }
    throw std::invalid_argument("no analytic spectrum for this domain");
}

// Grows the analytic spectrum until K values and every value up to
// tau_needed are trusted.
Spectrum analytic_spectrum_covering(const DomainSpec& d, ProblemKind kind, int k, double tau_needed) {
    const int n = dimension(d);
    const double vol = volume(d);
    const double weyl = analytics::weyl_leading_coefficient(n, vol) * std::pow(tau_needed, 0.5 * n) +
                        analytics::weyl_boundary_coefficient(n, boundary(d)) *
                            std::pow(tau_needed, 0.5 * (n - 1));
    int count = std::max(k + 4, static_cast<int>(1.1 * weyl) + 10);
    for (;;) {
        Spectrum s = analytic_spectrum(d, kind, count);
        if (s.trusted_count >= static_cast<std::size_t>(k) && s.trusted_limit() >= tau_needed) return s;
        count = count + count / 2 + 10;
    }
}

std::vector<Level> compute_levels(const ExperimentSpec& spec, Verb verb) {
    const DomainSpec& d = spec.domain;
    std::vector<Level> levels;
    switch (spec.backend.type) {
        case BackendSpec::Type::Analytic: {
            std::map<ProblemKind, double> tau_needed;
            for (const auto& a : spec.analytics) {
                if (!verb_runs(verb, a.type)) continue;
                double need = 0.0;
                if (a.type == AnalyticSpec::Type::Weyl || a.type == AnalyticSpec::Type::Weyl2) {
                    need = a.tau_hi;
                } else if (a.type == AnalyticSpec::Type::Heat) {
                    for (double t : a.ts) {
                        need = std::max(need, analytics::heat_trace_cutoff(dimension(d), volume(d), t));
                    }
                } else {
                    continue;
                }
                tau_needed[a.kind] = std::max(tau_needed[a.kind], need);
            }
            Level level;
            for (auto kind : spec.kinds) {
                level.spectra.emplace(kind, analytic_spectrum_covering(d, kind, spec.count, tau_needed[kind]));
            }
            levels.push_back(std::move(level));
            break;
        }
        case BackendSpec::Type::Cap: {
            Level level;
            const fdlab::CapDomain cap(d.aperture, spec.backend.grid);
            for (auto kind : spec.kinds) level.spectra.emplace(kind, fdlab::cap_spectrum(cap, kind, spec.count));
            levels.push_back(std::move(level));
            break;
        }
        case BackendSpec::Type::FiniteDifference: {
            if (d.type == DomainSpec::Type::Mask) {
                const auto grid = fdlab::load_mask_file(d.path);
                Level level;
                level.h = grid.h();
                for (auto kind : spec.kinds) {
                    level.spectra.emplace(kind, fdlab::fd_spectrum(grid, kind, spec.count, spec.solver));
                }
                levels.push_back(std::move(level));
                break;
            }
            for (double h : spec.backend.h) {
                Level level;
                level.h = h;
                for (auto kind : spec.kinds) {
                    if (d.type == DomainSpec::Type::Interval) {
                        const int intervals = static_cast<int>(std::lround(d.length / h));
                        const auto grid = fdlab::build_interval_grid(d.length, intervals);
                        level.spectra.emplace(kind, fdlab::fd_spectrum(grid, kind, spec.count, spec.solver));
                    } else {
                        level.spectra.emplace(kind, fdlab::fd_spectrum(to_shape(d), kind, h, spec.count, spec.solver));
                    }
                }
                levels.push_back(std::move(level));
            }
            break;
        }
    }
    return levels;
}

std::string domain_label(const ExperimentSpec& spec, const std::vector<Level>& levels) {
    for (const auto& level : levels) {
        for (const auto& entry : level.spectra) return entry.second.domain;
    }
    return spec.name;
}

std::string backend_name(BackendSpec::Type type) {
    switch (type) {
        case BackendSpec::Type::Analytic: return "analytic";
        case BackendSpec::Type::FiniteDifference: return "fd";
        case BackendSpec::Type::Cap: return "cap";
    }
    return "?";
}

std::string spectra_csv(const std::vector<Level>& levels, int k) {
    std::string out = "k,kind,value,source,h\n";
    for (const auto& level : levels) {
        const std::string h = level.h ? format_number(*level.h) : "";
        for (const auto& [kind, s] : level.spectra) {
            const std::size_t n = std::min<std::size_t>(static_cast<std::size_t>(k), s.values.size());
            for (std::size_t i = 0; i < n; ++i) {
                out += std::to_string(i + 1) + "," + std::string(to_string(kind)) + "," +
                       format_number(s.values[i]) + "," + s.source.label() + "," + h + "\n";
            }
        }
    }
    return out;
}

analytics::ChainSpectra chain_of(const Level& level) {
    return {level.spectra.at(ProblemKind::Neumann), level.spectra.at(ProblemKind::Dirichlet),
            level.spectra.at(ProblemKind::Clamped), level.spectra.at(ProblemKind::Buckling)};
}

// Each analytic fills `out` and returns false when an asserted check fails.
bool run_chain(const AnalyticSpec& a, const std::vector<Level>& levels, Json& out) {
    const auto fine = chain_of(levels.back());
    std::optional<analytics::ChainSpectra> coarse;
    if (levels.size() >= 2) coarse = chain_of(levels[levels.size() - 2]);
    const auto report = analytics::inequality_chain_check(fine, a.count, coarse ? &*coarse : nullptr);
    out["K"] = a.count;
    if (levels.back().h) out["fine_h"] = num(*levels.back().h);
    if (coarse) out["coarse_h"] = num(*levels[levels.size() - 2].h);
    Json rows = Json::array();
    for (const auto& r : report.rows) {
        Json row;
        row["k"] = r.k;
        row["mu"] = num(r.values[0]);
        row["lambda"] = num(r.values[1]);
        row["gamma"] = num(r.values[2]);
        row["Lambda"] = num(r.values[3]);
        row["uncertainty"] = nums(r.uncertainty.data(), 4);
        row["margins"] = nums(r.margins.data(), 3);
        row["pass"] = Json::array({r.pass[0], r.pass[1], r.pass[2]});
        rows.push_back(row);
    }
    out["rows"] = rows;
    out["asserted"] = true;
    out["pass"] = report.all_pass;
    return report.all_pass;
}

bool run_counting_chain(const AnalyticSpec& a, const std::vector<Level>& levels, Json& out) {
    const auto spectra = chain_of(levels.back());
    const auto taus = analytics::default_tau_grid(spectra, a.points);
    const auto report = analytics::counting_chain_check(spectra, taus);
    out["points"] = a.points;
    out["tau_max"] = num(taus.back());
    Json rows = Json::array();
    for (std::size_t i = 0; i < report.taus.size(); ++i) {
        const auto& c = report.counts[i];
        rows.push_back(Json{{"tau", num(report.taus[i])}, {"counts", Json::array({c[0], c[1], c[2], c[3]})}});
    }
    out["rows"] = rows;
    Json violations = Json::array();
    for (const auto& v : report.violations) {
        violations.push_back(Json{{"tau", num(v.tau)},
                                  {"counts", Json::array({v.counts[0], v.counts[1], v.counts[2], v.counts[3]})}});
    }
    out["violations"] = violations;
    out["asserted"] = true;
    out["pass"] = report.holds();
    return report.holds();
}

bool run_weyl(const AnalyticSpec& a, const ExperimentSpec& spec, const std::vector<Level>& levels,
              Json& out) {
    const Spectrum& s = levels.back().spectra.at(a.kind);
    const int n = dimension(spec.domain);
    const bool two_term = a.type == AnalyticSpec::Type::Weyl2;
    const auto fit = two_term
                         ? analytics::weyl_two_term_fit(s, n, volume(spec.domain), boundary(spec.domain),
                                                        a.tau_lo, a.tau_hi)
                         : analytics::weyl_fit(s, n, volume(spec.domain), a.tau_lo, a.tau_hi);
    out["kind"] = std::string(to_string(a.kind));
    out["dimension"] = fit.dimension;
    out["volume"] = num(fit.volume);
    out["tau"] = Json::array({num(fit.tau_lo), num(fit.tau_hi)});
    out["points"] = fit.points;
    out["fitted_c"] = num(fit.fitted_leading);
    out["theoretical_c"] = num(fit.theoretical_leading);
    out["ratio"] = num(fit.ratio);
    bool pass = true;
    if (two_term) {
        const double expected_sign = a.kind == ProblemKind::Neumann ? 1.0 : -1.0;
        const double c1 = *fit.fitted_second;
        const double theory = *fit.theoretical_second;
        const double rel = (std::abs(c1) - theory) / theory;
        out["boundary"] = num(fit.boundary);
        out["fitted_c1"] = num(c1);
        out["theoretical_c1"] = num(expected_sign * theory);
        out["c1_relative_error"] = num(rel);
        const bool sign_ok = c1 * expected_sign > 0.0;
        out["sign_ok"] = sign_ok;
        pass = sign_ok && (!a.tolerance || std::abs(rel) <= *a.tolerance);
        out["asserted"] = true;
    } else {
        out["asserted"] = a.tolerance.has_value();
        if (a.tolerance) pass = std::abs(fit.ratio - 1.0) <= *a.tolerance;
    }
    if (a.tolerance) out["tolerance"] = num(*a.tolerance);
    out["pass"] = pass;
    return pass;
}

bool run_heat(const AnalyticSpec& a, const ExperimentSpec& spec, const std::vector<Level>& levels,
              Json& out) {
    const Spectrum& s = levels.back().spectra.at(a.kind);
    const auto report = analytics::heat_trace_check(s, dimension(spec.domain), volume(spec.domain),
                                                    boundary(spec.domain), a.ts);
    out["kind"] = std::string(to_string(a.kind));
    out["dimension"] = report.dimension;
    out["volume"] = num(report.volume);
    out["boundary"] = num(report.boundary);
    bool pass = true;
    Json points = Json::array();
    for (const auto& p : report.points) {
        const bool ok = !p.asymptotic_regime || !a.tolerance ||
                        std::abs(p.relative_deviation) <= *a.tolerance;
        pass = pass && ok;
        points.push_back(Json{{"t", num(p.t)},
                              {"scaled_trace", num(p.scaled_trace)},
                              {"predicted", num(p.predicted)},
                              {"relative_deviation", num(p.relative_deviation)},
                              {"tail_estimate", num(p.tail_estimate)},
                              {"asymptotic_regime", p.asymptotic_regime}});
    }
    out["points"] = points;
    out["asserted"] = a.tolerance.has_value();
    if (a.tolerance) out["tolerance"] = num(*a.tolerance);
    out["pass"] = pass;
    return pass;
}

// Observations only: the conjecture is open in the plane.
bool run_payne(const AnalyticSpec& a, const std::vector<Level>& levels, Json& out) {
    const auto& level = levels.back();
    const auto report = analytics::payne_scan(level.spectra.at(ProblemKind::Dirichlet),
                                              level.spectra.at(ProblemKind::Buckling), a.count);
    out["K"] = a.count;
    Json rows = Json::array();
    for (const auto& r : report.rows) {
        rows.push_back(Json{{"k", r.k},
                            {"lambda_next", num(r.dirichlet_next)},
                            {"Lambda", num(r.buckling)},
                            {"gap", num(r.gap)},
                            {"conjecture_holds", r.conjecture_holds}});
    }
    out["rows"] = rows;
    out["violations"] = report.violations;
    out["asserted"] = false;
    return true;
}

bool run_decomposition(const AnalyticSpec& a, const ExperimentSpec& spec, const std::vector<Level>& levels,
                       Json& out) {
    const double h = *levels.back().h;
    const auto centering = fdlab::Centering::Vertex;
    const auto whole = fdlab::build_grid_domain(to_shape(spec.domain), h, centering);
    std::vector<fdlab::GridDomain> parts;
    for (const auto& p : a.parts) parts.push_back(fdlab::build_grid_domain(to_shape(p), h, centering));
    const auto report = analytics::decomposition_check(whole, parts, a.count, spec.solver);
    out["h"] = num(h);
    out["K"] = a.count;
    out["whole"] = report.whole;
    out["parts"] = report.parts;
    Json rows = Json::array();
    for (const auto& r : report.rows) {
        rows.push_back(Json{{"k", r.k}, {"whole", num(r.whole)}, {"merged", num(r.merged)}, {"holds", r.holds}});
    }
    out["rows"] = rows;
    out["violations"] = report.violations;
    out["asserted"] = true;
    out["pass"] = report.violations == 0;
    return report.violations == 0;
}

bool run_sharpness(const AnalyticSpec& a, const std::vector<Level>& levels, Json& out) {
    const auto& level = levels.back();
    std::vector<analytics::CapSpectra> caps;
    for (double delta : a.cap_apertures) {
        const fdlab::CapDomain cap(delta, a.cap_grid);
        caps.push_back({delta, fdlab::cap_spectrum(cap, ProblemKind::Dirichlet, 2),
                        fdlab::cap_spectrum(cap, ProblemKind::Neumann, 2)});
    }
    const auto report = analytics::sharpness_report(level.spectra.at(ProblemKind::Dirichlet),
                                                    level.spectra.at(ProblemKind::Clamped),
                                                    level.spectra.at(ProblemKind::Buckling), caps);
    if (!caps.empty()) out["cap_grid"] = a.cap_grid;
    Json records = Json::array();
    for (const auto& r : report.records) {
        records.push_back(Json{{"name", r.name},
                               {"lhs", num(r.lhs)},
                               {"rhs", num(r.rhs)},
                               {"asserted", r.asserted},
                               {"holds", r.holds}});
    }
    out["records"] = records;
    out["asserted"] = true;
    out["pass"] = report.all_asserted_hold();
    return report.all_asserted_hold();
}

bool run_analytic(const AnalyticSpec& a, const ExperimentSpec& spec, const std::vector<Level>& levels,
                  Json& out) {
    switch (a.type) {
        case AnalyticSpec::Type::Chain: return run_chain(a, levels, out);
        case AnalyticSpec::Type::CountingChain: return run_counting_chain(a, levels, out);
        case AnalyticSpec::Type::Weyl:
        case AnalyticSpec::Type::Weyl2: return run_weyl(a, spec, levels, out);
        case AnalyticSpec::Type::Heat: return run_heat(a, spec, levels, out);
        case AnalyticSpec::Type::Payne: return run_payne(a, levels, out);
        case AnalyticSpec::Type::Decomposition: return run_decomposition(a, spec, levels, out);
        case AnalyticSpec::Type::Sharpness: return run_sharpness(a, levels, out);
    }
    return false;
}

std::string status_name(ExperimentResult::Status status) {
    switch (status) {
        case ExperimentResult::Status::Pass: return "pass";
        case ExperimentResult::Status::Fail: return "fail";
        case ExperimentResult::Status::Error: return "error";
    }
    return "?";
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    file << contents;
    file.close();
    if (!file) throw std::runtime_error("cannot write " + path.string());
}

}  // namespace

ExperimentResult run_experiment(const ExperimentSpec& spec, Verb verb) {
    ExperimentResult result;
    result.name = spec.name;
    Json report;
    report["experiment"] = spec.name;
    report["verb"] = std::string(to_string(verb));
    report["backend"] = backend_name(spec.backend.type);
    report["K"] = spec.count;

    std::vector<Level> levels;
    try {
        levels = compute_levels(spec, verb);
    } catch (const std::exception& e) {
        result.status = ExperimentResult::Status::Error;
        report["status"] = "error";
        report["error"] = e.what();
        result.csv = spectra_csv({}, spec.count);
        result.report = report.dump(2) + "\n";
        return result;
    }
    report["domain"] = domain_label(spec, levels);

    Json spectra = Json::array();
    for (const auto& level : levels) {
        for (const auto& [kind, s] : level.spectra) {
            Json entry;
            entry["kind"] = std::string(to_string(kind));
            entry["source"] = s.source.label();
            if (level.h) entry["h"] = num(*level.h);
            entry["count"] = s.values.size();
            entry["trusted_count"] = s.trusted_count;
            entry["trusted_limit"] = num(s.trusted_limit());
            spectra.push_back(entry);
        }
    }
    report["spectra"] = spectra;

    bool failed = false;
    bool errored = false;
    Json analytics = Json::array();
    for (const auto& a : spec.analytics) {
        if (!verb_runs(verb, a.type)) continue;
        Json entry;
        entry["type"] = std::string(to_string(a.type));
        try {
            if (!run_analytic(a, spec, levels, entry)) failed = true;
        } catch (const std::exception& e) {
            entry["error"] = e.what();
            errored = true;
        }
        analytics.push_back(entry);
    }
    report["analytics"] = analytics;

    result.status = errored  ? ExperimentResult::Status::Error
                    : failed ? ExperimentResult::Status::Fail
                             : ExperimentResult::Status::Pass;
    report["status"] = status_name(result.status);
    result.csv = spectra_csv(levels, spec.count);
    result.report = report.dump(2) + "\n";
    return result;
}

RunSummary run_config(const ExperimentConfig& config, const RunOptions& options) {
    std::filesystem::create_directories(options.out_dir);
    const std::size_t total = config.experiments.size();
    RunSummary summary;
    summary.results.resize(total);
    std::vector<std::string> io_errors(total);

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < total; i = next++) {
            const auto& spec = config.experiments[i];
            summary.results[i] = run_experiment(spec, options.verb);
            try {
                write_file(options.out_dir / (spec.name + ".spectra.csv"), summary.results[i].csv);
                write_file(options.out_dir / (spec.name + ".report.json"), summary.results[i].report);
            } catch (const std::exception& e) {
                io_errors[i] = e.what();
            }
        }
    };
    const int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(std::max<std::size_t>(total, 1))));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        for (int j = 0; j < jobs; ++j) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }
    for (const auto& e : io_errors) {
        if (!e.empty()) throw std::runtime_error(e);
    }

    for (const auto& r : summary.results) {
        if (r.status == ExperimentResult::Status::Error) summary.exit_code = kExitError;
        else if (r.status == ExperimentResult::Status::Fail && summary.exit_code == kExitPass)
            summary.exit_code = kExitCheckFailed;
    }
    return summary;
}

}  // namespace speclab::cli
