// Copyright 2026 The speclab Authors
// SPDX-License-Identifier: Apache-2.0

#include "speclab/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "json.hpp"

namespace speclab::cli {

using nlohmann::json;

ConfigError::ConfigError(const std::string& message, int line, int column, std::string pointer)
    : std::runtime_error(message), line_(line), column_(column), pointer_(std::move(pointer)) {}

std::string_view to_string(AnalyticSpec::Type type) {
    switch (type) {
        case AnalyticSpec::Type::Chain: return "chain";
        case AnalyticSpec::Type::CountingChain: return "counting-chain";
        case AnalyticSpec::Type::Weyl: return "weyl";
        case AnalyticSpec::Type::Weyl2: return "weyl2";
        case AnalyticSpec::Type::Heat: return "heat";
        case AnalyticSpec::Type::Payne: return "payne";
        case AnalyticSpec::Type::Decomposition: return "decomposition";
        case AnalyticSpec::Type::Sharpness: return "sharpness";
    }
    return "?";
}

namespace {

constexpr double kPi = std::numbers::pi;

[[noreturn]] void fail(const std::string& pointer, const std::string& message) {
    throw ConfigError(pointer + ": " + message, 0, 0, pointer);
}

// A JSON object being read: tracks its pointer and rejects unknown keys.
class Node {
public:
    Node(const json& value, std::string pointer) : value_(value), pointer_(std::move(pointer)) {
        if (!value_.is_object()) fail(pointer_.empty() ? "/" : pointer_, "expected an object");
    }

    const std::string& pointer() const { return pointer_; }
    std::string at(const std::string& key) const { return pointer_ + "/" + key; }
    bool has(const std::string& key) const { return value_.contains(key); }

    const json& raw(const std::string& key) {
        seen_.insert(key);
        if (!value_.contains(key)) fail(at(key), "missing required field");
        return value_.at(key);
    }

    double number(const std::string& key) {
        const json& v = raw(key);
        if (!v.is_number()) fail(at(key), "expected a number");
        const double x = v.get<double>();
        if (!std::isfinite(x)) fail(at(key), "expected a finite number");
        return x;
    }
    double number(const std::string& key, double fallback) {
        return has(key) ? number(key) : fallback;
    }
    double positive(const std::string& key, double fallback) {
        const double x = number(key, fallback);
        if (!(x > 0.0)) fail(at(key), "must be positive");
        return x;
    }

    int integer(const std::string& key, int fallback, int min) {
        if (!has(key)) return fallback;
        const json& v = raw(key);
        if (!v.is_number_integer()) fail(at(key), "expected an integer");
        const auto x = v.get<long long>();
        if (x < min || x > 100000000) fail(at(key), "must be at least " + std::to_string(min));
        return static_cast<int>(x);
    }

    std::string text(const std::string& key) {
        const json& v = raw(key);
        if (!v.is_string()) fail(at(key), "expected a string");
        return v.get<std::string>();
    }

    std::vector<double> numbers(const std::string& key) {
        const json& v = raw(key);
        if (!v.is_array() || v.empty()) fail(at(key), "expected a nonempty array of numbers");
        std::vector<double> out;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (!v[i].is_number()) fail(at(key) + "/" + std::to_string(i), "expected a number");
            out.push_back(v[i].get<double>());
        }
        return out;
    }

    void finish() const {
        for (const auto& item : value_.items()) {
            if (!seen_.count(item.key())) fail(at(item.key()), "unknown field");
        }
    }

private:
    const json& value_;
    std::string pointer_;
    std::set<std::string> seen_;
};

ProblemKind kind_at(const json& v, const std::string& pointer) {
    if (!v.is_string()) fail(pointer, "expected a problem kind string");
    try {
        return parse_problem_kind(v.get<std::string>());
    } catch (const std::invalid_argument&) {
        fail(pointer, "unknown problem kind '" + v.get<std::string>() +
                          "' (neumann, dirichlet, clamped, buckling)");
    }
}

DomainSpec read_domain(const json& value, const std::string& pointer,
                       const std::filesystem::path& base_dir) {
    Node node(value, pointer);
    DomainSpec d;
    const std::string type = node.text("type");
    if (type == "interval") {
        d.type = DomainSpec::Type::Interval;
        d.length = node.positive("L", 1.0);
    } else if (type == "rect") {
        d.type = DomainSpec::Type::Rect;
        d.a = node.positive("a", 1.0);
        d.b = node.positive("b", 1.0);
        d.x0 = node.number("x0", 0.0);
        d.y0 = node.number("y0", 0.0);
    } else if (type == "disk") {
        d.type = DomainSpec::Type::Disk;
        d.radius = node.positive("R", 1.0);
        d.cx = node.number("cx", 0.0);
        d.cy = node.number("cy", 0.0);
    } else if (type == "cap") {
        d.type = DomainSpec::Type::Cap;
        if (node.has("delta") == node.has("delta_over_pi")) {
            fail(pointer, "cap needs exactly one of 'delta' or 'delta_over_pi'");
        }
        d.aperture = node.has("delta") ? node.number("delta") : kPi * node.number("delta_over_pi");
        if (!(d.aperture > 0.0 && d.aperture < kPi)) fail(pointer, "cap aperture must lie in (0, pi)");
    } else if (type == "lshape") {
        d.type = DomainSpec::Type::LShape;
        d.a = node.positive("a", 1.0);
        d.b = node.positive("b", 1.0);
        d.notch = node.number("notch", 0.5);
        if (!(d.notch > 0.0 && d.notch < 1.0)) fail(node.at("notch"), "must lie in (0, 1)");
    } else if (type == "mask") {
        d.type = DomainSpec::Type::Mask;
        std::filesystem::path p = node.text("path");
        if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
        d.path = p.string();
    } else {
        fail(node.at("type"), "unknown domain type '" + type +
                                  "' (interval, rect, disk, cap, lshape, mask)");
    }
    node.finish();
    return d;
}

BackendSpec read_backend(const json& value, const std::string& pointer) {
    Node node(value, pointer);
    BackendSpec b;
    const std::string type = node.text("type");
    if (type == "analytic") {
        b.type = BackendSpec::Type::Analytic;
    } else if (type == "fd") {
        b.type = BackendSpec::Type::FiniteDifference;
        if (node.has("h")) b.h = node.numbers("h");
        for (double h : b.h) {
            if (!(h > 0.0 && h < 1e3)) fail(node.at("h"), "mesh widths must be positive");
        }
        std::sort(b.h.begin(), b.h.end(), std::greater<>());
        b.h.erase(std::unique(b.h.begin(), b.h.end()), b.h.end());
    } else if (type == "cap") {
        b.type = BackendSpec::Type::Cap;
        b.grid = node.integer("grid", 4000, 8);
    } else {
        fail(node.at("type"), "unknown backend '" + type + "' (analytic, fd, cap)");
    }
    node.finish();
    return b;
}

AnalyticSpec read_analytic(const json& value, const std::string& pointer,
                           const std::filesystem::path& base_dir) {
    AnalyticSpec a;
    // A bare string is shorthand for {"type": ...}.
    const json obj = value.is_string() ? json::object({{"type", value}}) : value;
    Node node(obj, pointer);
    const std::string type = node.text("type");
    static const std::pair<const char*, AnalyticSpec::Type> kTypes[] = {
        {"chain", AnalyticSpec::Type::Chain},
        {"counting-chain", AnalyticSpec::Type::CountingChain},
        {"weyl", AnalyticSpec::Type::Weyl},
        {"weyl2", AnalyticSpec::Type::Weyl2},
        {"heat", AnalyticSpec::Type::Heat},
        {"payne", AnalyticSpec::Type::Payne},
        {"decomposition", AnalyticSpec::Type::Decomposition},
        {"sharpness", AnalyticSpec::Type::Sharpness},
    };
    const auto it = std::find_if(std::begin(kTypes), std::end(kTypes),
                                 [&](const auto& p) { return type == p.first; });
    if (it == std::end(kTypes)) fail(node.at("type"), "unknown analytic '" + type + "'");
    a.type = it->second;

    switch (a.type) {
        case AnalyticSpec::Type::Chain:
        case AnalyticSpec::Type::Payne:
            a.count = node.integer("K", 0, 1);
            break;
        case AnalyticSpec::Type::CountingChain:
            a.points = node.integer("points", 50, 2);
            break;
        case AnalyticSpec::Type::Weyl:
        case AnalyticSpec::Type::Weyl2: {
            a.kind = kind_at(node.raw("kind"), node.at("kind"));
            const auto tau = node.numbers("tau");
            if (tau.size() != 2 || !(tau[0] >= 0.0 && tau[0] < tau[1])) {
                fail(node.at("tau"), "expected [lo, hi] with 0 <= lo < hi");
            }
            a.tau_lo = tau[0];
            a.tau_hi = tau[1];
            if (node.has("tolerance")) a.tolerance = node.positive("tolerance", 0.0);
            break;
        }
        case AnalyticSpec::Type::Heat:
            a.kind = kind_at(node.raw("kind"), node.at("kind"));
            a.ts = node.numbers("t");
            for (double t : a.ts) {
                if (!(t > 0.0)) fail(node.at("t"), "times must be positive");
            }
            if (node.has("tolerance")) a.tolerance = node.positive("tolerance", 0.0);
            break;
        case AnalyticSpec::Type::Decomposition: {
            a.count = node.integer("K", 0, 1);
            const json& parts = node.raw("parts");
            if (!parts.is_array() || parts.empty()) fail(node.at("parts"), "expected a nonempty array");
            for (std::size_t i = 0; i < parts.size(); ++i) {
                a.parts.push_back(read_domain(parts[i], node.at("parts") + "/" + std::to_string(i), base_dir));
                const auto t = a.parts.back().type;
                if (t == DomainSpec::Type::Interval || t == DomainSpec::Type::Cap) {
                    fail(node.at("parts") + "/" + std::to_string(i), "parts must be planar grid domains");
                }
            }
            break;
        }
        case AnalyticSpec::Type::Sharpness:
            if (node.has("caps_over_pi")) {
                for (double c : node.numbers("caps_over_pi")) {
                    if (!(c > 0.0 && c < 1.0)) fail(node.at("caps_over_pi"), "apertures must lie in (0, 1)");
                    a.cap_apertures.push_back(kPi * c);
                }
            }
            a.cap_grid = node.integer("cap_grid", 4000, 8);
            break;
    }
    node.finish();
    return a;
}

bool has_kind(const ExperimentSpec& e, ProblemKind kind) {
    return std::find(e.kinds.begin(), e.kinds.end(), kind) != e.kinds.end();
}

// Supported (domain, backend, kind) combinations and analytic prerequisites.
void validate(const ExperimentSpec& e, const std::string& pointer) {
    using D = DomainSpec::Type;
    using B = BackendSpec::Type;
    const D d = e.domain.type;
    const B b = e.backend.type;
    if (d == D::Cap && b != B::Cap) fail(pointer + "/backend", "cap domains need the cap backend");
    if (b == B::Cap && d != D::Cap) fail(pointer + "/backend", "the cap backend needs a cap domain");
    if ((d == D::LShape || d == D::Mask) && b != B::FiniteDifference) {
        fail(pointer + "/backend", "lshape and mask domains need the fd backend");
    }
    if (b == B::FiniteDifference && d == D::Mask && !e.backend.h.empty()) {
        fail(pointer + "/backend/h", "mask files carry their own mesh width; omit h");
    }
    if (b == B::FiniteDifference && d != D::Mask && e.backend.h.empty()) {
        fail(pointer + "/backend/h", "the fd backend needs a nonempty h list");
    }
    for (auto kind : e.kinds) {
        const bool second_order = kind == ProblemKind::Clamped || kind == ProblemKind::Buckling;
        if (second_order && (b == B::Cap || (b == B::Analytic && d == D::Rect))) {
            fail(pointer + "/kinds", std::string(to_string(kind)) +
                                         " has no closed form on this domain; use the fd backend");
        }
    }
    const bool all_four = e.kinds.size() == 4;
    for (std::size_t i = 0; i < e.analytics.size(); ++i) {
        const auto& a = e.analytics[i];
        const std::string at = pointer + "/analytics/" + std::to_string(i);
        switch (a.type) {
            case AnalyticSpec::Type::Chain:
            case AnalyticSpec::Type::CountingChain:
                if (!all_four) fail(at, "needs all four problem kinds");
                if (a.count > e.count) fail(at, "K exceeds the experiment K");
                break;
            case AnalyticSpec::Type::Weyl:
                if (!has_kind(e, a.kind)) fail(at + "/kind", "kind not computed by this experiment");
                break;
            case AnalyticSpec::Type::Weyl2:
            case AnalyticSpec::Type::Heat:
                if (!has_kind(e, a.kind)) fail(at + "/kind", "kind not computed by this experiment");
                if (a.kind != ProblemKind::Dirichlet && a.kind != ProblemKind::Neumann) {
                    fail(at + "/kind", "only dirichlet and neumann are supported");
                }
                if (b != B::Analytic) fail(at, "needs the analytic backend");
                break;
            case AnalyticSpec::Type::Payne:
                if (!has_kind(e, ProblemKind::Dirichlet) || !has_kind(e, ProblemKind::Buckling)) {
                    fail(at, "needs dirichlet and buckling");
                }
                if (a.count >= e.count) fail(at, "K must be below the experiment K");
                break;
            case AnalyticSpec::Type::Decomposition:
                if (b != B::FiniteDifference || d == D::Interval) {
                    fail(at, "needs a planar domain with the fd backend");
                }
                break;
            case AnalyticSpec::Type::Sharpness:
                if (d != D::Disk || b != B::Analytic) fail(at, "needs an analytic disk");
                if (!has_kind(e, ProblemKind::Dirichlet) || !has_kind(e, ProblemKind::Clamped) ||
                    !has_kind(e, ProblemKind::Buckling)) {
                    fail(at, "needs dirichlet, clamped and buckling");
                }
                if (e.count < 2) fail(at, "needs K >= 2");
                break;
        }
    }
}

ExperimentSpec read_experiment(const json& value, const std::string& pointer,
                               const std::filesystem::path& base_dir) {
    Node node(value, pointer);
    ExperimentSpec e;
    e.name = node.text("name");
    if (e.name.empty() || e.name.front() == '.' ||
        !std::all_of(e.name.begin(), e.name.end(), [](unsigned char c) {
            return std::isalnum(c) || c == '-' || c == '_' || c == '.';
        })) {
        fail(node.at("name"), "names may use letters, digits, '-', '_' and '.', and must not start with '.'");
    }
    e.domain = read_domain(node.raw("domain"), node.at("domain"), base_dir);

    if (node.has("kinds")) {
        const json& kinds = node.raw("kinds");
        if (kinds.is_string() && kinds.get<std::string>() == "all") {
            e.kinds.assign(std::begin(kAllKinds), std::end(kAllKinds));
        } else if (kinds.is_array() && !kinds.empty()) {
            for (std::size_t i = 0; i < kinds.size(); ++i) {
                const auto kind = kind_at(kinds[i], node.at("kinds") + "/" + std::to_string(i));
                if (has_kind(e, kind)) fail(node.at("kinds") + "/" + std::to_string(i), "duplicate kind");
                e.kinds.push_back(kind);
            }
            std::sort(e.kinds.begin(), e.kinds.end());
        } else {
            fail(node.at("kinds"), "expected \"all\" or a nonempty array of kinds");
        }
    } else {
        e.kinds.assign(std::begin(kAllKinds), std::end(kAllKinds));
    }
    e.backend = read_backend(node.raw("backend"), node.at("backend"));
    e.count = node.integer("K", 10, 1);

    if (node.has("analytics")) {
        const json& list = node.raw("analytics");
        if (!list.is_array()) fail(node.at("analytics"), "expected an array");
        for (std::size_t i = 0; i < list.size(); ++i) {
            e.analytics.push_back(read_analytic(list[i], node.at("analytics") + "/" + std::to_string(i), base_dir));
        }
    }
    for (auto& a : e.analytics) {
        if (a.count == 0) a.count = a.type == AnalyticSpec::Type::Payne ? e.count - 1 : e.count;
    }

    if (node.has("solver")) {
        Node solver(node.raw("solver"), node.at("solver"));
        e.solver.tol = solver.positive("tol", e.solver.tol);
        e.solver.dense_limit = solver.integer("dense_limit", e.solver.dense_limit, 0);
        if (solver.has("method")) {
            const std::string m = solver.text("method");
            if (m == "auto") e.solver.method = fdlab::EvpMethod::Auto;
            else if (m == "dense") e.solver.method = fdlab::EvpMethod::Dense;
            else if (m == "shift-invert") e.solver.method = fdlab::EvpMethod::ShiftInvert;
            else fail(solver.at("method"), "expected auto, dense or shift-invert");
        }
        solver.finish();
    }
    node.finish();
    validate(e, pointer);
    return e;
}

std::pair<int, int> line_column(const std::string& text, std::size_t byte) {
    int line = 1;
    int column = 1;
    const std::size_t end = std::min(byte > 0 ? byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < end; ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

}  // namespace

ExperimentConfig parse_config(const std::string& text, const std::filesystem::path& base_dir) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        const auto [line, column] = line_column(text, e.byte);
        std::string what = e.what();
        // Drop the library's "[json.exception.parse_error.101] parse error at ..." prefix.
        if (const auto pos = what.find(": "); pos != std::string::npos) what = what.substr(pos + 2);
        throw ConfigError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                              ": " + what,
                          line, column, "");
    }

    Node root(doc, "");
    ExperimentConfig config;
    if (root.has("output")) config.output = root.text("output");
    const json& list = root.raw("experiments");
    if (!list.is_array()) fail("/experiments", "expected an array");
    std::set<std::string> names;
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string pointer = "/experiments/" + std::to_string(i);
        config.experiments.push_back(read_experiment(list[i], pointer, base_dir));
        if (!names.insert(config.experiments.back().name).second) {
            fail(pointer + "/name", "duplicate experiment name");
        }
    }
    root.finish();
    return config;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read config " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str(), path.parent_path());
}

}  // namespace speclab::cli
