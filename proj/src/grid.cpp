// Copyright 2026 The speclab Authors
// SPDX-License-Identifier: Apache-2.0

#include "speclab/grid.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "speclab/errors.hpp"
#include "speclab/spectrum.hpp"

namespace speclab::fdlab {

namespace {

// Points closer than this (relative to h) to a boundary count as on it.
constexpr double kBoundaryEps = 1e-9;

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double offset(Centering c) { return c == Centering::Cell ? 0.5 : 0.0; }

void check_connected(int nx, int ny, const std::vector<std::uint8_t>& mask) {
    std::vector<std::uint8_t> seen(mask.size(), 0);
    std::vector<int> stack;
    int total = 0;
    for (std::size_t p = 0; p < mask.size(); ++p) {
        if (!mask[p]) continue;
        ++total;
        if (stack.empty() && total == 1) {
            stack.push_back(static_cast<int>(p));
            seen[p] = 1;
        }
    }
    int reached = 0;
    while (!stack.empty()) {
        const int p = stack.back();
        stack.pop_back();
        ++reached;
        const int i = p % nx;
        const int j = p / nx;
        const int nbr[4][2] = {{i - 1, j}, {i + 1, j}, {i, j - 1}, {i, j + 1}};
        for (const auto& q : nbr) {
            if (q[0] < 0 || q[0] >= nx || q[1] < 0 || q[1] >= ny) continue;
            const int qi = q[1] * nx + q[0];
            if (mask[qi] && !seen[qi]) {
                seen[qi] = 1;
                stack.push_back(qi);
            }
        }
    }
    if (reached != total) throw DegenerateDomainError("grid mask is not 4-connected");
}

struct Window {
    int ix0, iy0, nx, ny;
};

// Lattice window covering [xmin, xmax] x [ymin, ymax] with one spare row.
Window window_for(double xmin, double xmax, double ymin, double ymax, double h, Centering c) {
    const double o = offset(c);
    const int ix0 = static_cast<int>(std::floor(xmin / h - o)) - 1;
    const int ix1 = static_cast<int>(std::ceil(xmax / h - o)) + 1;
    const int iy0 = static_cast<int>(std::floor(ymin / h - o)) - 1;
    const int iy1 = static_cast<int>(std::ceil(ymax / h - o)) + 1;
    return {ix0, iy0, ix1 - ix0 + 1, iy1 - iy0 + 1};
}

bool strictly_between(double v, double lo, double hi, double eps) {
    return v > lo + eps && v < hi - eps;
}

}  // namespace

std::string shape_label(const Shape& shape) {
    return std::visit(
        Overloaded{
            [](const RectShape& s) {
                std::string out = "rect(a=" + format_number(s.a) + ",b=" + format_number(s.b);
                if (s.x0 != 0.0 || s.y0 != 0.0)
                    out += ",x0=" + format_number(s.x0) + ",y0=" + format_number(s.y0);
                return out + ")";
            },
            [](const DiskShape& s) {
                std::string out = "disk(R=" + format_number(s.radius);
                if (s.cx != 0.0 || s.cy != 0.0)
                    out += ",cx=" + format_number(s.cx) + ",cy=" + format_number(s.cy);
                return out + ")";
            },
            [](const LShape& s) {
                return "lshape(a=" + format_number(s.a) + ",b=" + format_number(s.b) +
                       ",notch=" + format_number(s.notch) + ")";
            },
            [](const MaskShape& s) { return "mask(" + s.path + ")"; },
        },
        shape);
}

double shape_area(const Shape& shape) {
    return std::visit(
        Overloaded{
            [](const RectShape& s) { return s.a * s.b; },
            [](const DiskShape& s) { return std::numbers::pi * s.radius * s.radius; },
            [](const LShape& s) { return s.a * s.b * (1.0 - s.notch * s.notch); },
            [](const MaskShape& s) {
                const auto g = load_mask_file(s.path);
                return g.unknowns() * g.h() * g.h();
            },
        },
        shape);
}

double shape_perimeter(const Shape& shape) {
    return std::visit(
        Overloaded{
            [](const RectShape& s) { return 2.0 * (s.a + s.b); },
            [](const DiskShape& s) { return 2.0 * std::numbers::pi * s.radius; },
            [](const LShape& s) { return 2.0 * (s.a + s.b); },
            [](const MaskShape& s) {
                const auto g = load_mask_file(s.path);
                int edges = 0;
                for (int j = 0; j < g.ny(); ++j) {
                    for (int i = 0; i < g.nx(); ++i) {
                        if (!g.inside(i, j)) continue;
                        edges += !g.inside(i - 1, j) + !g.inside(i + 1, j) + !g.inside(i, j - 1) +
                                 !g.inside(i, j + 1);
                    }
                }
                return edges * g.h();
            },
        },
        shape);
}

GridDomain::GridDomain(double h, Centering centering, int ix0, int iy0, int nx, int ny,
                       std::vector<std::uint8_t> mask, std::string label)
    : h_(h), centering_(centering), ix0_(ix0), iy0_(iy0), nx_(nx), ny_(ny),
      mask_(std::move(mask)), index_(mask_.size(), -1), label_(std::move(label)) {
    if (!(h > 0.0)) throw std::invalid_argument("mesh width must be positive");
    if (nx <= 0 || ny <= 0 || mask_.size() != static_cast<std::size_t>(nx) * ny)
        throw std::invalid_argument("mask dimensions do not match");
    for (std::size_t p = 0; p < mask_.size(); ++p) {
        if (mask_[p]) index_[p] = unknowns_++;
    }
    if (unknowns_ < kMinUnknowns) {
        throw DegenerateDomainError("grid domain " + label_ + " has " + std::to_string(unknowns_) +
                                    " unknowns; at least " + std::to_string(kMinUnknowns) +
                                    " required");
    }
    check_connected(nx_, ny_, mask_);
}

bool GridDomain::inside(int i, int j) const { return index(i, j) >= 0; }

int GridDomain::index(int i, int j) const {
    if (i < 0 || i >= nx_ || j < 0 || j >= ny_) return -1;
    return index_[static_cast<std::size_t>(j) * nx_ + i];
}

double GridDomain::x(int i) const { return (ix0_ + i + offset(centering_)) * h_; }
double GridDomain::y(int j) const { return (iy0_ + j + offset(centering_)) * h_; }

std::vector<std::pair<int, int>> GridDomain::global_cells() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(unknowns_);
    for (int j = 0; j < ny_; ++j)
        for (int i = 0; i < nx_; ++i)
            if (inside(i, j)) out.emplace_back(ix0_ + i, iy0_ + j);
    return out;
}

GridDomain build_grid_domain(const Shape& shape, double h, Centering centering) {
    if (!(h > 0.0)) throw std::invalid_argument("mesh width must be positive");
    if (const auto* m = std::get_if<MaskShape>(&shape)) return load_mask_file(m->path);

    const double eps = kBoundaryEps * h;
    Window w{};
    std::function<bool(double, double)> contains;
    std::visit(Overloaded{
                   [&](const RectShape& s) {
                       if (!(s.a > 0 && s.b > 0)) throw std::invalid_argument("bad rectangle");
                       w = window_for(s.x0, s.x0 + s.a, s.y0, s.y0 + s.b, h, centering);
                       contains = [s, eps](double x, double y) {
                           return strictly_between(x, s.x0, s.x0 + s.a, eps) &&
                                  strictly_between(y, s.y0, s.y0 + s.b, eps);
                       };
                   },
                   [&](const DiskShape& s) {
                       if (!(s.radius > 0)) throw std::invalid_argument("bad disk radius");
                       w = window_for(s.cx - s.radius, s.cx + s.radius, s.cy - s.radius,
                                      s.cy + s.radius, h, centering);
                       contains = [s, eps](double x, double y) {
                           return std::hypot(x - s.cx, y - s.cy) < s.radius - eps;
                       };
                   },
                   [&](const LShape& s) {
                       if (!(s.a > 0 && s.b > 0 && s.notch > 0 && s.notch < 1))
                           throw std::invalid_argument("bad L-shape parameters");
                       w = window_for(0.0, s.a, 0.0, s.b, h, centering);
                       const double cx = (1.0 - s.notch) * s.a;
                       const double cy = (1.0 - s.notch) * s.b;
                       contains = [s, cx, cy, eps](double x, double y) {
                           if (!strictly_between(x, 0.0, s.a, eps) ||
                               !strictly_between(y, 0.0, s.b, eps))
                               return false;
                           // Outside the closed notch.
                           return x < cx - eps || y < cy - eps;
                       };
                   },
                   [](const MaskShape&) {},
               },
               shape);

    const double o = offset(centering);
    std::vector<std::uint8_t> mask(static_cast<std::size_t>(w.nx) * w.ny, 0);
    for (int j = 0; j < w.ny; ++j) {
        for (int i = 0; i < w.nx; ++i) {
            const double x = (w.ix0 + i + o) * h;
            const double y = (w.iy0 + j + o) * h;
            mask[static_cast<std::size_t>(j) * w.nx + i] = contains(x, y) ? 1 : 0;
        }
    }
    return GridDomain(h, centering, w.ix0, w.iy0, w.nx, w.ny, std::move(mask),
                      shape_label(shape) + "@h=" + format_number(h));
}

GridDomain parse_mask(const std::string& text, const std::string& label) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("mask file is empty");
    std::istringstream header(line);
    std::string key;
    double h = 0.0;
    if (!(header >> key >> h) || key != "h" || !(h > 0.0))
        throw std::invalid_argument("mask header must be 'h <positive value>'");
    std::vector<std::string> rows;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        for (char c : line) {
            if (c != '#' && c != '.')
                throw std::invalid_argument("mask rows may contain only '#' and '.'");
        }
        if (!rows.empty() && line.size() != rows.front().size())
            throw std::invalid_argument("mask rows must have equal width");
        rows.push_back(line);
    }
    if (rows.empty()) throw std::invalid_argument("mask has no rows");
    const int nx = static_cast<int>(rows.front().size());
    const int ny = static_cast<int>(rows.size());
    std::vector<std::uint8_t> mask(static_cast<std::size_t>(nx) * ny, 0);
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) mask[static_cast<std::size_t>(j) * nx + i] = rows[j][i] == '#';
    return GridDomain(h, Centering::Vertex, 0, 0, nx, ny, std::move(mask), label);
}

GridDomain load_mask_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open mask file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_mask(buf.str(), "mask(" + path + ")");
}

GridDomain build_interval_grid(double length, int intervals) {
    if (!(length > 0.0) || intervals < 2) throw std::invalid_argument("bad interval grid");
    const int n = intervals - 1;
    return GridDomain(length / intervals, Centering::Vertex, 1, 0, n, 1,
                      std::vector<std::uint8_t>(n, 1),
                      "interval(L=" + format_number(length) + ")@h=" + format_number(length / intervals));
}

}  // namespace speclab::fdlab
