// Copyright 2026 The speclab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace speclab::fdlab {

/// Where unknowns sit relative to the global lattice h·Z².
///   Vertex: at (i·h, j·h); boundaries aligned with grid lines carry no unknowns.
///   Cell:   at ((i+½)·h, (j+½)·h); the finite-volume Neumann operator is
///           second order on this layout.
enum class Centering { Vertex, Cell };

struct RectShape {
    double a = 1.0;
    double b = 1.0;
    double x0 = 0.0;  // lower-left corner
    double y0 = 0.0;
};

struct DiskShape {
    double radius = 1.0;
    double cx = 0.0;
    double cy = 0.0;
};

/// [0,a]x[0,b] with the corner [(1-notch)a, a] x [(1-notch)b, b] removed.
struct LShape {
    double a = 1.0;
    double b = 1.0;
    double notch = 0.5;
};

/// Explicit mask; see parse_mask for the text format.
struct MaskShape {
    std::string path;
};

using Shape = std::variant<RectShape, DiskShape, LShape, MaskShape>;

std::string shape_label(const Shape& shape);

/// Geometric area and boundary length of a shape (mask shapes report the
/// staircase area and edge length of their cells).
double shape_area(const Shape& shape);
double shape_perimeter(const Shape& shape);

/// Unknowns of a finite-difference discretization: a boolean mask on an
/// nx-by-ny window of the global lattice, starting at lattice index
/// (ix0, iy0). The mask is nonempty and 4-connected.
class GridDomain {
public:
    GridDomain(double h, Centering centering, int ix0, int iy0, int nx, int ny,
               std::vector<std::uint8_t> mask, std::string label);

    double h() const { return h_; }
    Centering centering() const { return centering_; }
    int nx() const { return nx_; }
    int ny() const { return ny_; }
    int ix0() const { return ix0_; }
    int iy0() const { return iy0_; }
    int unknowns() const { return unknowns_; }
    const std::string& label() const { return label_; }

    bool inside(int i, int j) const;
    /// Unknown number of local cell (i, j), or -1 outside the mask.
    int index(int i, int j) const;
    double x(int i) const;
    double y(int j) const;

    /// A single-row mask is discretized as a 1D problem.
    bool is_one_dimensional() const { return ny_ == 1; }

    /// Lattice-global coordinates of every unknown, in unknown order.
    std::vector<std::pair<int, int>> global_cells() const;

private:
    double h_;
    Centering centering_;
    int ix0_;
    int iy0_;
    int nx_;
    int ny_;
    std::vector<std::uint8_t> mask_;
    std::vector<int> index_;
    int unknowns_ = 0;
    std::string label_;
};

inline constexpr int kMinUnknowns = 9;

/// Keeps every lattice point (vertex or cell center) lying strictly inside
/// the open shape. Throws DegenerateDomainError if fewer than kMinUnknowns
/// points result or the mask is not 4-connected.
GridDomain build_grid_domain(const Shape& shape, double h, Centering centering = Centering::Vertex);

/// Mask text: first line "h <value>", then rows of '#' (inside) and '.'
/// (outside). Row r of the file is lattice row r; all rows must share a width.
GridDomain parse_mask(const std::string& text, const std::string& label = "mask");
GridDomain load_mask_file(const std::string& path);

/// A 1D grid on [0, L]: a single-row vertex mask with N - 1 interior
/// points, h = L / N.
GridDomain build_interval_grid(double length, int intervals);

}  // namespace speclab::fdlab
