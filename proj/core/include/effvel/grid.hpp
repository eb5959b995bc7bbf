// Uniform node-centered grids: a 1D interval (periodic or truncated far-field
// line) and a radial mesh [0, R] standing in for a radially symmetric domain
// in dimension 2 or 3.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace effvel {

enum class GridKind { line1d, radial };
enum class BoundaryKind { periodic, farfield };

// Far state for truncated domains. The density normalization is rho_bar = 1
// with the fluid at rest, so the far state is fixed rather than configurable.
inline constexpr double kFarDensity = 1.0;
inline constexpr double kFarVelocity = 0.0;

class Grid {
public:
    // Default-constructed grids are empty placeholders; real grids come from
    // the factories below, which enforce the invariants.
    Grid() = default;

    static Grid line(double x_min, double x_max, std::size_t n_cells,
                     BoundaryKind boundary);
    static Grid radial(double r_max, std::size_t n_cells, int dimension);

    GridKind kind() const { return kind_; }
    BoundaryKind boundary() const { return boundary_; }
    int dimension() const { return dimension_; }
    std::size_t n_cells() const { return n_cells_; }
    double spacing() const { return h_; }
    double x_min() const { return x_min_; }
    double x_max() const { return x_max_; }
    double r_max() const { return x_max_; }
    double length() const { return x_max_ - x_min_; }

    // Periodic line grids carry n_cells nodes (the right endpoint wraps);
    // far-field lines and radial grids carry n_cells + 1 nodes.
    std::size_t node_count() const;
    double node(std::size_t i) const { return x_min_ + h_ * static_cast<double>(i); }
    std::vector<double> nodes() const;

    bool is_periodic() const { return boundary_ == BoundaryKind::periodic; }
    bool is_radial() const { return kind_ == GridKind::radial; }

    // Quadrature weight of node i: h per node on periodic lines, trapezoid
    // ends on far-field lines, omega_N r^{N-1} h (trapezoid at r_max) on
    // radial grids. Integrals over the radial domain are genuine volume
    // integrals over the ball of radius R.
    double quadrature_weight(std::size_t i) const;

    bool operator==(const Grid& other) const = default;

private:
    GridKind kind_ = GridKind::line1d;
    BoundaryKind boundary_ = BoundaryKind::periodic;
    int dimension_ = 1;
    std::size_t n_cells_ = 0;
    double x_min_ = 0.0;
    double x_max_ = 0.0;
    double h_ = 0.0;
};

// Surface measure of the unit sphere in R^N for N = 1, 2, 3.
double sphere_surface(int dimension);

}  // namespace effvel
