#include "effvel/grid.hpp"

#include <numbers>

namespace effvel {

Grid Grid::line(double x_min, double x_max, std::size_t n_cells,
                BoundaryKind boundary) {
    if (n_cells < 2) throw std::invalid_argument("Grid::line: n_cells must be >= 2");
    if (!(x_max > x_min)) throw std::invalid_argument("Grid::line: x_max must exceed x_min");
    Grid g;
    g.kind_ = GridKind::line1d;
    g.boundary_ = boundary;
    g.dimension_ = 1;
    g.n_cells_ = n_cells;
    g.x_min_ = x_min;
    g.x_max_ = x_max;
    g.h_ = (x_max - x_min) / static_cast<double>(n_cells);
    return g;
}

Grid Grid::radial(double r_max, std::size_t n_cells, int dimension) {
    if (n_cells < 2) throw std::invalid_argument("Grid::radial: n_cells must be >= 2");
    if (!(r_max > 0.0)) throw std::invalid_argument("Grid::radial: r_max must be positive");
    if (dimension != 2 && dimension != 3)
        throw std::invalid_argument("Grid::radial: dimension must be 2 or 3");
    Grid g;
    g.kind_ = GridKind::radial;
    g.boundary_ = BoundaryKind::farfield;
    g.dimension_ = dimension;
    g.n_cells_ = n_cells;
    g.x_min_ = 0.0;
    g.x_max_ = r_max;
    g.h_ = r_max / static_cast<double>(n_cells);
    return g;
}

std::size_t Grid::node_count() const {
    if (kind_ == GridKind::line1d && boundary_ == BoundaryKind::periodic)
        return n_cells_;
    return n_cells_ + 1;
}

std::vector<double> Grid::nodes() const {
    std::vector<double> xs(node_count());
    for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = node(i);
    return xs;
}

double Grid::quadrature_weight(std::size_t i) const {
    const std::size_t n = node_count();
    if (i >= n) throw std::out_of_range("Grid::quadrature_weight: node index");
    if (kind_ == GridKind::line1d) {
        if (boundary_ == BoundaryKind::periodic) return h_;
        return (i == 0 || i == n - 1) ? 0.5 * h_ : h_;
    }
    const double r = node(i);
    double w = sphere_surface(dimension_);
    if (dimension_ == 2) w *= r;
    else w *= r * r;
    w *= h_;
    if (i == 0 || i == n - 1) w *= 0.5;
    return w;
}

double sphere_surface(int dimension) {
    switch (dimension) {
        case 1: return 2.0;
        case 2: return 2.0 * std::numbers::pi;
        case 3: return 4.0 * std::numbers::pi;
        default: throw std::invalid_argument("sphere_surface: dimension must be 1, 2 or 3");
    }
}

}  // namespace effvel
