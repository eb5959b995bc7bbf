// Scalar field sampled at grid nodes. Fields are plain values: copy, move,
// compare; every operation that produces a field returns a fresh one.
#pragma once

#include <functional>
#include <vector>

#include "effvel/grid.hpp"

namespace effvel {

class ScalarField {
public:
    ScalarField() = default;
    explicit ScalarField(const Grid& grid, double fill = 0.0)
        : grid_(grid), values_(grid.node_count(), fill) {}
    ScalarField(const Grid& grid, std::vector<double> values);

    template <class Fn>
    static ScalarField from_function(const Grid& grid, Fn&& fn) {
        ScalarField f(grid);
        for (std::size_t i = 0; i < f.size(); ++i) f[i] = fn(grid.node(i));
        return f;
    }
    static ScalarField constant(const Grid& grid, double value) {
        return ScalarField(grid, value);
    }

    const Grid& grid() const { return grid_; }
    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    double& operator[](std::size_t i) { return values_[i]; }
    const std::vector<double>& values() const { return values_; }
    std::vector<double>& values() { return values_; }

    double max() const;
    double min() const;
    double max_abs() const;
    bool all_finite() const;
    // Sum of f_i * w_i with the grid quadrature weights (a volume integral).
    double integral() const;

    bool operator==(const ScalarField& other) const = default;

private:
    Grid grid_;
    std::vector<double> values_;
};

ScalarField operator+(const ScalarField& a, const ScalarField& b);
ScalarField operator-(const ScalarField& a, const ScalarField& b);
ScalarField operator*(double s, const ScalarField& f);
ScalarField multiply(const ScalarField& a, const ScalarField& b);

double sup_distance(const ScalarField& a, const ScalarField& b);

// Throws std::invalid_argument unless both fields live on the same grid.
void require_same_grid(const ScalarField& a, const ScalarField& b, const char* where);

}  // namespace effvel
