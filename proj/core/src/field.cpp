#include "effvel/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace effvel {

ScalarField::ScalarField(const Grid& grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
    if (values_.size() != grid_.node_count())
        throw std::invalid_argument("ScalarField: value count does not match grid node count");
}

double ScalarField::max() const {
    return *std::max_element(values_.begin(), values_.end());
}

double ScalarField::min() const {
    return *std::min_element(values_.begin(), values_.end());
}

double ScalarField::max_abs() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::abs(v));
    return m;
}

bool ScalarField::all_finite() const {
    return std::all_of(values_.begin(), values_.end(),
                       [](double v) { return std::isfinite(v); });
}

double ScalarField::integral() const {
    double s = 0.0;
    for (std::size_t i = 0; i < values_.size(); ++i)
        s += values_[i] * grid_.quadrature_weight(i);
    return s;
}

ScalarField operator+(const ScalarField& a, const ScalarField& b) {
    require_same_grid(a, b, "operator+");
    ScalarField out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

ScalarField operator-(const ScalarField& a, const ScalarField& b) {
    require_same_grid(a, b, "operator-");
    ScalarField out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
    return out;
}

ScalarField operator*(double s, const ScalarField& f) {
    ScalarField out = f;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] *= s;
    return out;
}

ScalarField multiply(const ScalarField& a, const ScalarField& b) {
    require_same_grid(a, b, "multiply");
    ScalarField out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] *= b[i];
    return out;
}

double sup_distance(const ScalarField& a, const ScalarField& b) {
    require_same_grid(a, b, "sup_distance");
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

void require_same_grid(const ScalarField& a, const ScalarField& b, const char* where) {
    if (!(a.grid() == b.grid()))
        throw std::invalid_argument(std::string(where) + ": fields live on different grids");
}

}  // namespace effvel
