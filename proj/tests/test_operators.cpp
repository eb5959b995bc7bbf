#include <cmath>
#include <numbers>

#include "doctest.h"
#include "effvel/operators.hpp"

using namespace effvel;

namespace {

constexpr double kPi = std::numbers::pi;

// Observed order from max-norm errors on a sequence of halved meshes.
double min_observed_order(const std::vector<double>& errors) {
    double worst = 1e9;
    for (std::size_t k = 0; k + 1 < errors.size(); ++k)
        worst = std::min(worst, std::log2(errors[k] / errors[k + 1]));
    return worst;
}

template <class Op, class Exact>
double max_error(const Grid& g, Op&& op, Exact&& exact) {
    const ScalarField out = op(g);
    double err = 0.0;
    for (std::size_t i = 0; i < out.size(); ++i)
        err = std::max(err, std::abs(out[i] - exact(g.node(i))));
    return err;
}

}  // namespace

TEST_CASE("gradient_1d: constants and linear fields are exact") {
    for (auto boundary : {BoundaryKind::periodic, BoundaryKind::farfield}) {
        const Grid g = Grid::line(-1.0, 3.0, 128, boundary);
        const ScalarField c = ScalarField::constant(g, 2.75);
        CHECK(gradient_1d(c).max_abs() == doctest::Approx(0.0).epsilon(1e-14));
    }
    const Grid g = Grid::line(0.0, 2.0, 64, BoundaryKind::farfield);
    const ScalarField lin = ScalarField::from_function(g, [](double x) { return x; });
    const ScalarField d = gradient_1d(lin);
    for (std::size_t i = 0; i < d.size(); ++i) CHECK(d[i] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("gradient_1d: sin on periodic grid converges at second order") {
    std::vector<double> errors;
    for (std::size_t n : {256u, 512u, 1024u}) {
        const Grid g = Grid::line(0.0, 2.0 * kPi, n, BoundaryKind::periodic);
        errors.push_back(max_error(
            g,
            [](const Grid& gg) {
                return gradient_1d(ScalarField::from_function(gg, [](double x) { return std::sin(x); }));
            },
            [](double x) { return std::cos(x); }));
    }
    // Central differences: error h^2/6 |f'''|; at n = 256 that is about 1.0e-4.
    CHECK(errors[0] <= 1.1e-4);
    CHECK(min_observed_order(errors) >= 1.9);
}

TEST_CASE("gradient_1d: periodic sum telescopes to zero") {
    const Grid g = Grid::line(0.0, 2.0 * kPi, 256, BoundaryKind::periodic);
    const ScalarField f =
        ScalarField::from_function(g, [](double x) { return std::sin(x) + 0.3 * std::cos(3 * x); });
    const ScalarField d = gradient_1d(f);
    double sum = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i) sum += d[i];
    CHECK(std::abs(sum) <= 1e-12 * f.max_abs());
}

TEST_CASE("gradient_1d rejects radial grids") {
    const Grid g = Grid::radial(1.0, 32, 3);
    CHECK_THROWS_AS(gradient_1d(ScalarField(g)), std::invalid_argument);
}

TEST_CASE("divergence_radial: identity field has divergence N") {
    for (int N : {2, 3}) {
        const Grid g = Grid::radial(4.0, 128, N);
        const ScalarField f = ScalarField::from_function(g, [](double r) { return r; });
        const ScalarField d = divergence_radial(f);
        for (std::size_t i = 0; i < d.size(); ++i)
            CHECK(d[i] == doctest::Approx(static_cast<double>(N)).epsilon(1e-12));
    }
}

TEST_CASE("divergence_radial: zero field and axis validity") {
    const Grid g = Grid::radial(4.0, 64, 2);
    CHECK(divergence_radial(ScalarField(g)).max_abs() == 0.0);
    ScalarField bad = ScalarField::from_function(g, [](double r) { return r + 1.0; });
    CHECK_THROWS_AS(divergence_radial(bad), std::invalid_argument);
}

TEST_CASE("divergence_radial: gaussian profile converges at second order") {
    std::vector<double> errors;
    for (std::size_t n : {64u, 128u, 256u}) {
        const Grid g = Grid::radial(4.0, n, 2);
        errors.push_back(max_error(
            g,
            [](const Grid& gg) {
                return divergence_radial(ScalarField::from_function(
                    gg, [](double r) { return r * std::exp(-r * r); }));
            },
            [](double r) { return (2.0 - 2.0 * r * r) * std::exp(-r * r); }));
    }
    CHECK(min_observed_order(errors) >= 1.9);
}

TEST_CASE("laplacian_radial_scalar: quadratic exactness and refinement") {
    const Grid g = Grid::radial(2.0, 64, 3);
    const ScalarField sq = ScalarField::from_function(g, [](double r) { return r * r; });
    const ScalarField lap = laplacian_radial_scalar(sq);
    for (std::size_t i = 0; i < lap.size(); ++i)
        CHECK(lap[i] == doctest::Approx(6.0).epsilon(1e-10));
    CHECK(laplacian_radial_scalar(ScalarField::constant(g, 1.3)).max_abs() <= 1e-12);

    std::vector<double> errors;
    for (std::size_t n : {64u, 128u, 256u}) {
        const Grid gg = Grid::radial(4.0, n, 2);
        errors.push_back(max_error(
            gg,
            [](const Grid& grid) {
                return laplacian_radial_scalar(
                    ScalarField::from_function(grid, [](double r) { return std::exp(-r * r); }));
            },
            [](double r) { return (4.0 * r * r - 4.0) * std::exp(-r * r); }));
    }
    CHECK(min_observed_order(errors) >= 1.9);
}

TEST_CASE("laplacian_radial_scalar: axis value matches the Cartesian Laplacian") {
    // f = r^4 has Cartesian Laplacian (4N + 8) r^2, vanishing on the axis;
    // the discrete axis formula converges to it at O(h^2).
    double prev = 0.0;
    for (std::size_t n : {64u, 128u}) {
        const Grid g = Grid::radial(2.0, n, 3);
        const ScalarField f =
            ScalarField::from_function(g, [](double r) { return r * r * r * r; });
        const double axis = laplacian_radial_scalar(f)[0];
        if (prev > 0.0) CHECK(std::abs(axis) <= 0.3 * prev);
        prev = std::abs(axis);
    }
}

TEST_CASE("laplacian_radial_vector: linear and quadratic profiles") {
    const Grid g = Grid::radial(2.0, 64, 3);
    const ScalarField lin = ScalarField::from_function(g, [](double r) { return r; });
    CHECK(laplacian_radial_vector(lin).max_abs() <= 1e-11);

    // u1 = r^2: Cartesian check, Delta(|x| x_i) = (N+1) x_i / |x|, so the
    // radial component is N + 1 = 4 away from the axis.
    const ScalarField sq = ScalarField::from_function(g, [](double r) { return r * r; });
    const ScalarField lap = laplacian_radial_vector(sq);
    for (std::size_t i = 1; i < lap.size(); ++i)
        CHECK(lap[i] == doctest::Approx(4.0).epsilon(1e-9));

    CHECK(laplacian_radial_vector(ScalarField(g)).max_abs() == 0.0);
    const ScalarField bad = ScalarField::constant(g, 1.0);
    CHECK_THROWS_AS(laplacian_radial_vector(bad), std::invalid_argument);
}

TEST_CASE("laplacian_radial_vector: smooth odd profile converges at second order") {
    std::vector<double> errors;
    for (std::size_t n : {64u, 128u, 256u}) {
        const Grid g = Grid::radial(4.0, n, 3);
        errors.push_back(max_error(
            g,
            [](const Grid& grid) {
                return laplacian_radial_vector(ScalarField::from_function(
                    grid, [](double r) { return r * std::exp(-r * r); }));
            },
            [](double r) { return (4.0 * r * r * r - 10.0 * r) * std::exp(-r * r); }));
    }
    CHECK(min_observed_order(errors) >= 1.9);
}

TEST_CASE("weighted_div_grad: constant velocity gives zero for any density") {
    const double mu = 0.7;
    const Grid line = Grid::line(-2.0, 2.0, 96, BoundaryKind::farfield);
    const ScalarField rho_line =
        ScalarField::from_function(line, [](double x) { return 1.0 + 0.4 * std::exp(-x * x); });
    CHECK(weighted_div_grad(rho_line, ScalarField::constant(line, 0.8), mu).max_abs() <= 1e-11);

    const Grid rad = Grid::radial(4.0, 96, 3);
    const ScalarField rho_rad =
        ScalarField::from_function(rad, [](double r) { return 1.0 + 0.4 * std::exp(-r * r); });
    CHECK(weighted_div_grad(rho_rad, ScalarField(rad), mu).max_abs() == 0.0);
}

TEST_CASE("weighted_div_grad: rho = 1, u1 = r is in the kernel (radial)") {
    for (int N : {2, 3}) {
        const Grid g = Grid::radial(4.0, 128, N);
        const ScalarField rho = ScalarField::constant(g, 1.0);
        const ScalarField u = ScalarField::from_function(g, [](double r) { return r; });
        CHECK(weighted_div_grad(rho, u, 0.5).max_abs() <= 1e-11);
    }
}

TEST_CASE("weighted_div_grad: line sine profile converges at second order") {
    const double mu = 0.5;
    std::vector<double> errors;
    for (std::size_t n : {128u, 256u, 512u}) {
        const Grid g = Grid::line(0.0, 2.0 * kPi, n, BoundaryKind::periodic);
        errors.push_back(max_error(
            g,
            [&](const Grid& grid) {
                const ScalarField rho = ScalarField::from_function(
                    grid, [](double x) { return 1.0 + 0.3 * std::sin(x); });
                const ScalarField u =
                    ScalarField::from_function(grid, [](double x) { return std::sin(x); });
                return weighted_div_grad(rho, u, mu);
            },
            [&](double x) {
                const double rho = 1.0 + 0.3 * std::sin(x);
                const double drho = 0.3 * std::cos(x);
                return 2.0 * mu * (drho * std::cos(x) - rho * std::sin(x));
            }));
    }
    CHECK(errors[0] <= 5e-3);
    CHECK(min_observed_order(errors) >= 1.9);

    // rho = 1: reduces to 2 mu u'' = -2 mu sin.
    const Grid g = Grid::line(0.0, 2.0 * kPi, 512, BoundaryKind::periodic);
    const ScalarField u = ScalarField::from_function(g, [](double x) { return std::sin(x); });
    const ScalarField out = weighted_div_grad(ScalarField::constant(g, 1.0), u, mu);
    double err = 0.0;
    for (std::size_t i = 0; i < out.size(); ++i)
        err = std::max(err, std::abs(out[i] + 2.0 * mu * std::sin(g.node(i))));
    CHECK(err <= 5e-4);
}

TEST_CASE("weighted_div_grad: radial profile converges at second order") {
    const double mu = 0.5;
    std::vector<double> errors;
    for (std::size_t n : {64u, 128u, 256u}) {
        const Grid g = Grid::radial(4.0, n, 3);
        errors.push_back(max_error(
            g,
            [&](const Grid& grid) {
                const ScalarField rho = ScalarField::from_function(
                    grid, [](double r) { return 1.0 + 0.4 * std::exp(-r * r); });
                const ScalarField u = ScalarField::from_function(
                    grid, [](double r) { return r * std::exp(-r * r); });
                return weighted_div_grad(rho, u, mu);
            },
            [&](double r) {
                const double e = std::exp(-r * r);
                const double lap = (4 * r * r * r - 10 * r) * e;
                const double drho = -0.8 * r * e;
                const double du = (1 - 2 * r * r) * e;
                return 2 * mu * ((1 + 0.4 * e) * lap + drho * du);
            }));
    }
    CHECK(min_observed_order(errors) >= 1.9);
}

TEST_CASE("upwind_divergence: constants advected by constants telescope") {
    const Grid g = Grid::line(0.0, 1.0, 64, BoundaryKind::periodic);
    const ScalarField rho = ScalarField::constant(g, 1.4);
    const ScalarField v = ScalarField::constant(g, -0.6);
    CHECK(upwind_divergence(rho, v).max_abs() <= 1e-13);
}

TEST_CASE("operators are pure: identical inputs give bit-identical outputs") {
    const Grid g = Grid::radial(4.0, 64, 2);
    const ScalarField f =
        ScalarField::from_function(g, [](double r) { return r * std::exp(-0.5 * r * r); });
    const ScalarField a = divergence_radial(f);
    const ScalarField b = divergence_radial(f);
    CHECK(a == b);
    const Grid line = Grid::line(0.0, 2.0 * kPi, 64, BoundaryKind::periodic);
    const ScalarField s = ScalarField::from_function(line, [](double x) { return std::sin(x); });
    CHECK(gradient_1d(s) == gradient_1d(s));
}
