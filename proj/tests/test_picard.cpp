#include <cmath>
#include <numbers>

#include "doctest.h"
#include "effvel/heat.hpp"
#include "effvel/picard.hpp"
#include "effvel/solver.hpp"

using namespace effvel;

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

TEST_CASE("picard: constant state is a fixed point after one sweep") {
    const Grid g = Grid::line(0.0, 2 * kPi, 128, BoundaryKind::periodic);
    const AugmentedState init =
        make_state(0.0, ScalarField::constant(g, 1.0), ScalarField(g), 0.5);
    const PicardResult result =
        picard_mild_solve(init, PressureLaw(1.0, 2.0), 0.1, 10, 1e-10, 16);
    CHECK(result.iterations <= 2);
    for (const auto& s : result.trajectory.samples) {
        CHECK(sup_distance(s.rho, ScalarField::constant(g, 1.0)) <= 1e-12);
        CHECK(s.v.max_abs() <= 1e-12);
    }
}

TEST_CASE("picard: pressureless density is exactly the heat flow") {
    const Grid g = Grid::line(0.0, 2 * kPi, 256, BoundaryKind::periodic);
    const double mu = 0.5, T = 0.1;
    const ScalarField rho0 = ScalarField::from_function(
        g, [](double x) { return 1.0 + 0.2 * std::sin(x); });
    const AugmentedState init = make_state(0.0, rho0, ScalarField(g), mu);
    const PicardResult result =
        picard_mild_solve(init, PressureLaw(0.0, 2.0), T, 10, 1e-10, 32);
    const ScalarField exact = heat_semigroup(rho0, T, 2.0 * mu, 1.0);
    CHECK(sup_distance(result.trajectory.final().rho, exact) <= 1e-6);
    CHECK(result.trajectory.final().v.max_abs() <= 1e-12);
}

TEST_CASE("picard vs finite differences on small smooth data") {
    const Grid g = Grid::line(0.0, 2 * kPi, 512, BoundaryKind::periodic);
    const double mu = 0.5, T = 0.05;
    const PressureLaw law(1.0, 2.0);
    const ScalarField rho0 = ScalarField::from_function(
        g, [](double x) { return 1.0 + 0.01 * std::sin(x); });
    const ScalarField v0 =
        ScalarField::from_function(g, [](double x) { return 0.01 * std::cos(x); });
    const AugmentedState init = make_state(0.0, rho0, v0, mu);

    const PicardResult picard = picard_mild_solve(init, law, T, 10, 1e-10, 64);
    CHECK(picard.iterations <= 10);

    SolverConfig cfg;
    cfg.final_time = T;
    cfg.dt_max = g.spacing() / 4.0;
    cfg.sample_stride = 64;
    const Trajectory fd = solve_augmented(init, law, cfg);

    CHECK(sup_distance(picard.trajectory.final().rho, fd.final().rho) <= 1e-3);
    CHECK(sup_distance(picard.trajectory.final().v, fd.final().v) <= 1e-3);
    CHECK(sup_distance(picard.trajectory.final().m, fd.final().m) <= 1e-3);
}

TEST_CASE("picard: radial geometry against the finite-difference solver") {
    const Grid g = Grid::radial(6.0, 128, 3);
    const double mu = 0.5, T = 0.05;
    const PressureLaw law(1.0, 2.0);
    const ScalarField rho0 = ScalarField::from_function(
        g, [](double r) { return 1.0 + 0.01 * std::exp(-r * r); });
    const ScalarField v0 = ScalarField::from_function(
        g, [](double r) { return 0.005 * r * std::exp(-r * r); });
    const AugmentedState init = make_state(0.0, rho0, v0, mu);

    const PicardResult picard = picard_mild_solve(init, law, T, 12, 1e-9, 32);
    SolverConfig cfg;
    cfg.final_time = T;
    cfg.sample_stride = 32;
    const Trajectory fd = solve_augmented(init, law, cfg);
    CHECK(sup_distance(picard.trajectory.final().rho, fd.final().rho) <= 5e-3);
    CHECK(sup_distance(picard.trajectory.final().v, fd.final().v) <= 5e-3);
}

TEST_CASE("picard: declines when the horizon is too large") {
    const Grid g = Grid::line(0.0, 2 * kPi, 128, BoundaryKind::periodic);
    const ScalarField rho0 = ScalarField::from_function(
        g, [](double x) { return 1.0 + 0.5 * std::sin(x); });
    const ScalarField v0 = ScalarField::from_function(
        g, [](double x) { return 0.5 * std::cos(x); });
    const AugmentedState init = make_state(0.0, rho0, v0, 0.5);
    CHECK_THROWS_AS(picard_mild_solve(init, PressureLaw(1.0, 2.0), 10.0, 6, 1e-10, 32),
                    PicardDivergence);
}
