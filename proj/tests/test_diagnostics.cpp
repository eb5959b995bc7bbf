#include <cmath>
#include <numbers>

#include "doctest.h"
#include "effvel/diagnostics.hpp"
#include "effvel/solver.hpp"

using namespace effvel;

namespace {

constexpr double kPi = std::numbers::pi;

// Heat flow of the top-hat 1 + 1_{|x|<1} with diffusivity D: the two-front
// error-function solution.
double tophat_exact(double x, double t, double D) {
    const double s = std::sqrt(4.0 * D * t);
    return 1.0 + 0.5 * (std::erf((x + 1.0) / s) - std::erf((x - 1.0) / s));
}

double tophat_exact_grad_max(double t, double D) {
    const double s = std::sqrt(4.0 * D * t);
    double best = 0.0;
    for (int k = -4000; k <= 4000; ++k) {
        const double x = k * 1e-3;
        const double g = (std::exp(-std::pow((x + 1.0) / s, 2)) -
                          std::exp(-std::pow((x - 1.0) / s, 2))) /
                         (s * std::sqrt(kPi));
        best = std::max(best, std::abs(g));
    }
    return best;
}

Trajectory diffusion_tophat_run(std::size_t n, double T) {
    const Grid g = Grid::line(-4.0 * kPi, 4.0 * kPi, n, BoundaryKind::periodic);
    const ScalarField rho0 = ScalarField::from_function(
        g, [](double x) { return std::abs(x) < 1.0 ? 2.0 : 1.0; });
    const AugmentedState init = make_state(0.0, rho0, ScalarField(g), 0.5);
    SolverConfig cfg;
    cfg.final_time = T;
    cfg.theta = 0.5;  // backward Euler's O(dt) error is visible at t ~ 0.01
    cfg.dt_max = g.spacing() / 4.0;
    cfg.sample_stride = 5;
    return solve_augmented(init, PressureLaw(0.0, 2.0), cfg);
}

}  // namespace

TEST_CASE("energy: closed-form values") {
    const PressureLaw law(1.0, 2.0);
    {
        const Grid g = Grid::line(0.0, 2 * kPi, 128, BoundaryKind::periodic);
        const AugmentedState rest =
            make_state(0.0, ScalarField::constant(g, 1.0), ScalarField(g), 0.5);
        const EnergyValue e = energy(rest, law);
        CHECK(e.value == 0.0);
        CHECK(e.dissipation_rate == 0.0);

        // rho = 1, u = c: E = c^2/2 * |domain|.
        const double c = 0.4;
        const AugmentedState moving = make_state(
            0.0, ScalarField::constant(g, 1.0),
            effective_velocity(ScalarField::constant(g, 1.0), ScalarField::constant(g, c), 0.5),
            0.5);
        CHECK(energy(moving, law).value ==
              doctest::Approx(0.5 * c * c * 2 * kPi).epsilon(1e-12));
    }
    {
        const Grid g = Grid::line(0.0, 1.0, 128, BoundaryKind::periodic);
        const AugmentedState s =
            make_state(0.0, ScalarField::constant(g, 2.0), ScalarField(g), 0.5);
        // u = v - 2 mu grad(rho)/rho = 0, so only the potential part remains.
        CHECK(energy(s, law).value == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("bd entropy: closed forms and agreement with energy at constant rho") {
    const Grid g = Grid::line(0.0, 2 * kPi, 256, BoundaryKind::periodic);
    const PressureLaw law(1.0, 2.0);
    {
        const AugmentedState rest =
            make_state(0.0, ScalarField::constant(g, 1.0), ScalarField(g), 0.5);
        CHECK(bd_entropy(rest, law).value == 0.0);
    }
    {
        // Constant rho: v = u, so both functionals agree.
        const ScalarField v =
            ScalarField::from_function(g, [](double x) { return 0.3 * std::sin(x); });
        const AugmentedState s = make_state(0.0, ScalarField::constant(g, 1.5), v, 0.5);
        CHECK(bd_entropy(s, law).value ==
              doctest::Approx(energy(s, law).value).epsilon(1e-13));
    }
    {
        // gamma = 2, a = 1, rho = 1 + sin(x)/2, v = 0: E1 = sum (rho-1)^2 = pi/4.
        const ScalarField rho = ScalarField::from_function(
            g, [](double x) { return 1.0 + 0.5 * std::sin(x); });
        const AugmentedState s = make_state(0.0, rho, ScalarField(g), 0.5);
        CHECK(bd_entropy(s, law).value == doctest::Approx(0.25 * kPi).epsilon(1e-12));
    }
}

TEST_CASE("energy and bd entropy are nonnegative for positive densities") {
    const Grid g = Grid::radial(4.0, 128, 3);
    const PressureLaw law(0.7, 1.4);
    const ScalarField rho = ScalarField::from_function(
        g, [](double r) { return 0.6 + 0.8 * std::exp(-r * r); });
    const ScalarField v = ScalarField::from_function(
        g, [](double r) { return 0.4 * r * std::exp(-r * r); });
    const AugmentedState s = make_state(0.0, rho, v, 0.5);
    CHECK(energy(s, law).value >= 0.0);
    CHECK(bd_entropy(s, law).value >= 0.0);
    CHECK(energy(s, law).dissipation_rate >= 0.0);
    CHECK(bd_entropy(s, law).dissipation_rate >= 0.0);
}

TEST_CASE("lipschitz diagnostic: steady state grows exactly like sqrt(t)") {
    const Grid g = Grid::line(0.0, 2 * kPi, 64, BoundaryKind::periodic);
    Trajectory traj;
    for (int k = 0; k <= 8; ++k) {
        AugmentedState s =
            make_state(0.0, ScalarField::constant(g, 1.0), ScalarField(g), 0.5);
        s.t = 0.1 * k;
        traj.samples.push_back(std::move(s));
    }
    const FunctionalSeries series = lipschitz_diagnostic(traj, 0.5);
    for (std::size_t k = 0; k < series.times.size(); ++k)
        CHECK(series.values[k] == doctest::Approx(std::sqrt(series.times[k])).epsilon(1e-13));
}

TEST_CASE("lipschitz diagnostic: diffusing top-hat matches the erf solution") {
    const double D = 1.0;  // 2 mu with mu = 1/2
    const Trajectory traj = diffusion_tophat_run(1024, 1.0);
    const FunctionalSeries series = lipschitz_diagnostic(traj, 0.5);
    std::size_t checked = 0;
    for (std::size_t k = 0; k < series.times.size(); ++k) {
        const double t = series.times[k];
        if (t < 0.01) continue;
        const double exact_sup = tophat_exact(0.0, t, D);
        const double exact = std::sqrt(t) * (exact_sup + tophat_exact_grad_max(t, D));
        CHECK(std::abs(series.values[k] - exact) <= 0.05 * exact);
        ++checked;
    }
    CHECK(checked >= 10);

    // sqrt(t)||m||_inf = sqrt(t) 2mu ||grad rho||_inf for this run.
    const SupNormSeries sup = sup_norm_series(traj);
    for (std::size_t k = 0; k < sup.sqrt_t_m_max.times.size(); ++k) {
        const double t = sup.sqrt_t_m_max.times[k];
        if (t < 0.01) continue;
        const double exact = std::sqrt(t) * 2.0 * 0.5 * tophat_exact_grad_max(t, D);
        CHECK(std::abs(sup.sqrt_t_m_max.values[k] - exact) <= 0.05 * exact);
    }
}

TEST_CASE("sup norm series: steady state is constant, upwind transport is monotone") {
    const Grid g = Grid::line(0.0, 2 * kPi, 256, BoundaryKind::periodic);
    SolverConfig cfg;
    cfg.final_time = 0.3;
    cfg.sample_stride = 5;
    {
        const Trajectory traj = solve_augmented(
            make_state(0.0, ScalarField::constant(g, 1.0), ScalarField(g), 0.5),
            PressureLaw(1.0, 2.0), cfg);
        const SupNormSeries s = sup_norm_series(traj);
        for (double v : s.rho_max.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-13));
        for (double v : s.v_max.values) CHECK(v <= 1e-13);
    }
    {
        // Pressureless: ||v||_inf is non-increasing under upwind transport.
        const ScalarField rho0 = ScalarField::constant(g, 1.0);
        const ScalarField v0 =
            ScalarField::from_function(g, [](double x) { return 0.3 * std::sin(x); });
        const Trajectory traj = solve_augmented(make_state(0.0, rho0, v0, 0.5),
                                                PressureLaw(0.0, 2.0), cfg);
        const SupNormSeries s = sup_norm_series(traj);
        for (std::size_t k = 1; k < s.v_max.values.size(); ++k)
            CHECK(s.v_max.values[k] <= s.v_max.values[k - 1] + 1e-14);
    }
}

TEST_CASE("monotonicity check") {
    FunctionalSeries decreasing{"dec", {0.0, 0.1, 0.2, 0.3}, {3.0, 2.0, 1.5, 1.0}};
    CHECK(monotonicity_check(decreasing, 0.0).pass);

    const double tol = 1e-3;
    FunctionalSeries jumpy{"jump", {0.0, 0.1, 0.2, 0.3}, {1.0, 0.9, 0.9 + 2 * tol * 1.9, 0.8}};
    const MonotonicityReport r = monotonicity_check(jumpy, tol);
    CHECK_FALSE(r.pass);
    CHECK(r.worst_index == 2);
    CHECK(r.worst_time == doctest::Approx(0.2));
}

TEST_CASE("growth bound checks") {
    const Grid g = Grid::line(0.0, 2 * kPi, 128, BoundaryKind::periodic);
    const PressureLaw law(1.0, 2.0);
    SolverConfig cfg;
    cfg.final_time = 0.2;
    cfg.sample_stride = 5;

    // Steady state passes both kinds for any K >= 1.
    const Trajectory steady = solve_augmented(
        make_state(0.0, ScalarField::constant(g, 1.0), ScalarField(g), 0.5), law, cfg);
    CHECK(growth_bound_check(steady, GrowthBoundKind::density_exponential, 1.0, law).pass);
    CHECK(growth_bound_check(steady, GrowthBoundKind::velocity_duhamel, 1.0, law).pass);

    // v = 0 diffusion run: the density bound holds with K = 1 by the discrete
    // maximum principle (theta = 1).
    cfg.theta = 1.0;
    const ScalarField rho0 = ScalarField::from_function(
        g, [](double x) { return std::abs(x - kPi) < 1.0 ? 2.0 : 1.0; });
    const Trajectory diff = solve_augmented(make_state(0.0, rho0, ScalarField(g), 0.5),
                                            PressureLaw(0.0, 2.0), cfg);
    const GrowthBoundReport r =
        growth_bound_check(diff, GrowthBoundKind::density_exponential, 1.0, law);
    CHECK(r.pass);
}
