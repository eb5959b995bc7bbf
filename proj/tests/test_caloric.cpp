#include <cmath>
#include <numbers>

#include "doctest.h"
#include "effvel/caloric.hpp"

using namespace effvel;

namespace {

constexpr double kPi = std::numbers::pi;

CaloricConfig default_cfg() { return CaloricConfig{}; }

// For m0 = sin on [0, 2pi], the heat extension is e^{-s} sin, so the
// Carleson value at anchor x and time t reduces to
//   t^{-1/2} * (1 - e^{-2t})/2 * [sqrt(t) - cos(2x) sin(2 sqrt t)/2],
// and the sup over anchors picks cos(2x) = -sign(sin(2 sqrt t)).
double sin_bmo_closed_form(const CaloricConfig& cfg) {
    double best = 0.0;
    for (double t : cfg.ladder()) {
        const double r = std::sqrt(t);
        const double s_int = 0.5 * (1.0 - std::exp(-2.0 * t));
        const double ball = r + 0.5 * std::abs(std::sin(2.0 * r));
        best = std::max(best, s_int * ball / r);
    }
    return std::sqrt(best);
}

Trajectory constant_momentum_trajectory(const Grid& g, double c, double T, std::size_t steps) {
    Trajectory traj;
    for (std::size_t k = 0; k <= steps; ++k) {
        AugmentedState s;
        s.t = T * static_cast<double>(k) / static_cast<double>(steps);
        s.rho = ScalarField::constant(g, 1.0);
        s.v = ScalarField::constant(g, c);
        s.m = ScalarField::constant(g, c);
        s.mu = 0.5;
        traj.samples.push_back(std::move(s));
    }
    return traj;
}

}  // namespace

TEST_CASE("sphere-ball overlap weights integrate to the ball volume") {
    for (int N : {2, 3}) {
        for (double d : {0.0, 0.5, 2.0}) {
            const double R = 1.3;
            const int steps = 20000;
            const double rho_max = d + R + 0.5;
            double vol = 0.0;
            for (int k = 0; k <= steps; ++k) {
                const double rho = rho_max * k / steps;
                double w = rho_max / steps;
                if (k == 0 || k == steps) w *= 0.5;
                vol += sphere_ball_overlap(N, rho, d, R) * w;
            }
            // The overlap weight has derivative kinks at |d - R| and d + R,
            // so the test's own trapezoid rule is the accuracy limit here.
            const double exact = N == 2 ? kPi * R * R : 4.0 / 3.0 * kPi * R * R * R;
            CHECK(vol == doctest::Approx(exact).epsilon(1e-4));
        }
    }
    CHECK(sphere_ball_overlap(3, 5.0, 1.0, 1.0) == 0.0);
    CHECK(sphere_ball_overlap(2, 0.2, 0.0, 1.0) == doctest::Approx(2 * kPi * 0.2));
}

TEST_CASE("ball integral of a constant is exactly the interval length (1D)") {
    const Grid g = Grid::line(0.0, 2 * kPi, 256, BoundaryKind::periodic);
    const ScalarField q = ScalarField::constant(g, 0.8);
    for (double r : {0.05, 0.7, 1.9}) {
        for (std::size_t anchor : {std::size_t(0), std::size_t(100), std::size_t(255)})
            CHECK(ball_integral(q, anchor, r) == doctest::Approx(2 * r * 0.8).epsilon(1e-13));
    }
    // Wrapping more than one period accumulates whole-period mass.
    CHECK(ball_integral(q, 7, 2 * kPi) == doctest::Approx(4 * kPi * 0.8).epsilon(1e-13));
}

TEST_CASE("ball integral wraps non-constant fields across the period end") {
    const Grid g = Grid::line(0.0, 2 * kPi, 256, BoundaryKind::periodic);
    const ScalarField q =
        ScalarField::from_function(g, [](double x) { return 2.0 + std::sin(x); });
    // Interval [-1, 1] around the anchor at x = 0 crosses the period end;
    // the sine part integrates to zero there.
    CHECK(ball_integral(q, 0, 1.0) == doctest::Approx(4.0).epsilon(1e-4));
    // Anchor near the right edge: [x-1, x+1] with x = node(250).
    const double x = g.node(250);
    const double exact = 2.0 * 2.0 - (std::cos(x + 1.0) - std::cos(x - 1.0));
    CHECK(ball_integral(q, 250, 1.0) == doctest::Approx(exact).epsilon(1e-4));
}

TEST_CASE("bmo_inv norm: zero field and argument checks") {
    const Grid g = Grid::line(0.0, 2 * kPi, 128, BoundaryKind::periodic);
    CHECK(bmo_inv_norm(ScalarField(g), default_cfg()).value == 0.0);
    CaloricConfig bad = default_cfg();
    bad.horizon = 2.0;
    CHECK_THROWS_AS(bmo_inv_norm(ScalarField(g), bad), std::invalid_argument);
    bad = default_cfg();
    bad.ladder_rungs = 2;
    CHECK_THROWS_AS(bmo_inv_norm(ScalarField(g), bad), std::invalid_argument);
}

TEST_CASE("bmo_inv norm: homogeneity to rounding") {
    const Grid g = Grid::line(0.0, 2 * kPi, 256, BoundaryKind::periodic);
    const ScalarField m0 = ScalarField::from_function(
        g, [](double x) { return std::sin(x) + 0.4 * std::cos(3 * x); });
    CaloricConfig cfg = default_cfg();
    cfg.ladder_rungs = 10;
    const double base = bmo_inv_norm(m0, cfg).value;
    const double scaled = bmo_inv_norm(-2.5 * m0, cfg).value;
    CHECK(std::abs(scaled - 2.5 * base) <= 1e-12 * (2.5 * base));
}

TEST_CASE("bmo_inv norm: sin eigenfunction closed form") {
    const Grid g = Grid::line(0.0, 2 * kPi, 1024, BoundaryKind::periodic);
    const ScalarField m0 = ScalarField::from_function(g, [](double x) { return std::sin(x); });
    const CaloricConfig cfg = default_cfg();
    const double value = bmo_inv_norm(m0, cfg).value;
    CHECK(std::abs(value - sin_bmo_closed_form(cfg)) <= 1e-4);
}

TEST_CASE("Koch-Tataru norm: constant-field closed forms") {
    const Grid g = Grid::line(0.0, 2 * kPi, 256, BoundaryKind::periodic);
    const double c = 0.7, T = 0.5;
    const Trajectory traj = constant_momentum_trajectory(g, c, T, 64);
    const NormReport report = koch_tataru_norm(traj, T);
    CHECK(std::abs(report.components.at("sup_part") - c * std::sqrt(T)) <= 1e-6);
    CHECK(std::abs(report.components.at("carleson_part") - c * std::sqrt(2.0 * T)) <= 1e-6);
    CHECK(report.value ==
          doctest::Approx(report.components.at("sup_part") +
                          report.components.at("carleson_part")));

    // Homogeneity of the sup-part.
    const Trajectory scaled = constant_momentum_trajectory(g, 3.0 * c, T, 64);
    CHECK(koch_tataru_norm(scaled, T).components.at("sup_part") ==
          doctest::Approx(3.0 * report.components.at("sup_part")).epsilon(1e-12));
}

TEST_CASE("Koch-Tataru norm: the sup-part dominates every sample") {
    const Grid g = Grid::line(0.0, 2 * kPi, 128, BoundaryKind::periodic);
    Trajectory traj;
    const double T = 0.4;
    for (std::size_t k = 0; k <= 32; ++k) {
        AugmentedState s;
        s.t = T * k / 32.0;
        s.rho = ScalarField::constant(g, 1.0);
        s.v = ScalarField(g);
        s.m = ScalarField::from_function(
            g, [&](double x) { return std::sin(x + s.t) * std::exp(-s.t); });
        s.mu = 0.5;
        traj.samples.push_back(std::move(s));
    }
    const NormReport report = koch_tataru_norm(traj, T);
    for (const auto& s : traj.samples)
        CHECK(std::sqrt(s.t) * s.m.max_abs() <= report.components.at("sup_part") + 1e-14);
}

TEST_CASE("Koch-Tataru norm: trajectory validation") {
    const Grid g = Grid::line(0.0, 2 * kPi, 32, BoundaryKind::periodic);
    std::vector<double> times{0.0, 0.1, 0.05};
    std::vector<ScalarField> fields(3, ScalarField(g));
    CHECK_THROWS_AS(koch_tataru_norm(times, fields, 1.0), std::invalid_argument);
    times = {0.0, 0.01, 0.1};  // ratio 10 > 2
    CHECK_THROWS_AS(koch_tataru_norm(times, fields, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(koch_tataru_norm(std::vector<double>{}, {}, 1.0), std::invalid_argument);
}

TEST_CASE("caloric Besov proxy: sin closed form at order -1") {
    // sup_t sqrt(t) e^{-k^2 t} = (2 e k^2)^{-1/2} at t = 1/(2k^2); the ladder
    // contains that t exactly for k = 1 (t = 1/2) and k = 2 (t = 1/8).
    const Grid g = Grid::line(0.0, 2 * kPi, 512, BoundaryKind::periodic);
    const CaloricConfig cfg = default_cfg();
    for (int k : {1, 2}) {
        const ScalarField f =
            ScalarField::from_function(g, [&](double x) { return std::sin(k * x); });
        const double expected = 1.0 / std::sqrt(2.0 * std::numbers::e * k * k);
        CHECK(std::abs(caloric_besov_proxy(f, -1, cfg).value - expected) <= 1e-6);
    }
    CHECK(caloric_besov_proxy(ScalarField(g), -1, cfg).value == 0.0);
    CHECK(caloric_besov_proxy(ScalarField(g), +1, cfg).value == 0.0);
    const ScalarField f = ScalarField::from_function(g, [](double x) { return std::sin(x); });
    const double base = caloric_besov_proxy(f, +1, cfg).value;
    CHECK(caloric_besov_proxy(4.0 * f, +1, cfg).value ==
          doctest::Approx(4.0 * base).epsilon(1e-12));
    CHECK_THROWS_AS(caloric_besov_proxy(f, 0, cfg), std::invalid_argument);
}

TEST_CASE("bilinear Duhamel term vanishes for momentum-free trajectories") {
    const Grid g = Grid::line(0.0, 2 * kPi, 64, BoundaryKind::periodic);
    Trajectory traj;
    for (std::size_t k = 0; k <= 8; ++k) {
        AugmentedState s;
        s.t = 0.05 * k;
        s.rho = ScalarField::constant(g, 1.0);
        s.v = ScalarField::constant(g, 0.3);
        s.m = ScalarField(g);
        s.mu = 0.5;
        traj.samples.push_back(std::move(s));
    }
    const auto fields = bilinear_duhamel(traj, 0.4);
    for (const auto& f : fields) CHECK(f.max_abs() <= 1e-14);
}
