#include "effvel/solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "effvel/operators.hpp"
#include "effvel/tridiag.hpp"

namespace effvel {

namespace {

// Rows of the discrete Laplacian acting on the deviation from the far state
// (far-field ghosts are zero; periodic grids wrap through the corner terms).
struct LaplacianRows {
    TridiagonalSystem sys;
    double corner_lower = 0.0;  // A[0][n-1], periodic only
    double corner_upper = 0.0;  // A[n-1][0], periodic only
};

LaplacianRows laplacian_rows(const Grid& g) {
    const std::size_t n = g.node_count();
    const double h = g.spacing();
    const double ih2 = 1.0 / (h * h);
    LaplacianRows L;
    L.sys.lower.assign(n, 0.0);
    L.sys.diag.assign(n, 0.0);
    L.sys.upper.assign(n, 0.0);

    if (g.kind() == GridKind::line1d) {
        for (std::size_t i = 0; i < n; ++i) {
            L.sys.lower[i] = ih2;
            L.sys.diag[i] = -2.0 * ih2;
            L.sys.upper[i] = ih2;
        }
        if (g.is_periodic()) {
            L.corner_lower = ih2;
            L.corner_upper = ih2;
        }
        // Far-field rows keep the same coefficients; the ghost value of the
        // deviation is zero, so the out-of-range entries simply drop.
        return L;
    }

    const int N = g.dimension();
    // r = 0: Lap f(0) = N f''(0) with even symmetry.
    L.sys.diag[0] = -2.0 * N * ih2;
    L.sys.upper[0] = 2.0 * N * ih2;
    for (std::size_t i = 1; i < n; ++i) {
        const double r = g.node(i);
        const double drift = (N - 1) / (2.0 * h * r);
        L.sys.lower[i] = ih2 - drift;
        L.sys.diag[i] = -2.0 * ih2;
        L.sys.upper[i] = ih2 + drift;
    }
    return L;
}

std::vector<double> apply_rows(const LaplacianRows& L, const std::vector<double>& x) {
    const std::size_t n = x.size();
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        double v = L.sys.diag[i] * x[i];
        if (i > 0) v += L.sys.lower[i] * x[i - 1];
        if (i + 1 < n) v += L.sys.upper[i] * x[i + 1];
        y[i] = v;
    }
    y[0] += L.corner_lower * x[n - 1];
    y[n - 1] += L.corner_upper * x[0];
    return y;
}

std::vector<double> solve_shifted(const LaplacianRows& L, double scale, double shift_diag,
                                  const std::vector<double>& rhs) {
    // Solves (shift_diag I - scale L) x = rhs.
    TridiagonalSystem sys;
    const std::size_t n = rhs.size();
    sys.lower.resize(n);
    sys.diag.resize(n);
    sys.upper.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        sys.lower[i] = -scale * L.sys.lower[i];
        sys.diag[i] = shift_diag - scale * L.sys.diag[i];
        sys.upper[i] = -scale * L.sys.upper[i];
    }
    if (L.corner_lower != 0.0 || L.corner_upper != 0.0)
        return solve_cyclic_tridiagonal(sys, -scale * L.corner_lower,
                                        -scale * L.corner_upper, rhs);
    return solve_tridiagonal(sys, rhs);
}

void check_state(const ScalarField& rho, const ScalarField& v, double floor, double t) {
    for (std::size_t i = 0; i < rho.size(); ++i) {
        if (!std::isfinite(rho[i]) || !std::isfinite(v[i]))
            throw SolverAbort("solver: non-finite value at t = " + std::to_string(t) +
                                  ", node " + std::to_string(i),
                              t, i);
        if (rho[i] < floor)
            throw SolverAbort("solver: density " + std::to_string(rho[i]) +
                                  " below floor at t = " + std::to_string(t) + ", node " +
                                  std::to_string(i),
                              t, i);
    }
}

}  // namespace

void SolverConfig::validate() const {
    if (!(cfl > 0.0 && cfl <= 1.0))
        throw std::invalid_argument("SolverConfig: cfl must lie in (0, 1]");
    if (!(theta >= 0.5 && theta <= 1.0))
        throw std::invalid_argument("SolverConfig: theta must lie in [1/2, 1]");
    if (!(final_time > 0.0))
        throw std::invalid_argument("SolverConfig: final time must be positive");
    if (sample_stride == 0)
        throw std::invalid_argument("SolverConfig: sample stride must be >= 1");
    if (dt_max < 0.0) throw std::invalid_argument("SolverConfig: dt_max must be >= 0");
}

double SolverConfig::effective_dt_max(const Grid& grid) const {
    return dt_max > 0.0 ? dt_max : grid.spacing();
}

double cfl_dt(const AugmentedState& state, const PressureLaw& law, const SolverConfig& cfg) {
    const double speed = std::max({state.velocity(cfg.density_floor).max_abs(),
                                   state.v.max_abs(), 1e-30});
    double dt = std::min(cfg.cfl * state.grid().spacing() / speed,
                         cfg.effective_dt_max(state.grid()));
    double rate = 0.0;
    for (std::size_t i = 0; i < state.rho.size(); ++i)
        rate = std::max(rate, law.relaxation_rate(state.rho[i], state.mu));
    if (rate > 0.0) dt = std::min(dt, 1.0 / rate);
    return dt;
}

ScalarField step_density(const ScalarField& rho, const ScalarField& v, double dt,
                         double mu, double theta) {
    require_same_grid(rho, v, "step_density");
    const Grid& g = rho.grid();
    const std::size_t n = rho.size();
    const LaplacianRows L = laplacian_rows(g);

    std::vector<double> delta(n);
    for (std::size_t i = 0; i < n; ++i) delta[i] = rho[i] - kFarDensity;

    const ScalarField adv = upwind_divergence(rho, v);
    std::vector<double> rhs = apply_rows(L, delta);
    for (std::size_t i = 0; i < n; ++i)
        rhs[i] = delta[i] + 2.0 * mu * (1.0 - theta) * dt * rhs[i] - dt * adv[i];

    std::vector<double> next = solve_shifted(L, 2.0 * mu * theta * dt, 1.0, rhs);
    ScalarField out(g);
    for (std::size_t i = 0; i < n; ++i) out[i] = kFarDensity + next[i];
    return out;
}

ScalarField step_effective_velocity_1d(const ScalarField& v, const ScalarField& u,
                                       const ScalarField& rho, double dt,
                                       const PressureLaw& law, double floor) {
    require_positive(rho, "step_effective_velocity_1d", floor);
    const ScalarField dv = upwind_derivative(v, u);
    const ScalarField dF = gradient_1d(enthalpy(rho, law));
    ScalarField out = v;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= dt * (u[i] * dv[i] + dF[i]);
    return out;
}

ScalarField step_effective_velocity_radial(const ScalarField& v, const ScalarField& u,
                                           const ScalarField& rho, double dt,
                                           const PressureLaw& law, double mu,
                                           double floor) {
    require_positive(rho, "step_effective_velocity_radial", floor);
    const ScalarField dv = upwind_derivative(v, u);
    ScalarField out = v;
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double v_adv = v[i] - dt * u[i] * dv[i];
        const double decay = std::exp(-dt * law.relaxation_rate(rho[i], mu));
        out[i] = u[i] + (v_adv - u[i]) * decay;
    }
    return out;
}

Trajectory solve_augmented(const AugmentedState& init, const PressureLaw& law,
                           const SolverConfig& cfg) {
    cfg.validate();
    if (init.t != 0.0)
        throw std::invalid_argument("solve_augmented: initial state must be at t = 0");
    const Grid& g = init.grid();
    const bool radial = g.is_radial();
    const double mu = init.mu;
    const double T = cfg.final_time;

    ScalarField rho = init.rho;
    ScalarField v = init.v;
    check_state(rho, v, cfg.density_floor, 0.0);
    ScalarField u = velocity_from(rho, init.m, cfg.density_floor);

    Trajectory traj;
    traj.samples.push_back(init);

    // Consecutive sampled times never more than double (the Carleson-scan
    // sampling requirement): dt is capped at the next dyadic horizon and an
    // extra sample is recorded whenever elapsed time reaches it.
    double t_sampled = 0.0;

    double t = 0.0;
    std::size_t step = 0;
    while (t < T * (1.0 - 1e-14)) {
        AugmentedState now;
        now.t = t;
        now.rho = rho;
        now.v = v;
        now.m = momentum_from(rho, v, mu);
        now.mu = mu;
        double dt = std::min(cfl_dt(now, law, cfg), T - t);
        if (t_sampled > 0.0) dt = std::min(dt, 2.0 * t_sampled - t);

        rho = step_density(rho, v, dt, mu, cfg.theta);
        check_state(rho, v, cfg.density_floor, t + dt);
        v = radial
                ? step_effective_velocity_radial(v, u, rho, dt, law, mu, cfg.density_floor)
                : step_effective_velocity_1d(v, u, rho, dt, law, cfg.density_floor);
        check_state(rho, v, cfg.density_floor, t + dt);
        const ScalarField m = momentum_from(rho, v, mu);
        u = velocity_from(rho, m, cfg.density_floor);

        t += dt;
        ++step;
        traj.steps.push_back(
            {t, dt, rho.min(), rho.max(), v.max_abs(), u.max_abs()});
        const bool last = !(t < T * (1.0 - 1e-14));
        const bool dyadic =
            t_sampled > 0.0 && t >= 2.0 * t_sampled * (1.0 - 1e-9);
        if (step % cfg.sample_stride == 0 || last || dyadic) {
            AugmentedState s;
            s.t = t;
            s.rho = rho;
            s.m = m;
            s.v = v;
            s.mu = mu;
            traj.samples.push_back(std::move(s));
            t_sampled = t;
        }
    }
    return traj;
}

Trajectory solve_classical_1d(const ScalarField& rho0, const ScalarField& u0,
                              const PressureLaw& law, double mu, const SolverConfig& cfg) {
    cfg.validate();
    const Grid& g = rho0.grid();
    if (g.kind() != GridKind::line1d)
        throw std::invalid_argument("solve_classical_1d: expects a line1d grid");
    require_same_grid(rho0, u0, "solve_classical_1d");

    const std::size_t n = rho0.size();
    const double h = g.spacing();
    const double T = cfg.final_time;

    ScalarField rho = rho0;
    ScalarField u = u0;
    check_state(rho, u, cfg.density_floor, 0.0);

    // rho-weighted diffusion rows d/dx(rho d/dx u) with far-field ghosts
    // clamped to (rho, u) = (1, 0); rho is frozen at the old step.
    auto momentum_rows = [&](const ScalarField& r) {
        LaplacianRows L;
        L.sys.lower.assign(n, 0.0);
        L.sys.diag.assign(n, 0.0);
        L.sys.upper.assign(n, 0.0);
        const double ih2 = 1.0 / (h * h);
        for (std::size_t i = 0; i < n; ++i) {
            const double r_left =
                (i > 0) ? 0.5 * (r[i - 1] + r[i])
                        : (g.is_periodic() ? 0.5 * (r[n - 1] + r[0])
                                           : 0.5 * (kFarDensity + r[0]));
            const double r_right =
                (i + 1 < n) ? 0.5 * (r[i] + r[i + 1])
                            : (g.is_periodic() ? 0.5 * (r[n - 1] + r[0])
                                               : 0.5 * (r[n - 1] + kFarDensity));
            L.sys.lower[i] = r_left * ih2;
            L.sys.diag[i] = -(r_left + r_right) * ih2;
            L.sys.upper[i] = r_right * ih2;
        }
        if (g.is_periodic()) {
            L.corner_lower = L.sys.lower[0];
            L.corner_upper = L.sys.upper[n - 1];
        }
        return L;
    };

    auto derived_state = [&](double t, const ScalarField& r, const ScalarField& vel) {
        return make_state(t, r, effective_velocity(r, vel, mu), mu);
    };

    Trajectory traj;
    traj.samples.push_back(derived_state(0.0, rho, u));

    double t_sampled = 0.0;

    double t = 0.0;
    std::size_t step = 0;
    while (t < T * (1.0 - 1e-14)) {
        const AugmentedState now = derived_state(t, rho, u);
        double dt = std::min(cfl_dt(now, law, cfg), T - t);
        if (t_sampled > 0.0) dt = std::min(dt, 2.0 * t_sampled - t);

        const ScalarField mass_flux = upwind_divergence(rho, u);
        ScalarField rho_new = rho;
        for (std::size_t i = 0; i < n; ++i) rho_new[i] -= dt * mass_flux[i];
        check_state(rho_new, u, cfg.density_floor, t + dt);

        const ScalarField m_old = multiply(rho, u);
        const ScalarField mom_flux = upwind_divergence(m_old, u);
        const ScalarField dP = gradient_1d(pressure(rho, law));
        const LaplacianRows L = momentum_rows(rho);
        const std::vector<double> diff_old = apply_rows(L, u.values());

        std::vector<double> rhs(n);
        for (std::size_t i = 0; i < n; ++i)
            rhs[i] = m_old[i] / dt - mom_flux[i] - dP[i] +
                     2.0 * mu * (1.0 - cfg.theta) * diff_old[i];

        // (rho'/dt) u' - 2 mu theta L u' = rhs, row i scaled by rho'_i/dt.
        TridiagonalSystem sys;
        sys.lower.resize(n);
        sys.diag.resize(n);
        sys.upper.resize(n);
        const double scale = 2.0 * mu * cfg.theta;
        for (std::size_t i = 0; i < n; ++i) {
            sys.lower[i] = -scale * L.sys.lower[i];
            sys.diag[i] = rho_new[i] / dt - scale * L.sys.diag[i];
            sys.upper[i] = -scale * L.sys.upper[i];
        }
        std::vector<double> u_new =
            g.is_periodic() ? solve_cyclic_tridiagonal(sys, -scale * L.corner_lower,
                                                       -scale * L.corner_upper, rhs)
                            : solve_tridiagonal(sys, rhs);

        rho = rho_new;
        u = ScalarField(g, std::move(u_new));
        check_state(rho, u, cfg.density_floor, t + dt);

        t += dt;
        ++step;
        const ScalarField v = effective_velocity(rho, u, mu);
        traj.steps.push_back({t, dt, rho.min(), rho.max(), v.max_abs(), u.max_abs()});
        const bool last = !(t < T * (1.0 - 1e-14));
        const bool dyadic =
            t_sampled > 0.0 && t >= 2.0 * t_sampled * (1.0 - 1e-9);
        if (step % cfg.sample_stride == 0 || last || dyadic) {
            traj.samples.push_back(make_state(t, rho, v, mu));
            t_sampled = t;
        }
    }
    return traj;
}

}  // namespace effvel
