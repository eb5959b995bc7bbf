#include "effvel/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "effvel/caloric.hpp"
#include "effvel/operators.hpp"

namespace effvel {

namespace {

template <class Fn>
FunctionalSeries series_of(const Trajectory& traj, std::string name, Fn&& fn) {
    FunctionalSeries s;
    s.name = std::move(name);
    for (const auto& sample : traj.samples) {
        s.times.push_back(sample.t);
        s.values.push_back(fn(sample));
    }
    return s;
}

// |D u|^2 for the simulated geometry: (du/dx)^2 on lines,
// (du1/dr)^2 + (N-1)(u1/r)^2 on radial grids.
ScalarField strain_squared(const ScalarField& u) {
    const Grid& g = u.grid();
    if (g.kind() == GridKind::line1d) {
        ScalarField d = gradient_1d(u);
        for (std::size_t i = 0; i < d.size(); ++i) d[i] *= d[i];
        return d;
    }
    const ScalarField d = radial_derivative(u, Parity::odd);
    ScalarField out(g);
    const int N = g.dimension();
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double stretch = (i == 0) ? d[0] : u[i] / g.node(i);
        out[i] = d[i] * d[i] + (N - 1) * stretch * stretch;
    }
    return out;
}

}  // namespace

double FunctionalSeries::sup_over(double t_min, double t_max) const {
    double best = 0.0;
    for (std::size_t k = 0; k < times.size(); ++k)
        if (times[k] >= t_min && times[k] <= t_max) best = std::max(best, values[k]);
    return best;
}

EnergyValue energy(const AugmentedState& state, const PressureLaw& law) {
    const ScalarField u = state.velocity();
    const ScalarField pot = pressure_potential(state.rho, law);
    const ScalarField du2 = strain_squared(u);
    EnergyValue out;
    for (std::size_t i = 0; i < state.rho.size(); ++i) {
        const double w = state.grid().quadrature_weight(i);
        out.value += (0.5 * state.rho[i] * u[i] * u[i] + pot[i]) * w;
        out.dissipation_rate += 2.0 * state.mu * state.rho[i] * du2[i] * w;
    }
    return out;
}

EnergyValue bd_entropy(const AugmentedState& state, const PressureLaw& law) {
    const ScalarField pot = pressure_potential(state.rho, law);
    ScalarField rho_half(state.grid());
    for (std::size_t i = 0; i < rho_half.size(); ++i)
        rho_half[i] = std::pow(state.rho[i], 0.5 * law.gamma());
    const ScalarField grad_half = gradient(rho_half);
    EnergyValue out;
    for (std::size_t i = 0; i < state.rho.size(); ++i) {
        const double w = state.grid().quadrature_weight(i);
        out.value += (0.5 * state.rho[i] * state.v[i] * state.v[i] + pot[i]) * w;
        out.dissipation_rate +=
            8.0 * state.mu / law.gamma() * grad_half[i] * grad_half[i] * w;
    }
    return out;
}

FunctionalSeries energy_series(const Trajectory& traj, const PressureLaw& law) {
    return series_of(traj, "energy",
                     [&](const AugmentedState& s) { return energy(s, law).value; });
}

FunctionalSeries bd_entropy_series(const Trajectory& traj, const PressureLaw& law) {
    return series_of(traj, "bd_entropy",
                     [&](const AugmentedState& s) { return bd_entropy(s, law).value; });
}

FunctionalSeries energy_dissipation_series(const Trajectory& traj, const PressureLaw& law) {
    return series_of(traj, "energy_dissipation", [&](const AugmentedState& s) {
        return energy(s, law).dissipation_rate;
    });
}

FunctionalSeries bd_dissipation_series(const Trajectory& traj, const PressureLaw& law) {
    return series_of(traj, "bd_entropy_dissipation", [&](const AugmentedState& s) {
        return bd_entropy(s, law).dissipation_rate;
    });
}

FunctionalSeries lipschitz_diagnostic(const Trajectory& traj, double mu) {
    return series_of(traj, "lipschitz", [&](const AugmentedState& s) {
        double grad_max = 0.0;
        for (std::size_t i = 0; i < s.rho.size(); ++i)
            grad_max = std::max(grad_max,
                                std::abs((s.rho[i] * s.v[i] - s.m[i]) / (2.0 * mu)));
        return std::sqrt(s.t) * (s.rho.max_abs() + grad_max);
    });
}

SupNormSeries sup_norm_series(const Trajectory& traj) {
    SupNormSeries out;
    out.rho_max = series_of(traj, "rho_max",
                            [](const AugmentedState& s) { return s.rho.max_abs(); });
    out.inv_rho_max = series_of(traj, "inv_rho_max", [](const AugmentedState& s) {
        double m = 0.0;
        for (std::size_t i = 0; i < s.rho.size(); ++i) m = std::max(m, 1.0 / s.rho[i]);
        return m;
    });
    out.v_max =
        series_of(traj, "v_max", [](const AugmentedState& s) { return s.v.max_abs(); });
    out.sqrt_t_m_max = series_of(traj, "sqrt_t_m_max", [](const AugmentedState& s) {
        return std::sqrt(s.t) * s.m.max_abs();
    });
    out.sqrt_t_u_max = series_of(traj, "sqrt_t_u_max", [](const AugmentedState& s) {
        return std::sqrt(s.t) * s.velocity().max_abs();
    });
    return out;
}

MonotonicityReport monotonicity_check(const FunctionalSeries& series, double tol) {
    MonotonicityReport r;
    r.series = series.name;
    r.tolerance = tol;
    r.max_relative_increase = 0.0;
    for (std::size_t k = 0; k + 1 < series.values.size(); ++k) {
        const double inc = series.values[k + 1] - series.values[k];
        if (inc > 0.0) r.total_increase += inc;
        const double rel = inc / (1.0 + std::abs(series.values[k]));
        if (rel > r.max_relative_increase) {
            r.max_relative_increase = rel;
            r.worst_index = k + 1;
            r.worst_time = series.times[k + 1];
        }
    }
    r.pass = r.max_relative_increase <= tol;
    return r;
}

GrowthBoundReport growth_bound_check(const Trajectory& traj, GrowthBoundKind kind,
                                     double K, const PressureLaw& law) {
    traj.validate();
    GrowthBoundReport r;
    r.kind = kind;
    r.calibration = K;
    r.min_margin = std::numeric_limits<double>::infinity();

    if (kind == GrowthBoundKind::density_exponential) {
        const double rho0 = traj.initial().rho.max_abs();
        double v_sup = 0.0;
        for (const auto& s : traj.samples) {
            v_sup = std::max(v_sup, s.v.max_abs());
            const double rhs = K * rho0 * std::exp(K * std::sqrt(s.t) * v_sup);
            const double margin = rhs - s.rho.max_abs();
            if (margin < r.min_margin) {
                r.min_margin = margin;
                r.worst_time = s.t;
            }
        }
        r.pass = r.min_margin >= 0.0;
        return r;
    }

    // velocity_duhamel: running Koch-Tataru norm over prefixes.
    const double v0 = traj.initial().v.max_abs();
    const Grid& g = traj.initial().grid();
    const int N = g.dimension();
    double rho_sup = traj.initial().rho.max_abs();
    double sup_part = 0.0, carleson_sq = 0.0;
    ScalarField Q(g);
    for (std::size_t k = 0; k < traj.samples.size(); ++k) {
        const auto& s = traj.samples[k];
        rho_sup = std::max(rho_sup, s.rho.max_abs());
        if (k > 0) {
            const auto& p = traj.samples[k - 1];
            const double w = 0.5 * (s.t - p.t);
            for (std::size_t y = 0; y < Q.size(); ++y)
                Q[y] += w * (p.m[y] * p.m[y] + s.m[y] * s.m[y]);
            sup_part = std::max(sup_part, std::sqrt(s.t) * s.m.max_abs());
            const double scale = std::pow(s.t, -0.5 * N);
            const double rad = std::sqrt(s.t);
            for (std::size_t a = 0; a < Q.size(); ++a)
                carleson_sq = std::max(carleson_sq, scale * ball_integral(Q, a, rad));
        }
        const double e_t = sup_part + std::sqrt(std::max(carleson_sq, 0.0));
        const double rhs =
            v0 + K * std::sqrt(s.t) * std::pow(rho_sup, law.gamma() - 2.0) * e_t;
        const double margin = rhs - s.v.max_abs();
        if (margin < r.min_margin) {
            r.min_margin = margin;
            r.worst_time = s.t;
        }
    }
    r.pass = r.min_margin >= 0.0;
    return r;
}

}  // namespace effvel
