// Functionals and inequality checks on trajectories: energy, BD entropy,
// sup-norm bundles, the sqrt(t)-weighted Lipschitz regularization series, and
// monotonicity / growth-bound reports. All integrals use the grid quadrature
// weights (volume integrals on radial grids).
#pragma once

#include <string>
#include <vector>

#include "effvel/pressure.hpp"
#include "effvel/trajectory.hpp"

namespace effvel {

struct FunctionalSeries {
    std::string name;
    std::vector<double> times;
    std::vector<double> values;

    double sup_over(double t_min, double t_max) const;
};

struct MonotonicityReport {
    std::string series;
    double max_relative_increase = 0.0;  // max (s_{k+1} - s_k) / (1 + |s_k|)
    double total_increase = 0.0;         // sum of positive increments
    double tolerance = 0.0;
    bool pass = false;
    std::size_t worst_index = 0;
    double worst_time = 0.0;
};

struct EnergyValue {
    double value = 0.0;
    double dissipation_rate = 0.0;
};

// E = int( 1/2 rho u^2 + (Pi(rho) - Pi(1)) ), with the instantaneous
// dissipation rate int 2 mu rho |Du|^2 (radial strain includes the (N-1)
// angular stretch u1/r, with its r = 0 limit u1'(0)).
EnergyValue energy(const AugmentedState& state, const PressureLaw& law);

// E1 = int( 1/2 rho v^2 + (Pi(rho) - Pi(1)) ), dissipation rate
// (8 mu / gamma) int |grad rho^{gamma/2}|^2 (the curl term vanishes in the
// simulated geometry).
EnergyValue bd_entropy(const AugmentedState& state, const PressureLaw& law);

FunctionalSeries energy_series(const Trajectory& traj, const PressureLaw& law);
FunctionalSeries bd_entropy_series(const Trajectory& traj, const PressureLaw& law);
FunctionalSeries energy_dissipation_series(const Trajectory& traj, const PressureLaw& law);
FunctionalSeries bd_dissipation_series(const Trajectory& traj, const PressureLaw& law);

// t_k -> sqrt(t_k) (||rho||_inf + ||grad rho||_inf) with the gradient
// recovered from the state identity grad rho = (rho v - m) / (2 mu).
FunctionalSeries lipschitz_diagnostic(const Trajectory& traj, double mu);

struct SupNormSeries {
    FunctionalSeries rho_max;
    FunctionalSeries inv_rho_max;
    FunctionalSeries v_max;
    FunctionalSeries sqrt_t_m_max;
    FunctionalSeries sqrt_t_u_max;
};

SupNormSeries sup_norm_series(const Trajectory& traj);

// Pass iff every increment satisfies s_{k+1} - s_k <= tol (1 + |s_k|).
MonotonicityReport monotonicity_check(const FunctionalSeries& series, double tol);

enum class GrowthBoundKind {
    density_exponential,  // ||rho(t)|| <= K ||rho_0|| exp(K sqrt(t) sup_{s<=t} ||v(s)||)
    velocity_duhamel,     // ||v(t)|| <= ||v_0|| + K sqrt(t) sup||rho||^{gamma-2} ||m||_{E_t}
};

struct GrowthBoundReport {
    GrowthBoundKind kind;
    double calibration = 0.0;  // the constant K used
    bool pass = false;
    double min_margin = 0.0;  // min over samples of rhs - lhs
    double worst_time = 0.0;
};

GrowthBoundReport growth_bound_check(const Trajectory& traj, GrowthBoundKind kind,
                                     double K, const PressureLaw& law);

}  // namespace effvel
