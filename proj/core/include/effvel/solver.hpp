// Time integration of the augmented system (density: theta-implicit
// diffusion with explicit conservative upwind advection; effective velocity:
// explicit upwind transport, with exact-in-dt exponential relaxation in the
// radial geometry) and of the classical 1D formulation with its degenerate
// rho-weighted diffusion.
#pragma once

#include <stdexcept>

#include "effvel/pressure.hpp"
#include "effvel/trajectory.hpp"

namespace effvel {

enum class Scheme { augmented, classical1d };

struct SolverConfig {
    Scheme scheme = Scheme::augmented;
    double theta = 0.5;  // implicitness of the diffusion step, in [1/2, 1]
    double cfl = 0.4;
    double density_floor = kDefaultDensityFloor;
    std::size_t sample_stride = 1;
    double final_time = 1.0;
    double dt_max = 0.0;  // 0: defaults to the grid spacing

    void validate() const;
    double effective_dt_max(const Grid& grid) const;
};

// Raised when the density crosses the configured floor or a non-finite value
// appears; carries the failure time and node.
class SolverAbort : public std::runtime_error {
public:
    SolverAbort(const std::string& what, double t, std::size_t node)
        : std::runtime_error(what), t_(t), node_(node) {}
    double time() const { return t_; }
    std::size_t node() const { return node_; }

private:
    double t_;
    std::size_t node_;
};

// dt = cfl h / max(|u|, |v|, eps), capped by dt_max and by the damping-rate
// bound dt * max(a gamma rho^{gamma-1} / 2mu) <= 1. Diffusion is implicit and
// does not constrain dt.
double cfl_dt(const AugmentedState& state, const PressureLaw& law, const SolverConfig& cfg);

// One theta-scheme step of d_t rho - 2 mu Lap rho + div(rho v) = 0. The
// linear solve acts on rho - 1, so the constant far state is reproduced
// bitwise.
ScalarField step_density(const ScalarField& rho, const ScalarField& v, double dt,
                         double mu, double theta);

// v' = v - dt (u D_upwind(v) + grad F(rho)), the divided 1D transport form.
ScalarField step_effective_velocity_1d(const ScalarField& v, const ScalarField& u,
                                       const ScalarField& rho, double dt,
                                       const PressureLaw& law, double floor);

// Upwind advection followed by the exact exponential relaxation toward u:
// v' = u + (v_adv - u) exp(-dt a gamma rho^{gamma-1} / (2 mu)).
ScalarField step_effective_velocity_radial(const ScalarField& v, const ScalarField& u,
                                           const ScalarField& rho, double dt,
                                           const PressureLaw& law, double mu,
                                           double floor);

Trajectory solve_augmented(const AugmentedState& init, const PressureLaw& law,
                           const SolverConfig& cfg);

Trajectory solve_classical_1d(const ScalarField& rho0, const ScalarField& u0,
                              const PressureLaw& law, double mu, const SolverConfig& cfg);

}  // namespace effvel
