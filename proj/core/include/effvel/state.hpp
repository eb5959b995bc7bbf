// The augmented unknown triple (rho, m, v) with its conversion identities.
// The effective velocity is v = u + 2 mu grad(rho)/rho, equivalently
// m = rho v - 2 mu grad(rho); the latter is the closure used everywhere.
#pragma once

#include "effvel/field.hpp"
#include "effvel/operators.hpp"

namespace effvel {

// Density floor below which conversions refuse to divide.
inline constexpr double kDefaultDensityFloor = 1e-8;

struct AugmentedState {
    double t = 0.0;
    ScalarField rho;
    ScalarField m;
    ScalarField v;
    double mu = 1.0;

    const Grid& grid() const { return rho.grid(); }

    // u = m / rho nodewise.
    ScalarField velocity(double floor = kDefaultDensityFloor) const;

    // || m - (rho v - 2 mu grad rho) ||_inf.
    double compatibility_residual() const;
};

// v = u + 2 mu grad(rho)/rho.
ScalarField effective_velocity(const ScalarField& rho, const ScalarField& u, double mu);

// m = rho v - 2 mu grad(rho).
ScalarField momentum_from(const ScalarField& rho, const ScalarField& v, double mu);

// u = m / rho nodewise; errors below the density floor.
ScalarField velocity_from(const ScalarField& rho, const ScalarField& m,
                          double floor = kDefaultDensityFloor);

// Assembles a consistent state from (rho, v) at time t.
AugmentedState make_state(double t, const ScalarField& rho, const ScalarField& v, double mu);

}  // namespace effvel
