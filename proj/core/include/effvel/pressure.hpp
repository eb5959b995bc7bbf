// Gamma-law pressure P(rho) = a rho^gamma with the associated enthalpy F
// (F' = P'/rho) and the convex potential Pi measuring potential energy
// relative to the far state rho_bar = 1.
#pragma once

#include "effvel/field.hpp"

namespace effvel {

class PressureLaw {
public:
    PressureLaw(double a, double gamma);

    double a() const { return a_; }
    double gamma() const { return gamma_; }

    double pressure(double rho) const;
    double pressure_derivative(double rho) const;

    // Antiderivative of P'(rho)/rho: a*gamma/(gamma-1) rho^(gamma-1) for
    // gamma > 1, a*log(rho) for gamma = 1. Only its gradient enters the
    // dynamics.
    double enthalpy(double rho) const;

    // Pi(rho) - Pi(1): a/(gamma-1) (rho^gamma - 1 - gamma(rho-1)) for
    // gamma > 1, a (rho log rho + 1 - rho) for gamma = 1. Nonnegative and
    // vanishing only at rho = 1.
    double potential(double rho) const;

    // Damping rate of the effective velocity in the radial system:
    // a*gamma*rho^(gamma-1) / (2 mu).
    double relaxation_rate(double rho, double mu) const;

private:
    double a_;
    double gamma_;
};

ScalarField pressure(const ScalarField& rho, const PressureLaw& law);
ScalarField pressure_derivative(const ScalarField& rho, const PressureLaw& law);
ScalarField enthalpy(const ScalarField& rho, const PressureLaw& law);
ScalarField pressure_potential(const ScalarField& rho, const PressureLaw& law);

// Throws std::domain_error if any node is <= 0 (or below `floor` when given).
void require_positive(const ScalarField& rho, const char* where, double floor = 0.0);

}  // namespace effvel
