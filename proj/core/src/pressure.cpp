#include "effvel/pressure.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace effvel {

// a = 0 is admitted as the pressureless degenerate case.
PressureLaw::PressureLaw(double a, double gamma) : a_(a), gamma_(gamma) {
    if (!(a >= 0.0)) throw std::invalid_argument("PressureLaw: coefficient a must be >= 0");
    if (!(gamma >= 1.0)) throw std::invalid_argument("PressureLaw: gamma must be >= 1");
}

double PressureLaw::pressure(double rho) const { return a_ * std::pow(rho, gamma_); }

double PressureLaw::pressure_derivative(double rho) const {
    return a_ * gamma_ * std::pow(rho, gamma_ - 1.0);
}

double PressureLaw::enthalpy(double rho) const {
    if (gamma_ == 1.0) return a_ * std::log(rho);
    return a_ * gamma_ / (gamma_ - 1.0) * std::pow(rho, gamma_ - 1.0);
}

double PressureLaw::potential(double rho) const {
    if (gamma_ == 1.0) return a_ * (rho * std::log(rho) + 1.0 - rho);
    return a_ / (gamma_ - 1.0) *
           (std::pow(rho, gamma_) - 1.0 - gamma_ * (rho - 1.0));
}

double PressureLaw::relaxation_rate(double rho, double mu) const {
    return pressure_derivative(rho) / (2.0 * mu);
}

namespace {

template <class Fn>
ScalarField map_positive(const ScalarField& rho, const char* where, Fn&& fn) {
    require_positive(rho, where);
    ScalarField out(rho.grid());
    for (std::size_t i = 0; i < rho.size(); ++i) out[i] = fn(rho[i]);
    return out;
}

}  // namespace

ScalarField pressure(const ScalarField& rho, const PressureLaw& law) {
    return map_positive(rho, "pressure", [&](double r) { return law.pressure(r); });
}

ScalarField pressure_derivative(const ScalarField& rho, const PressureLaw& law) {
    return map_positive(rho, "pressure_derivative",
                        [&](double r) { return law.pressure_derivative(r); });
}

ScalarField enthalpy(const ScalarField& rho, const PressureLaw& law) {
    return map_positive(rho, "enthalpy", [&](double r) { return law.enthalpy(r); });
}

ScalarField pressure_potential(const ScalarField& rho, const PressureLaw& law) {
    return map_positive(rho, "pressure_potential",
                        [&](double r) { return law.potential(r); });
}

void require_positive(const ScalarField& rho, const char* where, double floor) {
    for (std::size_t i = 0; i < rho.size(); ++i) {
        if (!(rho[i] > floor))
            throw std::domain_error(std::string(where) + ": density " +
                                    std::to_string(rho[i]) + " at node " +
                                    std::to_string(i) + " is not above " +
                                    std::to_string(floor));
    }
}

}  // namespace effvel
