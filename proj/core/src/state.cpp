#include "effvel/state.hpp"

#include "effvel/pressure.hpp"

namespace effvel {

ScalarField AugmentedState::velocity(double floor) const {
    return velocity_from(rho, m, floor);
}

double AugmentedState::compatibility_residual() const {
    return sup_distance(m, momentum_from(rho, v, mu));
}

ScalarField effective_velocity(const ScalarField& rho, const ScalarField& u, double mu) {
    require_same_grid(rho, u, "effective_velocity");
    require_positive(rho, "effective_velocity");
    const ScalarField drho = gradient(rho);
    ScalarField v = u;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += 2.0 * mu * drho[i] / rho[i];
    return v;
}

ScalarField momentum_from(const ScalarField& rho, const ScalarField& v, double mu) {
    require_same_grid(rho, v, "momentum_from");
    require_positive(rho, "momentum_from");
    const ScalarField drho = gradient(rho);
    ScalarField m = multiply(rho, v);
    for (std::size_t i = 0; i < m.size(); ++i) m[i] -= 2.0 * mu * drho[i];
    return m;
}

ScalarField velocity_from(const ScalarField& rho, const ScalarField& m, double floor) {
    require_same_grid(rho, m, "velocity_from");
    require_positive(rho, "velocity_from", floor);
    ScalarField u = m;
    for (std::size_t i = 0; i < u.size(); ++i) u[i] /= rho[i];
    return u;
}

AugmentedState make_state(double t, const ScalarField& rho, const ScalarField& v, double mu) {
    AugmentedState s;
    s.t = t;
    s.rho = rho;
    s.v = v;
    s.mu = mu;
    s.m = momentum_from(rho, v, mu);
    return s;
}

}  // namespace effvel
