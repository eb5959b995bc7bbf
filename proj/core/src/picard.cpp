#include "effvel/picard.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "effvel/heat.hpp"
#include "effvel/operators.hpp"

namespace effvel {

namespace {

// Linear interpolation of f at an off-node point, with periodic wrap, odd
// reflection about the axis on radial grids, and far values outside
// truncated domains.
double interp_at(const ScalarField& f, double x, double far_value) {
    const Grid& g = f.grid();
    const double h = g.spacing();
    const long n = static_cast<long>(f.size());
    double sign = 1.0;
    if (g.is_periodic()) {
        const double L = g.length();
        x -= std::floor((x - g.x_min()) / L) * L;
    } else if (g.is_radial() && x < 0.0) {
        x = -x;
        sign = -1.0;
    }
    if (!g.is_periodic() && (x < g.x_min() || x > g.x_max())) return sign * far_value;
    const double s = (x - g.x_min()) / h;
    long j = static_cast<long>(std::floor(s));
    const long wrap = g.is_periodic() ? n : n - 1;
    if (j < 0) j = 0;
    if (j > wrap - 1) j = wrap - 1;
    const double frac = s - static_cast<double>(j);
    const double f0 = f[static_cast<std::size_t>(j % n)];
    const double f1 = f[static_cast<std::size_t>((j + 1) % n)];
    return sign * (f0 + (f1 - f0) * frac);
}

ScalarField divergence_of_product(const ScalarField& rho, const ScalarField& v) {
    const ScalarField rv = multiply(rho, v);
    if (rho.grid().is_radial()) return divergence_radial(rv);
    return gradient_1d(rv);
}

}  // namespace

PicardResult picard_mild_solve(const AugmentedState& init, const PressureLaw& law,
                               double T, int k_max, double tol,
                               std::size_t time_samples) {
    if (!(T > 0.0)) throw std::invalid_argument("picard_mild_solve: T must be positive");
    if (k_max < 1 || time_samples < 2)
        throw std::invalid_argument("picard_mild_solve: bad iteration/sample counts");
    const Grid& g = init.grid();
    const bool radial = g.is_radial();
    const double mu = init.mu;
    const double kappa = 2.0 * mu;
    const std::size_t M = time_samples;
    const double dt = T / static_cast<double>(M);

    std::vector<double> times(M + 1);
    for (std::size_t i = 0; i <= M; ++i) times[i] = dt * static_cast<double>(i);

    // Heat flow of the initial density, fixed across iterations.
    std::vector<ScalarField> rho_heat(M + 1);
    for (std::size_t i = 0; i <= M; ++i)
        rho_heat[i] = heat_semigroup(init.rho, times[i], kappa, kFarDensity);

    // Iterates, initialized by constant-in-time extension of the data.
    std::vector<ScalarField> rho(M + 1, init.rho), v(M + 1, init.v), m(M + 1, init.m);

    int iterations = 0;
    double delta = 0.0;
    for (iterations = 1; iterations <= k_max; ++iterations) {
        std::vector<ScalarField> u(M + 1);
        std::vector<ScalarField> source(M + 1);
        for (std::size_t i = 0; i <= M; ++i) {
            u[i] = velocity_from(rho[i], m[i]);
            source[i] = divergence_of_product(rho[i], v[i]);
        }

        // (a) density Duhamel, midpoint rule on the sample intervals.
        std::vector<ScalarField> rho_new(M + 1);
        rho_new[0] = init.rho;
        for (std::size_t i = 1; i <= M; ++i) {
            ScalarField acc = rho_heat[i];
            for (std::size_t j = 0; j < i; ++j) {
                const double mid = 0.5 * (times[j] + times[j + 1]);
                ScalarField avg = source[j] + source[j + 1];
                avg = 0.5 * avg;
                const ScalarField prop = heat_semigroup(avg, times[i] - mid, kappa, 0.0);
                for (std::size_t y = 0; y < acc.size(); ++y) acc[y] -= dt * prop[y];
            }
            rho_new[i] = std::move(acc);
        }
        // A positivity breach in an iterate is the divergent regime (the
        // horizon is too large for the perturbative construction).
        try {
            for (std::size_t i = 0; i <= M; ++i)
                require_positive(rho_new[i], "picard_mild_solve", kDefaultDensityFloor);
        } catch (const std::domain_error& e) {
            throw PicardDivergence(std::string("picard_mild_solve: density iterate left the "
                                               "admissible region (T too large): ") +
                                       e.what(),
                                   iterations, delta);
        }

        // (b) damped transport of v along characteristics of u.
        std::vector<ScalarField> v_new(M + 1);
        v_new[0] = init.v;
        for (std::size_t i = 0; i < M; ++i) {
            ScalarField next(g);
            if (radial) {
                for (std::size_t y = 0; y < next.size(); ++y) {
                    const double foot = g.node(y) - dt * u[i][y];
                    const double adv = interp_at(v_new[i], foot, 0.0);
                    const double rate = law.relaxation_rate(rho_new[i][y], mu);
                    next[y] = u[i][y] + (adv - u[i][y]) * std::exp(-dt * rate);
                }
            } else {
                const ScalarField dF0 = gradient_1d(enthalpy(rho_new[i], law));
                const ScalarField dF1 = gradient_1d(enthalpy(rho_new[i + 1], law));
                for (std::size_t y = 0; y < next.size(); ++y) {
                    const double foot = g.node(y) - dt * u[i][y];
                    const double adv = interp_at(v_new[i], foot, 0.0);
                    next[y] = adv - dt * 0.5 * (dF0[y] + dF1[y]);
                }
            }
            v_new[i + 1] = std::move(next);
        }

        // (c) momentum closure and convergence measure.
        delta = 0.0;
        for (std::size_t i = 0; i <= M; ++i) {
            ScalarField m_new = momentum_from(rho_new[i], v_new[i], mu);
            delta = std::max({delta, sup_distance(rho_new[i], rho[i]),
                              sup_distance(v_new[i], v[i]), sup_distance(m_new, m[i])});
            rho[i] = std::move(rho_new[i]);
            v[i] = std::move(v_new[i]);
            m[i] = std::move(m_new);
        }
        if (delta < tol) break;
    }
    if (delta >= tol)
        throw PicardDivergence("picard_mild_solve: no convergence in " +
                                   std::to_string(k_max) +
                                   " iterations (T too large); last increment " +
                                   std::to_string(delta),
                               k_max, delta);

    PicardResult result;
    result.iterations = std::min(iterations, k_max);
    result.final_delta = delta;
    for (std::size_t i = 0; i <= M; ++i) {
        AugmentedState s;
        s.t = times[i];
        s.rho = rho[i];
        s.v = v[i];
        s.m = m[i];
        s.mu = mu;
        result.trajectory.samples.push_back(std::move(s));
    }
    return result;
}

}  // namespace effvel
