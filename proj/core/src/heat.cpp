#include "effvel/heat.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "effvel/operators.hpp"

namespace effvel {

namespace {

std::mutex fftw_planner_mutex;

ScalarField heat_periodic(const ScalarField& f, double tau) {
    const std::size_t n = f.size();
    const double length = f.grid().length();
    std::vector<double> in(f.values());
    std::vector<fftw_complex> spectrum(n / 2 + 1);
    std::vector<double> out(n);

    fftw_plan fwd, bwd;
    {
        std::lock_guard<std::mutex> lock(fftw_planner_mutex);
        fwd = fftw_plan_dft_r2c_1d(static_cast<int>(n), in.data(), spectrum.data(),
                                   FFTW_ESTIMATE);
        bwd = fftw_plan_dft_c2r_1d(static_cast<int>(n), spectrum.data(), out.data(),
                                   FFTW_ESTIMATE);
    }
    fftw_execute(fwd);
    for (std::size_t k = 0; k <= n / 2; ++k) {
        const double wave = 2.0 * std::numbers::pi * static_cast<double>(k) / length;
        const double factor = std::exp(-tau * wave * wave) / static_cast<double>(n);
        spectrum[k][0] *= factor;
        spectrum[k][1] *= factor;
    }
    fftw_execute(bwd);
    {
        std::lock_guard<std::mutex> lock(fftw_planner_mutex);
        fftw_destroy_plan(fwd);
        fftw_destroy_plan(bwd);
    }
    return ScalarField(f.grid(), std::move(out));
}

// Scaled modified Bessel function I0(z) e^{-z} (Abramowitz-Stegun 9.8.1/9.8.2
// polynomial fits, |error| < 2e-7).
double bessel_i0_scaled(double z) {
    if (z < 3.75) {
        const double t = z / 3.75;
        const double t2 = t * t;
        const double i0 =
            1.0 + t2 * (3.5156229 +
                        t2 * (3.0899424 +
                              t2 * (1.2067492 +
                                    t2 * (0.2659732 + t2 * (0.0360768 + t2 * 0.0045813)))));
        return i0 * std::exp(-z);
    }
    const double t = 3.75 / z;
    const double p =
        0.39894228 +
        t * (0.01328592 +
             t * (0.00225319 +
                  t * (-0.00157565 +
                       t * (0.00916281 +
                            t * (-0.02057706 +
                                 t * (0.02635537 + t * (-0.01647633 + t * 0.00392377)))))));
    return p / std::sqrt(z);
}

// Radial heat kernel against dr' (the full angular integral is folded in):
// e^{t Lap} f(r) = int_0^inf k_N(r, r', tau) f(r') dr'.
double radial_kernel(int N, double r, double rp, double tau) {
    if (N == 2) {
        const double d = r - rp;
        return rp / (2.0 * tau) * std::exp(-d * d / (4.0 * tau)) *
               bessel_i0_scaled(r * rp / (2.0 * tau));
    }
    // N == 3
    const double norm = 1.0 / std::sqrt(4.0 * std::numbers::pi * tau);
    if (r == 0.0) return norm * rp * rp / tau * std::exp(-rp * rp / (4.0 * tau));
    const double d = r - rp;
    const double cross = -std::expm1(-r * rp / tau);  // 1 - e^{-r r'/tau}
    return norm * (rp / r) * std::exp(-d * d / (4.0 * tau)) * cross;
}

ScalarField heat_truncated(const ScalarField& f, double tau, double far_value) {
    const Grid& g = f.grid();
    const std::size_t n = f.size();
    const double h = g.spacing();
    const double cut = 8.0 * std::sqrt(2.0 * tau);
    ScalarField out(g);

    if (g.kind() == GridKind::line1d) {
        const double norm = 1.0 / std::sqrt(4.0 * std::numbers::pi * tau);
        for (std::size_t i = 0; i < n; ++i) {
            const double x = g.node(i);
            double acc = 0.0, mass = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                const double d = x - g.node(j);
                if (std::abs(d) > cut) continue;
                double w = norm * std::exp(-d * d / (4.0 * tau)) * h;
                if (j == 0 || j == n - 1) w *= 0.5;
                acc += w * (f[j] - far_value);
                mass += w;
            }
            out[i] = far_value + acc / mass;
        }
        return out;
    }

    const int N = g.dimension();
    for (std::size_t i = 0; i < n; ++i) {
        const double r = g.node(i);
        double acc = 0.0, mass = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double rp = g.node(j);
            if (std::abs(r - rp) > cut) continue;
            double w = radial_kernel(N, r, rp, tau) * h;
            if (j == 0 || j == n - 1) w *= 0.5;
            acc += w * (f[j] - far_value);
            mass += w;
        }
        if (N == 2 && r <= cut) {
            // Euler-Maclaurin end correction: the N = 2 kernel grows linearly
            // from r' = 0, so the trapezoid rule picks up an O(h^2) boundary
            // term (h^2/12) d/dr' [kernel] at r' = 0.
            const double w = h * h / 12.0 / (2.0 * tau) * std::exp(-r * r / (4.0 * tau));
            acc += w * (f[0] - far_value);
            mass += w;
        }
        out[i] = far_value + acc / mass;
    }
    return out;
}

}  // namespace

ScalarField heat_semigroup(const ScalarField& f, double t, double kappa, double far_value) {
    if (t < 0.0) throw std::invalid_argument("heat_semigroup: negative time");
    if (!(kappa > 0.0)) throw std::invalid_argument("heat_semigroup: diffusivity must be positive");
    if (t == 0.0) return f;
    const double tau = kappa * t;
    if (f.grid().is_periodic()) return heat_periodic(f, tau);
    return heat_truncated(f, tau, far_value);
}

ScalarField heat_semigroup_radial_vector(const ScalarField& m1, double t, double kappa) {
    if (m1.grid().kind() != GridKind::radial)
        throw std::invalid_argument("heat_semigroup_radial_vector: expects a radial grid");
    if (t == 0.0) return m1;
    // psi(r) = int_0^r m1, an even profile; e^{tL}(grad psi) = grad e^{tL}psi.
    const Grid& g = m1.grid();
    const double h = g.spacing();
    ScalarField psi(g);
    double acc = 0.0;
    for (std::size_t i = 1; i < m1.size(); ++i) {
        acc += 0.5 * (m1[i - 1] + m1[i]) * h;
        psi[i] = acc;
    }
    const double psi_far = psi[psi.size() - 1];
    const ScalarField ext = heat_semigroup(psi, t, kappa, psi_far);
    return radial_derivative(ext, Parity::even);
}

}  // namespace effvel
