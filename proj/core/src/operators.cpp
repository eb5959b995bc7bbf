#include "effvel/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace effvel {

namespace {

void require_line(const ScalarField& f, const char* where) {
    if (f.grid().kind() != GridKind::line1d)
        throw std::invalid_argument(std::string(where) + ": expects a line1d grid");
}

void require_radial(const ScalarField& f, const char* where) {
    if (f.grid().kind() != GridKind::radial)
        throw std::invalid_argument(std::string(where) + ": expects a radial grid");
}

void require_vanishes_at_axis(const ScalarField& f, const char* where) {
    if (std::abs(f[0]) > kAxisTolerance * f.max_abs())
        throw std::invalid_argument(std::string(where) +
                                    ": radial vector component must vanish at r = 0");
}

// Quadratic extrapolation one node past the end of the stencil.
double extrapolate(double f0, double f1, double f2) { return 3.0 * f0 - 3.0 * f1 + f2; }

double pow_int(double x, int p) {
    double r = 1.0;
    for (int k = 0; k < p; ++k) r *= x;
    return r;
}

}  // namespace

ScalarField gradient_1d(const ScalarField& f) {
    require_line(f, "gradient_1d");
    const Grid& g = f.grid();
    const std::size_t n = f.size();
    const double h = g.spacing();
    ScalarField out(g);
    if (g.is_periodic()) {
        for (std::size_t i = 0; i < n; ++i) {
            const double fp = f[(i + 1) % n];
            const double fm = f[(i + n - 1) % n];
            out[i] = (fp - fm) / (2.0 * h);
        }
        return out;
    }
    out[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
    for (std::size_t i = 1; i + 1 < n; ++i) out[i] = (f[i + 1] - f[i - 1]) / (2.0 * h);
    out[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
    return out;
}

ScalarField radial_derivative(const ScalarField& f, Parity parity) {
    require_radial(f, "radial_derivative");
    const Grid& g = f.grid();
    const std::size_t n = f.size();
    const double h = g.spacing();
    ScalarField out(g);
    out[0] = parity == Parity::even ? 0.0 : f[1] / h;
    for (std::size_t i = 1; i + 1 < n; ++i) out[i] = (f[i + 1] - f[i - 1]) / (2.0 * h);
    out[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
    return out;
}

ScalarField gradient(const ScalarField& f) {
    if (f.grid().kind() == GridKind::line1d) return gradient_1d(f);
    return radial_derivative(f, Parity::even);
}

ScalarField divergence_radial(const ScalarField& f) {
    require_radial(f, "divergence_radial");
    require_vanishes_at_axis(f, "divergence_radial");
    const Grid& g = f.grid();
    const int N = g.dimension();
    const std::size_t n = f.size();
    const double h = g.spacing();
    ScalarField out(g);
    for (std::size_t i = 0; i < n; ++i) {
        const double rp = (static_cast<double>(i) + 0.5) * h;
        const double rm = (static_cast<double>(i) - 0.5) * h;
        const double f_up = (i + 1 < n) ? f[i + 1] : extrapolate(f[n - 1], f[n - 2], f[n - 3]);
        const double flux_p = pow_int(rp, N - 1) * 0.5 * (f[i] + f_up);
        double flux_m = 0.0;
        double vol = pow_int(rp, N) / static_cast<double>(N);
        if (i > 0) {
            flux_m = pow_int(rm, N - 1) * 0.5 * (f[i - 1] + f[i]);
            vol -= pow_int(rm, N) / static_cast<double>(N);
        }
        out[i] = (flux_p - flux_m) / vol;
    }
    return out;
}

ScalarField laplacian_radial_scalar(const ScalarField& f) {
    require_radial(f, "laplacian_radial_scalar");
    const Grid& g = f.grid();
    const int N = g.dimension();
    const std::size_t n = f.size();
    const double h = g.spacing();
    ScalarField out(g);
    out[0] = static_cast<double>(N) * 2.0 * (f[1] - f[0]) / (h * h);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double r = g.node(i);
        const double d2 = (f[i + 1] - 2.0 * f[i] + f[i - 1]) / (h * h);
        const double d1 = (f[i + 1] - f[i - 1]) / (2.0 * h);
        out[i] = d2 + (N - 1) * d1 / r;
    }
    const double r = g.node(n - 1);
    const double d2 =
        (2.0 * f[n - 1] - 5.0 * f[n - 2] + 4.0 * f[n - 3] - f[n - 4]) / (h * h);
    const double d1 = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
    out[n - 1] = d2 + (N - 1) * d1 / r;
    return out;
}

ScalarField laplacian_radial_vector(const ScalarField& u1) {
    require_radial(u1, "laplacian_radial_vector");
    require_vanishes_at_axis(u1, "laplacian_radial_vector");
    const Grid& g = u1.grid();
    const int N = g.dimension();
    const std::size_t n = u1.size();
    const double h = g.spacing();

    // The angular part is differenced through the even profile w = u1/r,
    // using u1'' + (N-1) (u1/r)'; the raw u1'/r - u1/r^2 form loses an order
    // of accuracy next to the axis. Node 1 uses a one-sided stencil so w(0)
    // is never needed.
    std::vector<double> w(n, 0.0);
    for (std::size_t i = 1; i < n; ++i) w[i] = u1[i] / g.node(i);
    auto dw = [&](std::size_t i) {
        if (i == 1) return (-3.0 * w[1] + 4.0 * w[2] - w[3]) / (2.0 * h);
        if (i + 1 == n) return (3.0 * w[n - 1] - 4.0 * w[n - 2] + w[n - 3]) / (2.0 * h);
        return (w[i + 1] - w[i - 1]) / (2.0 * h);
    };

    ScalarField out(g);
    out[0] = 0.0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double d2 = (u1[i + 1] - 2.0 * u1[i] + u1[i - 1]) / (h * h);
        out[i] = d2 + (N - 1) * dw(i);
    }
    const double d2 =
        (2.0 * u1[n - 1] - 5.0 * u1[n - 2] + 4.0 * u1[n - 3] - u1[n - 4]) / (h * h);
    out[n - 1] = d2 + (N - 1) * dw(n - 1);
    return out;
}

ScalarField weighted_div_grad(const ScalarField& rho, const ScalarField& u1, double mu) {
    require_same_grid(rho, u1, "weighted_div_grad");
    const Grid& g = rho.grid();
    const std::size_t n = rho.size();
    const double h = g.spacing();
    ScalarField out(g);

    if (g.kind() == GridKind::line1d) {
        auto flux = [&](std::size_t i, std::size_t j) {
            return 2.0 * mu * 0.5 * (rho[i] + rho[j]) * (u1[j] - u1[i]) / h;
        };
        if (g.is_periodic()) {
            for (std::size_t i = 0; i < n; ++i) {
                const std::size_t ip = (i + 1) % n;
                const std::size_t im = (i + n - 1) % n;
                out[i] = (flux(i, ip) - flux(im, i)) / h;
            }
            return out;
        }
        for (std::size_t i = 1; i + 1 < n; ++i) out[i] = (flux(i, i + 1) - flux(i - 1, i)) / h;
        // Ghost values by quadratic extrapolation keep constants and linear
        // profiles exact at the edges.
        const double rho_lo = extrapolate(rho[0], rho[1], rho[2]);
        const double u_lo = extrapolate(u1[0], u1[1], u1[2]);
        const double rho_hi = extrapolate(rho[n - 1], rho[n - 2], rho[n - 3]);
        const double u_hi = extrapolate(u1[n - 1], u1[n - 2], u1[n - 3]);
        out[0] = (flux(0, 1) - 2.0 * mu * 0.5 * (rho_lo + rho[0]) * (u1[0] - u_lo) / h) / h;
        out[n - 1] =
            (2.0 * mu * 0.5 * (rho[n - 1] + rho_hi) * (u_hi - u1[n - 1]) / h - flux(n - 2, n - 1)) / h;
        return out;
    }

    require_vanishes_at_axis(u1, "weighted_div_grad");
    // 2 mu div(rho grad(u1 e_r)) . e_r = 2 mu (rho Lvec(u1) + rho' u1'),
    // which keeps second order up to the axis.
    const ScalarField lap = laplacian_radial_vector(u1);
    const ScalarField drho = radial_derivative(rho, Parity::even);
    const ScalarField du = radial_derivative(u1, Parity::odd);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = 2.0 * mu * (rho[i] * lap[i] + drho[i] * du[i]);
    return out;
}

ScalarField upwind_divergence(const ScalarField& rho, const ScalarField& v) {
    require_same_grid(rho, v, "upwind_divergence");
    const Grid& g = rho.grid();
    const std::size_t n = rho.size();
    const double h = g.spacing();
    ScalarField out(g);

    auto face_flux = [](double rho_l, double rho_r, double v_l, double v_r) {
        const double w = 0.5 * (v_l + v_r);
        return w * (w >= 0.0 ? rho_l : rho_r);
    };

    if (g.kind() == GridKind::line1d) {
        if (g.is_periodic()) {
            for (std::size_t i = 0; i < n; ++i) {
                const std::size_t ip = (i + 1) % n;
                const std::size_t im = (i + n - 1) % n;
                const double fp = face_flux(rho[i], rho[ip], v[i], v[ip]);
                const double fm = face_flux(rho[im], rho[i], v[im], v[i]);
                out[i] = (fp - fm) / h;
            }
            return out;
        }
        // Far-field ghosts carry the constant far state.
        for (std::size_t i = 0; i < n; ++i) {
            const double rho_r = (i + 1 < n) ? rho[i + 1] : kFarDensity;
            const double v_r = (i + 1 < n) ? v[i + 1] : kFarVelocity;
            const double rho_l = (i > 0) ? rho[i - 1] : kFarDensity;
            const double v_l = (i > 0) ? v[i - 1] : kFarVelocity;
            const double fp = face_flux(rho[i], rho_r, v[i], v_r);
            const double fm = face_flux(rho_l, rho[i], v_l, v[i]);
            out[i] = (fp - fm) / h;
        }
        return out;
    }

    const int N = g.dimension();
    for (std::size_t i = 0; i < n; ++i) {
        const double rp = (static_cast<double>(i) + 0.5) * h;
        const double rm = (static_cast<double>(i) - 0.5) * h;
        const double rho_r = (i + 1 < n) ? rho[i + 1] : kFarDensity;
        const double v_r = (i + 1 < n) ? v[i + 1] : kFarVelocity;
        const double flux_p = pow_int(rp, N - 1) * face_flux(rho[i], rho_r, v[i], v_r);
        double flux_m = 0.0;
        double vol = pow_int(rp, N) / static_cast<double>(N);
        if (i > 0) {
            flux_m = pow_int(rm, N - 1) * face_flux(rho[i - 1], rho[i], v[i - 1], v[i]);
            vol -= pow_int(rm, N) / static_cast<double>(N);
        }
        out[i] = (flux_p - flux_m) / vol;
    }
    return out;
}

ScalarField upwind_derivative(const ScalarField& f, const ScalarField& wind) {
    require_same_grid(f, wind, "upwind_derivative");
    const Grid& g = f.grid();
    const std::size_t n = f.size();
    const double h = g.spacing();
    ScalarField out(g);
    if (g.kind() == GridKind::line1d && g.is_periodic()) {
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t ip = (i + 1) % n;
            const std::size_t im = (i + n - 1) % n;
            out[i] = wind[i] >= 0.0 ? (f[i] - f[im]) / h : (f[ip] - f[i]) / h;
        }
        return out;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (wind[i] >= 0.0)
            out[i] = (i > 0) ? (f[i] - f[i - 1]) / h : (f[1] - f[0]) / h;
        else
            out[i] = (i + 1 < n) ? (f[i + 1] - f[i]) / h : (f[n - 1] - f[n - 2]) / h;
    }
    return out;
}

}  // namespace effvel
