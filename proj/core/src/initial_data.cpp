#include "effvel/initial_data.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "effvel/pressure.hpp"

namespace effvel {

namespace {

double bump(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }

void validate_pieces(const std::vector<PiecewisePiece>& pieces) {
    auto sorted = pieces;
    std::sort(sorted.begin(), sorted.end(),
              [](const PiecewisePiece& a, const PiecewisePiece& b) { return a.from < b.from; });
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (!(sorted[i].to > sorted[i].from))
            throw std::invalid_argument("Profile: piecewise interval is empty or reversed");
        if (i + 1 < sorted.size() && sorted[i].to > sorted[i + 1].from)
            throw std::invalid_argument("Profile: piecewise intervals overlap");
    }
}

// Reads f at a (possibly out-of-range) node index, wrapping on periodic
// grids, mirroring about r = 0 with the field's parity on radial grids, and
// clamping to `extension` past the outer edge.
double extended_value(const ScalarField& f, long idx, Parity parity, double extension) {
    const long n = static_cast<long>(f.size());
    const Grid& g = f.grid();
    if (g.is_periodic()) {
        long k = idx % n;
        if (k < 0) k += n;
        return f[static_cast<std::size_t>(k)];
    }
    if (g.is_radial() && idx < 0) {
        const long k = -idx;
        if (k < n) return parity == Parity::even ? f[static_cast<std::size_t>(k)]
                                                 : -f[static_cast<std::size_t>(k)];
        return parity == Parity::even ? extension : -extension;
    }
    if (idx < 0 || idx >= n) return extension;
    return f[static_cast<std::size_t>(idx)];
}

}  // namespace

double Profile::eval(double x) const {
    switch (type) {
        case Type::constant:
            return value;
        case Type::piecewise: {
            for (const auto& p : pieces)
                if (x >= p.from && x < p.to) return p.value;
            return background;
        }
        case Type::sine:
            return mean + amplitude * std::sin(wavenumber * (x - phase));
        case Type::gaussian: {
            const double s = (x - center) / width;
            return offset + amplitude * std::exp(-s * s);
        }
        case Type::r_gaussian: {
            const double s = (x - center) / width;
            return amplitude * x * std::exp(-s * s);
        }
        case Type::samples:
            throw std::logic_error("Profile::eval: sampled profiles have no closed form");
    }
    throw std::logic_error("Profile::eval: unknown profile type");
}

ScalarField sample_profile(const Profile& p, const Grid& grid) {
    if (p.type == Profile::Type::samples) {
        if (p.samples.size() != grid.node_count())
            throw std::invalid_argument("sample_profile: sample count does not match grid");
        return ScalarField(grid, p.samples);
    }
    if (p.type == Profile::Type::piecewise) validate_pieces(p.pieces);
    return ScalarField::from_function(grid, [&](double x) { return p.eval(x); });
}

ScalarField mollify_field(const ScalarField& f, int n, Parity parity, double extension) {
    if (n < 1) throw std::invalid_argument("mollify_field: mollification level must be >= 1");
    const Grid& g = f.grid();
    const double h = g.spacing();
    const double radius = 1.0 / static_cast<double>(n);
    const long reach = static_cast<long>(std::floor(radius / h));

    // Discrete kernel weights, renormalized so they sum to one exactly.
    std::vector<double> w(static_cast<std::size_t>(2 * reach + 1));
    double total = 0.0;
    for (long d = -reach; d <= reach; ++d) {
        const double x = static_cast<double>(d) * h * static_cast<double>(n);
        const double jv = bump(1.0 - x * x);  // exp(-1/(1-x^2)) up to scale
        w[static_cast<std::size_t>(d + reach)] = jv;
        total += jv;
    }
    for (double& wi : w) wi /= total;

    ScalarField out(g);
    for (std::size_t i = 0; i < f.size(); ++i) {
        double s = 0.0;
        for (long d = -reach; d <= reach; ++d)
            s += w[static_cast<std::size_t>(d + reach)] *
                 extended_value(f, static_cast<long>(i) - d, parity, extension);
        out[i] = s;
    }
    return out;
}

double cutoff_phi(double s) {
    const double t = std::abs(s);
    if (t <= 1.0) return 1.0;
    if (t >= 2.0) return 0.0;
    const double up = bump(2.0 - t);
    const double down = bump(t - 1.0);
    return up / (up + down);
}

ScalarField sample_cutoff(const Grid& grid, int n) {
    return ScalarField::from_function(grid, [&](double x) {
        return cutoff_phi(x / static_cast<double>(n));
    });
}

AugmentedState build_initial_state(const InitialDataSpec& spec, const Grid& grid, double mu) {
    ScalarField rho0 = sample_profile(spec.density, grid);
    ScalarField v0 = sample_profile(spec.v0, grid);
    require_positive(rho0, "build_initial_state");
    if (grid.is_radial() && std::abs(v0[0]) > kAxisTolerance * v0.max_abs())
        throw std::invalid_argument(
            "build_initial_state: radial v0 must vanish at r = 0");

    if (!spec.mollify_level) return make_state(0.0, rho0, v0, mu);

    const int n = *spec.mollify_level;
    if (n < 1) throw std::invalid_argument("build_initial_state: mollification level must be >= 1");
    const ScalarField phi = sample_cutoff(grid, n);
    const double inv_n = 1.0 / static_cast<double>(n);

    ScalarField rho_n(grid);
    if (spec.variant == MollifyVariant::C) {
        ScalarField shifted = rho0;
        for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] -= 1.0;
        const ScalarField smooth = mollify_field(shifted, n, Parity::even, 0.0);
        for (std::size_t i = 0; i < rho_n.size(); ++i) rho_n[i] = phi[i] * smooth[i] + 1.0;
    } else {
        const ScalarField smooth = mollify_field(rho0, n, Parity::even, kFarDensity);
        for (std::size_t i = 0; i < rho_n.size(); ++i) rho_n[i] = phi[i] * smooth[i] + inv_n;
    }

    ScalarField m01(grid);
    if (spec.variant == MollifyVariant::B) {
        const ScalarField v_smooth = mollify_field(v0, n, Parity::odd, 0.0);
        ScalarField v_n(grid);
        for (std::size_t i = 0; i < v_n.size(); ++i) v_n[i] = phi[i] * v_smooth[i];
        m01 = multiply(rho_n, v_n);
    } else {
        const ScalarField mv = multiply(rho0, v0);
        const ScalarField smooth = mollify_field(mv, n, Parity::odd, 0.0);
        for (std::size_t i = 0; i < m01.size(); ++i) m01[i] = phi[i] * smooth[i];
    }

    const ScalarField v_n = velocity_from(rho_n, m01);
    return make_state(0.0, rho_n, v_n, mu);
}

}  // namespace effvel
