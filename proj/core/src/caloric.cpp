#include "effvel/caloric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "effvel/heat.hpp"
#include "effvel/operators.hpp"

namespace effvel {

namespace {

// Heat extension of a momentum-like profile: componentwise on line grids,
// via the vector formula on radial grids. Diffusivity 1 (norm convention).
ScalarField momentum_heat(const ScalarField& f, double s) {
    if (s == 0.0) return f;
    if (f.grid().is_radial()) return heat_semigroup_radial_vector(f, s, 1.0);
    return heat_semigroup(f, s, 1.0, 0.0);
}

// Integral of the piecewise-linear interpolant over [a, b] on a line grid.
// `value(j)` resolves node values (wrapping on periodic grids); when `wrap`
// is false the cell index is clamped to the grid, otherwise it runs free so
// intervals crossing the period end use the wrapped cells.
template <class ValueFn>
double pl_integral(double x_min, double h, long n_cells, bool wrap, ValueFn&& value,
                   double a, double b) {
    if (!(b > a)) return 0.0;
    auto interp = [&](double x) {
        const double s = (x - x_min) / h;
        long j = static_cast<long>(std::floor(s));
        if (!wrap) {
            if (j < 0) j = 0;
            if (j > n_cells - 1) j = n_cells - 1;
        }
        const double frac = s - static_cast<double>(j);
        return value(j) + (value(j + 1) - value(j)) * frac;
    };
    double total = 0.0;
    long j = static_cast<long>(std::floor((a - x_min) / h));
    double left = a;
    while (left < b) {
        const double cell_end = x_min + h * static_cast<double>(j + 1);
        const double right = std::min(b, cell_end);
        total += (right - left) * 0.5 * (interp(left) + interp(right));
        left = right;
        ++j;
    }
    return total;
}

double line_ball_integral(const ScalarField& q, double center, double radius) {
    const Grid& g = q.grid();
    const double h = g.spacing();
    const long n = static_cast<long>(q.size());
    if (g.is_periodic()) {
        const double L = g.length();
        auto value = [&](long j) {
            long k = j % n;
            if (k < 0) k += n;
            return q[static_cast<std::size_t>(k)];
        };
        double a = center - radius, b = center + radius;
        double total = 0.0;
        if (b - a >= L) {
            double period = 0.0;
            for (long j = 0; j < n; ++j) period += q[static_cast<std::size_t>(j)] * h;
            const double wraps = std::floor((b - a) / L);
            total += wraps * period;
            b = a + (b - a) - wraps * L;
        }
        // shift a into [x_min, x_min + L)
        const double shift = std::floor((a - g.x_min()) / L) * L;
        a -= shift;
        b -= shift;
        return total + pl_integral(g.x_min(), h, n, true, value, a, b);
    }
    // Truncated line: the field is extended by zero outside the domain.
    const double a = std::max(center - radius, g.x_min());
    const double b = std::min(center + radius, g.x_max());
    auto value = [&](long j) { return q[static_cast<std::size_t>(std::clamp(j, 0L, n - 1))]; };
    return pl_integral(g.x_min(), h, n - 1, false, value, a, b);
}

}  // namespace

void CaloricConfig::validate() const {
    if (!(horizon > 0.0)) throw std::invalid_argument("CaloricConfig: horizon must be positive");
    if (!(ladder_ratio > 0.0 && ladder_ratio < 1.0))
        throw std::invalid_argument("CaloricConfig: ladder ratio must lie in (0, 1)");
    if (ladder_rungs < 8) throw std::invalid_argument("CaloricConfig: need at least 8 rungs");
    if (s_extra_rungs < 0 || s_substeps < 1)
        throw std::invalid_argument("CaloricConfig: invalid s-ladder refinement");
}

std::vector<double> CaloricConfig::ladder() const {
    std::vector<double> ts(static_cast<std::size_t>(ladder_rungs) + 1);
    for (int j = 0; j <= ladder_rungs; ++j)
        ts[static_cast<std::size_t>(j)] = horizon * std::pow(ladder_ratio, j);
    return ts;
}

double sphere_ball_overlap(int dimension, double rho, double d, double R) {
    if (rho <= 0.0) return 0.0;
    if (d <= 1e-14 * std::max(rho, R)) {
        if (rho > R) return 0.0;
        return dimension == 2 ? 2.0 * std::numbers::pi * rho
                              : 4.0 * std::numbers::pi * rho * rho;
    }
    const double c = std::clamp((rho * rho + d * d - R * R) / (2.0 * rho * d), -1.0, 1.0);
    if (dimension == 2) return 2.0 * rho * std::acos(c);
    return 2.0 * std::numbers::pi * rho * rho * (1.0 - c);
}

double ball_integral(const ScalarField& q, std::size_t anchor, double radius) {
    const Grid& g = q.grid();
    if (g.kind() == GridKind::line1d)
        return line_ball_integral(q, g.node(anchor), radius);
    const double d = g.node(anchor);
    const double h = g.spacing();
    double total = 0.0;
    for (std::size_t j = 0; j < q.size(); ++j) {
        double w = h;
        if (j == 0 || j + 1 == q.size()) w *= 0.5;
        total += q[j] * sphere_ball_overlap(g.dimension(), g.node(j), d, radius) * w;
    }
    return total;
}

NormReport bmo_inv_norm(const ScalarField& m0, const CaloricConfig& cfg) {
    cfg.validate();
    if (cfg.horizon > 1.0)
        throw std::invalid_argument("bmo_inv_norm: horizon must be <= 1");

    const Grid& g = m0.grid();
    const int N = g.dimension();
    const int m = cfg.s_substeps;
    const int k_max = m * (cfg.ladder_rungs + cfg.s_extra_rungs);

    // Shared heat extensions at s = T q^{k/m}; index 0 is s = T.
    std::vector<ScalarField> cache(static_cast<std::size_t>(k_max) + 1);
    std::vector<bool> have(static_cast<std::size_t>(k_max) + 1, false);
    auto extension_at = [&](int k) -> const ScalarField& {
        auto idx = static_cast<std::size_t>(k);
        if (!have[idx]) {
            const double s = cfg.horizon * std::pow(cfg.ladder_ratio,
                                                    static_cast<double>(k) / m);
            cache[idx] = momentum_heat(m0, s);
            have[idx] = true;
        }
        return cache[idx];
    };
    auto s_of = [&](int k) {
        return cfg.horizon * std::pow(cfg.ladder_ratio, static_cast<double>(k) / m);
    };

    double best = 0.0;
    for (int j = 0; j <= cfg.ladder_rungs; ++j) {
        const double t = cfg.horizon * std::pow(cfg.ladder_ratio, j);
        const int k_lo = m * j;              // s = t
        const int k_hi = k_max;              // s = T q^{J + extra}

        // Q(y) = int_0^t |e^{s Lap} m0(y)|^2 ds, trapezoid from s = 0 upward.
        ScalarField Q(g);
        double s_prev = 0.0;
        const ScalarField* e_prev = &m0;
        for (int k = k_hi; k >= k_lo; --k) {
            const double s = s_of(k);
            const ScalarField& e = extension_at(k);
            const double w = 0.5 * (s - s_prev);
            for (std::size_t y = 0; y < Q.size(); ++y)
                Q[y] += w * ((*e_prev)[y] * (*e_prev)[y] + e[y] * e[y]);
            s_prev = s;
            e_prev = &e;
        }

        const double scale = std::pow(t, -0.5 * N);
        const double r = std::sqrt(t);
        for (std::size_t a = 0; a < Q.size(); ++a)
            best = std::max(best, scale * ball_integral(Q, a, r));
    }

    NormReport report;
    report.name = "bmo_inv";
    report.value = std::sqrt(std::max(best, 0.0));
    report.config = cfg;
    return report;
}

NormReport koch_tataru_norm(const std::vector<double>& times,
                            const std::vector<ScalarField>& fields, double T) {
    if (times.empty() || times.size() != fields.size())
        throw std::invalid_argument("koch_tataru_norm: empty or inconsistent trajectory");
    for (std::size_t k = 1; k < times.size(); ++k) {
        if (!(times[k] > times[k - 1]))
            throw std::invalid_argument("koch_tataru_norm: sample times must increase");
        if (times[k - 1] > 0.0 && times[k] / times[k - 1] > 2.0 * (1.0 + 1e-12))
            throw std::invalid_argument(
                "koch_tataru_norm: consecutive sample times must satisfy t_{k+1}/t_k <= 2");
    }

    const Grid& g = fields.front().grid();
    const int N = g.dimension();
    double sup_part = 0.0;
    double carleson_sq = 0.0;
    ScalarField Q(g);
    for (std::size_t k = 0; k < times.size(); ++k) {
        const double t = times[k];
        if (t > T * (1.0 + 1e-12)) break;
        if (k > 0) {
            const double w = 0.5 * (t - times[k - 1]);
            for (std::size_t y = 0; y < Q.size(); ++y)
                Q[y] += w * (fields[k - 1][y] * fields[k - 1][y] + fields[k][y] * fields[k][y]);
        }
        if (t <= 0.0) continue;
        sup_part = std::max(sup_part, std::sqrt(t) * fields[k].max_abs());
        const double scale = std::pow(t, -0.5 * N);
        const double r = std::sqrt(t);
        for (std::size_t a = 0; a < Q.size(); ++a)
            carleson_sq = std::max(carleson_sq, scale * ball_integral(Q, a, r));
    }

    NormReport report;
    report.name = "koch_tataru";
    report.components["sup_part"] = sup_part;
    report.components["carleson_part"] = std::sqrt(std::max(carleson_sq, 0.0));
    report.value = report.components["sup_part"] + report.components["carleson_part"];
    return report;
}

NormReport koch_tataru_norm(const Trajectory& traj, double T) {
    traj.validate();
    std::vector<double> times;
    std::vector<ScalarField> fields;
    times.reserve(traj.samples.size());
    for (const auto& s : traj.samples) {
        times.push_back(s.t);
        fields.push_back(s.m);
    }
    return koch_tataru_norm(times, fields, T);
}

NormReport caloric_besov_proxy(const ScalarField& f, int order, const CaloricConfig& cfg,
                               double far_value) {
    cfg.validate();
    if (order != -1 && order != 1)
        throw std::invalid_argument("caloric_besov_proxy: order must be -1 or +1");
    double best = 0.0;
    for (double t : cfg.ladder()) {
        const ScalarField e = f.grid().is_radial() ? heat_semigroup_radial_vector(f, t, 1.0)
                                                   : heat_semigroup(f, t, 1.0, far_value);
        if (order == -1) {
            best = std::max(best, std::sqrt(t) * e.max_abs());
        } else {
            best = std::max(best, sup_distance(e, f) / std::sqrt(t));
        }
    }
    NormReport report;
    report.name = order == -1 ? "caloric_besov_minus1" : "caloric_besov_plus1";
    report.value = best;
    report.config = cfg;
    return report;
}

std::vector<ScalarField> bilinear_duhamel(const Trajectory& traj, double T) {
    traj.validate();
    const Grid& g = traj.initial().grid();
    const double kappa = 2.0 * traj.initial().mu;

    std::vector<double> times;
    std::vector<ScalarField> sources;
    for (const auto& s : traj.samples) {
        if (s.t > T * (1.0 + 1e-12)) break;
        times.push_back(s.t);
        const ScalarField vm = multiply(s.v, s.m);
        sources.push_back(g.is_radial() ? divergence_radial(vm) : gradient_1d(vm));
    }

    std::vector<ScalarField> out;
    out.reserve(times.size());
    for (std::size_t k = 0; k < times.size(); ++k) {
        ScalarField acc(g);
        for (std::size_t j = 0; j + 1 <= k; ++j) {
            const double dt = times[j + 1] - times[j];
            const double mid = 0.5 * (times[j] + times[j + 1]);
            ScalarField avg = sources[j] + sources[j + 1];
            avg = 0.5 * avg;
            const ScalarField prop =
                g.is_radial() ? heat_semigroup_radial_vector(avg, times[k] - mid, kappa)
                              : heat_semigroup(avg, times[k] - mid, kappa, 0.0);
            for (std::size_t y = 0; y < acc.size(); ++y) acc[y] += dt * prop[y];
        }
        out.push_back(std::move(acc));
    }
    return out;
}

}  // namespace effvel
