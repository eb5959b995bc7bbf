// Heat-extension function-space quantities: the bmo^{-1} norm, the
// Koch-Tataru solution norm (sup-part plus Carleson-type part), caloric
// Besov-type proxies, and the Duhamel bilinear term behind the smallness
// estimate. Sups over time are taken on geometric ladders; the reported
// values are lower bounds for the continuum sups.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "effvel/field.hpp"
#include "effvel/trajectory.hpp"

namespace effvel {

struct CaloricConfig {
    double horizon = 1.0;   // T: ladder top (bmo^{-1} requires T <= 1)
    double ladder_ratio = 0.5;  // q
    int ladder_rungs = 20;      // J: ladder times are T q^j, j = 0..J
    int s_extra_rungs = 8;      // extra octaves below T q^J for the s-integral
    int s_substeps = 16;        // geometric subdivisions per octave in s

    void validate() const;
    std::vector<double> ladder() const;
};

struct NormReport {
    std::string name;
    double value = 0.0;
    std::map<std::string, double> components;
    CaloricConfig config;
};

// Integral of the piecewise-linear interpolant of q over the ball of radius
// `radius` centered at node `anchor` (interval with wrap/zero-extension on
// line grids, sphere-overlap weights on radial grids). q is extended by zero
// past truncated edges.
double ball_integral(const ScalarField& q, std::size_t anchor, double radius);

// Surface measure of the sphere of radius rho intersected with the ball of
// radius R centered at distance d from the origin (dimension 2 or 3).
double sphere_ball_overlap(int dimension, double rho, double d, double R);

// Discrete bmo^{-1} norm of a momentum-like field (far value 0): sup over
// anchors and ladder times of
//   ( t^{-N/2} int_0^t int_{B(x, sqrt t)} |e^{s Lap} m0|^2 dy ds )^{1/2}.
NormReport bmo_inv_norm(const ScalarField& m0, const CaloricConfig& cfg);

// Koch-Tataru norm of a sampled field trajectory over [0, T]:
//   sup-part      sup_t sqrt(t) ||m(t)||_inf
//   carleson-part sup over anchors, t of (t^{-N/2} int_0^t int_B |m|^2)^{1/2}
// with time integrals by trapezoid over the sample times. Requires
// consecutive positive sample times with ratio at most 2.
NormReport koch_tataru_norm(const std::vector<double>& times,
                            const std::vector<ScalarField>& fields, double T);
NormReport koch_tataru_norm(const Trajectory& traj, double T);

// Caloric proxies for the endpoint Besov norms (heat-extension surrogates,
// not the Littlewood-Paley norms): order -1 is sup_t sqrt(t)||e^{tL}f||_inf,
// order +1 is sup_t t^{-1/2} ||(e^{tL} - Id) f||_inf, over the ladder.
NormReport caloric_besov_proxy(const ScalarField& f, int order, const CaloricConfig& cfg,
                               double far_value = 0.0);

// B(m, v)(t) = int_0^t e^{2 mu (t-s) Lap} div(v x m)(s) ds evaluated at the
// trajectory sample times by the midpoint rule.
std::vector<ScalarField> bilinear_duhamel(const Trajectory& traj, double T);

}  // namespace effvel
