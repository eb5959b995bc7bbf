// Discrete differential operators on line and radial grids. All stencils are
// second order; radial operators use symmetric-limit formulas at r = 0 rather
// than ghost extrapolation, so quadratics are differentiated exactly there.
//
// Radial vector fields are represented by their radial component u1 with
// u(x) = u1(|x|) x/|x|; such a component must vanish at r = 0.
#pragma once

#include "effvel/field.hpp"

namespace effvel {

// Parity of a radial profile about r = 0: density-like profiles are even,
// velocity/momentum components are odd.
enum class Parity { even, odd };

// Central difference with periodic wrap or one-sided second-order closures at
// far-field edges. Line grids only.
ScalarField gradient_1d(const ScalarField& f);

// d/dr with the symmetry-limit value at r = 0 (0 for even profiles, f1/h for
// odd ones) and a one-sided closure at r_max. Radial grids only.
ScalarField radial_derivative(const ScalarField& f, Parity parity);

// Spatial derivative of a scalar profile, dispatching on grid kind; radial
// profiles are treated as even (density-like).
ScalarField gradient(const ScalarField& f);

// div(f e_r) = r^{1-N} d/dr (r^{N-1} f) in conservative finite-volume form:
// face fluxes r^{N-1} f weighted by the exact cell measures, which makes the
// identity field f = r exactly divergence N. Requires f(0) = 0.
ScalarField divergence_radial(const ScalarField& f);

// Laplacian of a scalar (even) radial profile: f'' + (N-1)/r f', with
// Delta f(0) = N f''(0) at the axis.
ScalarField laplacian_radial_scalar(const ScalarField& f);

// Radial component of the vector Laplacian of u1 e_r:
// u1'' + (N-1)/r u1' - (N-1)/r^2 u1, zero at the axis. Requires u1(0) = 0.
ScalarField laplacian_radial_vector(const ScalarField& u1);

// Radial component of 2 div(mu rho D(u)) for the irrotational field u1 e_r
// (or 2 mu d/dx(rho du/dx) on line grids), in conservative flux form.
ScalarField weighted_div_grad(const ScalarField& rho, const ScalarField& u1,
                              double mu);

// Conservative first-order upwind discretization of div(rho v) (v the
// advecting component); upwind side chosen per face from the face-averaged v.
ScalarField upwind_divergence(const ScalarField& rho, const ScalarField& v);

// One-sided first-order derivative of f, biased against the wind field.
ScalarField upwind_derivative(const ScalarField& f, const ScalarField& wind);

// Relative tolerance for the "vanishes at r = 0" validity checks.
inline constexpr double kAxisTolerance = 1e-8;

}  // namespace effvel
