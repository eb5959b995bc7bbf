// Heat semigroup e^{kappa t Laplacian}. Periodic line grids use the exact
// Fourier multiplier; truncated (far-field line and radial) grids use
// Gaussian-kernel quadrature against f minus its far value, with the kernel
// truncated at 8 standard deviations (tail mass < e^{-32}) and each
// quadrature row renormalized to unit mass so constants are reproduced
// exactly and the maximum principle holds nodewise.
#pragma once

#include "effvel/field.hpp"

namespace effvel {

// far_value is the constant the field approaches outside a truncated domain
// (1 for densities, 0 for velocity or momentum components); it is ignored on
// periodic grids.
ScalarField heat_semigroup(const ScalarField& f, double t, double kappa,
                           double far_value = 0.0);

// Heat extension of the radial vector field m1 e_r, returning the radial
// component. Computed as d/dr of the scalar extension of the antiderivative
// of m1 (the semigroup commutes with the gradient).
ScalarField heat_semigroup_radial_vector(const ScalarField& m1, double t, double kappa);

}  // namespace effvel
