// Independent mild-solution oracle: Picard iteration on the Duhamel form of
// the augmented system. The density iterate solves the heat Duhamel formula
// with diffusivity 2 mu and source -div(rho v); the effective velocity is
// integrated along characteristics (semi-Lagrangian with linear
// interpolation); the momentum closes via m = rho v - 2 mu grad rho.
// The construction is perturbative: it converges for smooth near-constant
// data on short horizons and diverges when T is too large.
#pragma once

#include <stdexcept>

#include "effvel/pressure.hpp"
#include "effvel/trajectory.hpp"

namespace effvel {

class PicardDivergence : public std::runtime_error {
public:
    PicardDivergence(const std::string& what, int iterations, double last_delta)
        : std::runtime_error(what), iterations_(iterations), last_delta_(last_delta) {}
    int iterations() const { return iterations_; }
    double last_delta() const { return last_delta_; }

private:
    int iterations_;
    double last_delta_;
};

struct PicardResult {
    Trajectory trajectory;
    int iterations = 0;
    double final_delta = 0.0;
};

// Throws PicardDivergence after k_max iterations without the sup-norm
// increment over the trajectory dropping below tol.
PicardResult picard_mild_solve(const AugmentedState& init, const PressureLaw& law,
                               double T, int k_max, double tol,
                               std::size_t time_samples = 64);

}  // namespace effvel
