// Time-ordered sequence of sampled augmented states plus per-step scalar
// diagnostics.
#pragma once

#include <vector>

#include "effvel/state.hpp"

namespace effvel {

struct StepRecord {
    double t = 0.0;
    double dt = 0.0;
    double rho_min = 0.0;
    double rho_max = 0.0;
    double v_max = 0.0;
    double u_max = 0.0;
};

struct Trajectory {
    std::vector<AugmentedState> samples;
    std::vector<StepRecord> steps;

    const AugmentedState& initial() const { return samples.front(); }
    const AugmentedState& final() const { return samples.back(); }
    std::size_t size() const { return samples.size(); }

    std::vector<double> times() const {
        std::vector<double> ts(samples.size());
        for (std::size_t i = 0; i < ts.size(); ++i) ts[i] = samples[i].t;
        return ts;
    }

    // Throws unless sample times start at 0 and increase strictly.
    void validate() const {
        if (samples.empty())
            throw std::invalid_argument("Trajectory: no samples");
        if (samples.front().t != 0.0)
            throw std::invalid_argument("Trajectory: first sample must be at t = 0");
        for (std::size_t k = 1; k < samples.size(); ++k)
            if (!(samples[k].t > samples[k - 1].t))
                throw std::invalid_argument("Trajectory: sample times must increase strictly");
    }
};

}  // namespace effvel
