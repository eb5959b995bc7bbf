// Initial data: profile descriptions (piecewise-constant shocks, smooth
// closed forms, raw samples), sampling onto a grid, and the mollified
// constructions rho_0^n = phi_n j_n * rho_0 + 1/n with their variants.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "effvel/state.hpp"

namespace effvel {

struct PiecewisePiece {
    double from = 0.0;
    double to = 0.0;
    double value = 0.0;
};

// A scalar profile of x (line grids) or r (radial grids).
struct Profile {
    enum class Type { constant, piecewise, sine, gaussian, r_gaussian, samples };

    Type type = Type::constant;

    double value = 0.0;  // constant

    std::vector<PiecewisePiece> pieces;  // piecewise, on top of `background`
    double background = 1.0;

    // sine: mean + amplitude * sin(wavenumber * (x - phase))
    double mean = 0.0;
    double amplitude = 0.0;
    double wavenumber = 1.0;
    double phase = 0.0;

    // gaussian: offset + amplitude * exp(-((x - center)/width)^2)
    // r_gaussian (odd): amplitude * x * exp(-((x - center)/width)^2)
    double offset = 0.0;
    double center = 0.0;
    double width = 1.0;

    std::vector<double> samples;  // samples, one per grid node

    double eval(double x) const;

    static Profile constant_profile(double v) {
        Profile p;
        p.type = Type::constant;
        p.value = v;
        return p;
    }
};

enum class MollifyVariant { A, B, C };

struct InitialDataSpec {
    Profile density;
    Profile v0;
    std::optional<int> mollify_level;
    MollifyVariant variant = MollifyVariant::A;
};

// Samples a profile at the grid nodes (piecewise pieces must not overlap;
// `samples` profiles must match the node count).
ScalarField sample_profile(const Profile& p, const Grid& grid);

// Discrete mollification of a sampled field: convolution with the bump
// j_n(x) = n j(nx), j(x) = c exp(-1/(1-x^2)) on |x| < 1, with the discrete
// weights renormalized to unit mass. Values outside the grid are supplied by
// periodic wrap or by `extension` (with even/odd mirroring about r = 0 on
// radial grids).
ScalarField mollify_field(const ScalarField& f, int n, Parity parity, double extension);

// The cutoff phi_n(x) = phi(x/n): 1 on |x| <= n, 0 on |x| >= 2n, smooth bump
// ramp in between.
double cutoff_phi(double s);
ScalarField sample_cutoff(const Grid& grid, int n);

// Builds the t = 0 augmented state. When mollify_level is set the chosen
// variant is applied:
//   A: rho_0^n = phi_n j_n * rho_0 + 1/n,   m_01^n = phi_n j_n * (rho_0 v_0)
//   B: rho_0^n as in A,                      v_0^n = phi_n j_n * v_0
//   C: rho_0^n = phi_n j_n * (rho_0 - 1) + 1, m_01^n as in A
// and in every case m_0^n = m_01^n - 2 mu grad rho_0^n, v_0^n = m_01^n/rho_0^n
// (for B, m_01^n = rho_0^n v_0^n).
AugmentedState build_initial_state(const InitialDataSpec& spec, const Grid& grid, double mu);

}  // namespace effvel
