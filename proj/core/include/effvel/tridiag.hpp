// Tridiagonal and cyclic-tridiagonal solvers (Thomas algorithm, with a
// Sherman-Morrison correction for periodic wrap).
#pragma once

#include <cstddef>
#include <vector>

namespace effvel {

struct TridiagonalSystem {
    std::vector<double> lower;  // a[i] multiplies x[i-1]; a[0] unused
    std::vector<double> diag;   // b[i] multiplies x[i]
    std::vector<double> upper;  // c[i] multiplies x[i+1]; c[n-1] unused
};

// Solves the plain tridiagonal system in place. Throws std::runtime_error on
// a vanishing pivot.
std::vector<double> solve_tridiagonal(const TridiagonalSystem& sys,
                                      const std::vector<double>& rhs);

// Solves the cyclic system where additionally corner[0] = a[0] couples x[0]
// to x[n-1] and corner[1] = c[n-1] couples x[n-1] to x[0].
std::vector<double> solve_cyclic_tridiagonal(const TridiagonalSystem& sys,
                                             double corner_lower, double corner_upper,
                                             const std::vector<double>& rhs);

}  // namespace effvel
