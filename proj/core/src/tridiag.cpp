#include "effvel/tridiag.hpp"

#include <cmath>
#include <stdexcept>

namespace effvel {

std::vector<double> solve_tridiagonal(const TridiagonalSystem& sys,
                                      const std::vector<double>& rhs) {
    const std::size_t n = rhs.size();
    if (sys.diag.size() != n || sys.lower.size() != n || sys.upper.size() != n)
        throw std::invalid_argument("solve_tridiagonal: inconsistent sizes");
    std::vector<double> c(n), d(n);
    double beta = sys.diag[0];
    if (beta == 0.0) throw std::runtime_error("solve_tridiagonal: zero pivot");
    c[0] = sys.upper[0] / beta;
    d[0] = rhs[0] / beta;
    for (std::size_t i = 1; i < n; ++i) {
        beta = sys.diag[i] - sys.lower[i] * c[i - 1];
        if (beta == 0.0) throw std::runtime_error("solve_tridiagonal: zero pivot");
        c[i] = sys.upper[i] / beta;
        d[i] = (rhs[i] - sys.lower[i] * d[i - 1]) / beta;
    }
    for (std::size_t i = n - 1; i-- > 0;) d[i] -= c[i] * d[i + 1];
    return d;
}

std::vector<double> solve_cyclic_tridiagonal(const TridiagonalSystem& sys,
                                             double corner_lower, double corner_upper,
                                             const std::vector<double>& rhs) {
    const std::size_t n = rhs.size();
    if (n < 3) throw std::invalid_argument("solve_cyclic_tridiagonal: need n >= 3");
    // Sherman-Morrison: A = T + u v^T with u = (gamma, 0, ..., alpha)^T and
    // v = (1, 0, ..., beta/gamma)^T, where beta = A[0][n-1] and
    // alpha = A[n-1][0] are the wrapped corner entries.
    const double alpha = corner_upper;
    const double beta = corner_lower;
    const double gamma = -sys.diag[0];
    TridiagonalSystem t = sys;
    t.diag[0] = sys.diag[0] - gamma;
    t.diag[n - 1] = sys.diag[n - 1] - alpha * beta / gamma;
    std::vector<double> y = solve_tridiagonal(t, rhs);
    std::vector<double> u(n, 0.0);
    u[0] = gamma;
    u[n - 1] = alpha;
    std::vector<double> z = solve_tridiagonal(t, u);
    const double vy = y[0] + beta / gamma * y[n - 1];
    const double vz = z[0] + beta / gamma * z[n - 1];
    const double factor = vy / (1.0 + vz);
    for (std::size_t i = 0; i < n; ++i) y[i] -= factor * z[i];
    return y;
}

}  // namespace effvel
