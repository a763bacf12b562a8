#pragma once

#include <cstdint>

#include "conicgeom/core.hpp"

namespace conicgeom {

/// How a g-value is evaluated: deterministic quadrature with an absolute
/// tolerance, or Monte Carlo with an explicit (samples, seed) key.
struct EvalMethod {
    enum class Kind { Quadrature, MonteCarlo };

    Kind kind = Kind::Quadrature;
    double tol = 1e-10;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;

    static EvalMethod quadrature(double tol = 1e-10);
    static EvalMethod monte_carlo(std::uint64_t samples, std::uint64_t seed);

    bool is_mc() const { return kind == Kind::MonteCarlo; }
};

/// A solid-angle value in [0,1] together with how it was obtained and an
/// error bound (stderr for MC, quadrature error estimate otherwise).
struct GValue {
    double value = 0.0;
    EvalMethod method;
    double error_bound = 0.0;
};

/// g_cube(n, s2) = P(xi_{n+1}/sigma >= max_j |xi_j|), the solid angle of
/// the cube cone. Quadrature: int_0^inf phi(t) (2 Phi(t/sigma) - 1)^n dt.
/// n = 0 gives exactly 1/2.
GValue g_cube(int n, double s2, const EvalMethod& m = {});

/// g_cross(n, s2) = P(xi_{n+1}/sigma >= sum_j |xi_j|), the solid angle of
/// the crosspolytope cone. Quadrature integrates 1 - Phi(sigma s) against
/// the density of S_n = sum |xi_j| (grid convolution for n >= 2).
/// n = 0 gives exactly 1/2.
GValue g_cross(int n, double s2, const EvalMethod& m = {});

/// Orthant probability P(eta_1 < 0, ..., eta_m < 0) for a centred
/// Gaussian vector with Cov(eta_i, eta_j) = c + delta_ij, c > -1/m.
/// c >= 0 reduces to int phi(t) Phi(sqrt(c) t)^m dt; c < 0 is evaluated
/// by the real part of the analytic continuation (a finite combination
/// of 1-D Dawson-function integrals), so both signs have a deterministic
/// quadrature path. The MC path works for any c in the domain.
GValue g_equicorr(int m, double c, const EvalMethod& meth = {});

/// g_simplex(n, r) = g_equicorr(n, -r/(1+nr)), the solid angle of the
/// simplex cone; n = 0 gives 1 and n = 1 gives 1/2 exactly.
GValue g_simplex(int n, double r, const EvalMethod& m = {});

/// Tabulated density of S_n = sum_{j<=n} |xi_j| by iterated trapezoid
/// convolution of the half-normal density. truncation must be at least
/// n + 6 sqrt(n). Defaults follow the module conventions: step 2^-10,
/// truncation n + 8 sqrt(n) + 8 when passed as 0.
GridDensity folded_sum_density(int n, double step = 0.0009765625,
                               double truncation = 0.0);

}  // namespace conicgeom
