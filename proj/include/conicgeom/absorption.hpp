#pragma once

#include "conicgeom/core.hpp"
#include "conicgeom/gfun.hpp"
#include "conicgeom/mc.hpp"

namespace conicgeom {

using mc::AbsorptionFamily;
using mc::AbsorptionQuery;

/// P(sigma X outside conv{+-X_1,...,+-X_n}), X, X_i iid standard normal in
/// R^d: the alternating-parity tail 2(v_{d-1} + v_{d-3} + ...) of the
/// crosspolytope-cone intrinsic volumes at parameter s2.
double p_cross(int n, int d, double s2, const EvalMethod& m = {});

/// Same for the Gaussian zonotope, via the cube-cone intrinsic volumes.
double p_cube(int n, int d, double s2, const EvalMethod& m = {});

/// Non-absorption probability of the planar symmetric Gaussian polytope
/// at radius sqrt(2u): F(u) + F'(u) where F is the distribution function
/// of (L_n^2 + xi^2)/2, L_n = max_j |xi_j|. Evaluated by smooth 1-D
/// quadratures (the convolution endpoint singularities are removed by
/// the substitution t = u sin^2 theta). Clamped to [0,1].
double f_cross_d2(int n, double u, const EvalMethod& m = {});

/// Right-hand side of the Laplace-transform identity:
/// 2 Gamma(d/2) lambda^{-d/2} (b_{n,d-1}(1/lambda) + b_{n,d-3}(...) + ...).
double laplace_rhs(AbsorptionFamily family, int n, int d, double lambda,
                   const EvalMethod& m = {});

/// Left-hand side estimated numerically: the non-absorption frequency on
/// a geometric radius grid (common random clouds across grid points)
/// integrated against u^{d/2-1} e^{-lambda u}.
Estimate laplace_lhs_numeric(AbsorptionFamily family, int n, int d,
                             double lambda, std::uint64_t mc_samples,
                             std::uint64_t seed);

}  // namespace conicgeom
