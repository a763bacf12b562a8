#pragma once

#include "conicgeom/core.hpp"
#include "conicgeom/gfun.hpp"

namespace conicgeom {

/// The closed-form conic intrinsic volumes v_0..v_m, m = ambient dim:
///   Cube(n, s2):  v_k = 2^(n-k+1) C(n,k-1) g_cube(k-1, s2+n-k+1)
///                         * g_simplex(n-k+1, 1/s2)   for k in 1..n+1,
///                 v_0 = g_cross(n, 1/s2).
///   Cross(n, s2): v_k = 2^k C(n,k) g_cube(n-k, 1/s2+k) g_simplex(k, s2)
///                 for k in 0..n, v_{n+1} = g_cross(n, s2).
///   Simplex(n,r): v_k = C(n,k) g_equicorr(k, -r/(1+kr))
///                         * g_equicorr(n-k, r/(1+kr)) for k in 0..n.
/// Quadrature g-values by default; an MC method substitutes MC g-values
/// and propagates stderr to first order.
IntrinsicVolumeVector intrinsic_volumes(const ConeSpec& c,
                                        const EvalMethod& m = {});

/// Polar cone (isometry class): Cube(n,s2) <-> Cross(n,1/s2) and
/// Simplex(n,r) -> Simplex(n, -r/(1+nr)).
ConeSpec polar(const ConeSpec& c);

struct GrassmannQuery {
    ConeSpec cone;
    int codim = 0;
};

/// Grassmann angle gamma_l(C) = P(C cap L != {0}) = 2(v_{l+1}+v_{l+3}+...)
/// for a uniform random subspace L of codimension l.
double grassmann_angle(const GrassmannQuery& q, const EvalMethod& m = {});

/// Complement P(C cap L = {0}) = 2(v_{l-1}+v_{l-3}+...).
double grassmann_complement(const GrassmannQuery& q, const EvalMethod& m = {});

/// Internal solid angle of the n-crosspolytope at one of its k-faces:
/// g_cross(n-k-1, 1/(k+1)).
GValue crosspoly_internal_angle(int n, int k, const EvalMethod& m = {});

/// Normal (external) solid angle of the n-crosspolytope at a k-face:
/// g_cube(n-k-1, k+1).
GValue crosspoly_external_angle(int n, int k, const EvalMethod& m = {});

}  // namespace conicgeom
