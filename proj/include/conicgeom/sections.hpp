#pragma once

#include "conicgeom/core.hpp"
#include "conicgeom/gfun.hpp"

namespace conicgeom {

/// A random-section query: k-dimensional uniform subspace against an
/// n-dimensional regular polytope, counting j-faces of the intersection.
/// Requires n > k > j >= 0; the codimension is l = n - k.
struct SectionQuery {
    PolytopeSpec polytope;
    int k = 1;
    int j = 0;
};

/// Probability that a uniform random subspace of codimension l meets a
/// fixed d-face:
///   Cube:          2 (v_{l+1} + v_{l+3} + ...) of the cone over the face,
///                  which is a cube cone C_d(n-d);
///   Crosspolytope: 2^{-d} (C(d,l) + C(d,l+1) + ...);
///   Simplex:       the simplex cone C_{d+1}(-1/(n+1)) tail sum.
double prob_face_hit(const PolytopeSpec& p, int d, int l,
                     const EvalMethod& m = {});

/// Expected number of j-faces of the intersection with a uniform random
/// k-subspace; equals face_count(p, j+l) * prob_face_hit(p, j+l, l).
double expected_faces(const SectionQuery& q, const EvalMethod& m = {});

/// Asymptotic deficit of simplex sections at fixed codimensions i > l:
/// C(n+1, n-i+l+1) - E phi(n-i, n-l, n) ~
///   C(i,l) n^{-n/2} n^{(3i-3)/2} ((i-l)e/(2pi))^{n/2}.
double asymp_simplex_deficit(int i, int l, int n);

/// Asymptotics of cube sections for fixed j >= 0, l >= 1:
/// E phi(j, n-l, n) ~ 2^{n-j} n^{j+l/2}/(l! j!) Gamma((l+1)/2)/pi^{(l+1)/2}.
double asymp_cube_lowdim(int j, int l, int n);

/// Fixed-codimension asymptotics (1 <= l < m):
/// E phi(n-m, n-l, n) ~ (2n)^{m-l}/(m-l)!.
double asymp_cube_fixed_codim(int m, int l, int n);

/// The log-power law constant C(j,k) for cube sections at fixed 0<=j<k:
/// 2^k pi^{(k-1)/2} sqrt(k) (k-1)! / ((k-j)! j!) * g_simplex(j, 1/(k-j)).
double boroczky_henk_constant(int j, int k);

}  // namespace conicgeom
