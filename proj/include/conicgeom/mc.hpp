#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "conicgeom/core.hpp"
#include "conicgeom/rng.hpp"

namespace conicgeom::mc {

/// Orthonormal basis (columns) of a linear subspace of R^n.
struct SubspaceBasis {
    int n = 0;
    int dim = 0;
    Eigen::MatrixXd columns;
};

/// Outcome of an LP feasibility test. `certificate` holds the structural
/// variables when feasible; `degenerate` marks trials whose phase-1
/// objective landed inside the tolerance band (callers discard those).
struct LpResult {
    bool feasible = false;
    bool degenerate = false;
    Eigen::VectorXd certificate;
    double tolerance = 0.0;
};

Eigen::VectorXd sample_gaussian(int dim, SampleRng& rng);

/// Uniform (rotation invariant) random subspace: orthonormalized Gaussian
/// matrix. dim = 0 and dim = n are allowed.
SubspaceBasis sample_uniform_subspace(int n, int dim, SampleRng& rng);

/// Feasibility of  V lambda in L \ {0}:  exists lambda >= 0, sum = 1,
/// Qperp^T (V lambda) = 0, where Qperp spans the orthogonal complement
/// of L. Feasible iff C cap L != {0} for the pointed cone C = pos(V).
LpResult cone_hits_subspace(const Eigen::MatrixXd& generators,
                            const SubspaceBasis& lperp, double tol = 1e-9);

/// Feasibility of  W mu in L:  mu >= 0, sum = 1. Feasible iff the face
/// with vertex matrix W meets the subspace L.
LpResult face_hits_subspace(const Eigen::MatrixXd& vertices,
                            const SubspaceBasis& lperp, double tol = 1e-9);

/// x in conv(columns of points)?
LpResult point_in_hull(const Eigen::MatrixXd& points, const Eigen::VectorXd& x,
                       double tol = 1e-9);

/// x in pos(columns of generators)?
LpResult cone_contains(const Eigen::MatrixXd& generators,
                       const Eigen::VectorXd& x, double tol = 1e-9);

/// x in the zonotope sum_i [-g_i, g_i]?
LpResult point_in_zonotope(const Eigen::MatrixXd& generators,
                           const Eigen::VectorXd& x, double tol = 1e-9);

struct ConeProjection {
    Eigen::VectorXd projection;
    int face_dim = 0;
    Eigen::VectorXd coefficients;
};

/// Metric projection onto pos(generators) by Lawson-Hanson NNLS.
/// face_dim is the rank of the generator subset with coefficient > tol
/// (0 when the projection is the apex).
ConeProjection nnls_project_cone(const Eigen::MatrixXd& generators,
                                 const Eigen::VectorXd& x, double tol = 1e-9);

/// Face-dimension histogram of NNLS projections of standard Gaussians:
/// the Monte Carlo oracle for conic intrinsic volumes. Requires at most
/// 4096 generators.
IntrinsicVolumeVector estimate_intrinsic_volumes(const ConeSpec& c,
                                                 std::uint64_t samples,
                                                 std::uint64_t seed);

/// Frequency of C cap L != {0} over uniform subspaces of codimension l:
/// the Monte Carlo oracle for the Grassmann angle.
Estimate estimate_grassmann_angle(const ConeSpec& c, int codim,
                                  std::uint64_t samples, std::uint64_t seed);

/// Exact 2-D central section: substitute the plane basis into the
/// halfspace description and enumerate polygon vertices by pairwise
/// constraint intersection with feasibility filtering.
struct SectionPolygon {
    int vertex_count = 0;
    bool degenerate = false;
    std::vector<std::array<double, 2>> vertices;
};
SectionPolygon section_polygon_2d(const PolytopeSpec& p,
                                  const SubspaceBasis& basis, double tol = 1e-9);

/// Monte Carlo estimate of E #{(j+l)-faces hit by a uniform random
/// k-subspace}, the right-hand side of the section-count identity.
Estimate estimate_expected_faces(const PolytopeSpec& p, int k, int j,
                                 std::uint64_t samples, std::uint64_t seed);

/// Per-trial comparison of the exact 2-D section polygon against the
/// number of (n-2)-faces hit, for k = 2. Degenerate trials are discarded.
struct SectionAgreement {
    std::uint64_t trials = 0;
    std::uint64_t equal = 0;
    std::uint64_t discarded = 0;
};
SectionAgreement run_section_agreement(const PolytopeSpec& p,
                                       std::uint64_t samples,
                                       std::uint64_t seed);

enum class AbsorptionFamily { SymmetricGaussian, GaussianZonotope };

struct AbsorptionQuery {
    AbsorptionFamily family = AbsorptionFamily::SymmetricGaussian;
    int n = 1;
    int d = 1;
};

/// Non-absorption frequency: x = (x_norm, 0, ..., 0) outside the random
/// polytope over fresh point clouds (rotation invariance places x on the
/// first axis).
Estimate estimate_absorption(const AbsorptionQuery& q, double x_norm,
                             std::uint64_t samples, std::uint64_t seed);

/// Largest t with (t, 0, ..., 0) still inside the random polytope, per
/// cloud, by bisection over membership tests. Shared by the Laplace
/// consistency check so one cloud serves a whole radius grid.
std::vector<double> sample_inradius_profile(const AbsorptionQuery& q,
                                            std::uint64_t samples,
                                            std::uint64_t seed);

/// Frequency of sigma X outside the random polytope, X a fresh standard
/// Gaussian per cloud: the oracle for the scaled probabilities p(sigma^2).
Estimate estimate_scaled_nonabsorption(const AbsorptionQuery& q, double sigma2,
                                       std::uint64_t samples,
                                       std::uint64_t seed);

}  // namespace conicgeom::mc
