#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace conicgeom {

/// The three families of cones spanned by regular polytopes lifted to
/// height sigma: the simplex cone lives in R^n, the crosspolytope and
/// cube cones in R^(n+1).
enum class ConeFamily { Simplex, Cross, Cube };

enum class PolytopeFamily { Cube, Crosspolytope, Simplex };

/// A cone family together with its generator count n and shape parameter
/// (r for Simplex, sigma^2 for Cross/Cube). Immutable value type.
struct ConeSpec {
    ConeFamily family;
    int n;
    double param;

    static ConeSpec simplex(int n, double r);
    static ConeSpec cross(int n, double sigma2);
    static ConeSpec cube(int n, double sigma2);

    /// Dimension of the linear span: n for Simplex, n+1 for Cross/Cube.
    int ambient_dim() const;

    bool operator==(const ConeSpec&) const = default;
};

/// Regular polytope in ambient dimension n. The simplex is realized in
/// the n-dimensional span of the standard simplex in R^(n+1), expressed
/// in an explicit orthonormal basis of that span, so all three families
/// share the same V/H machinery below.
struct PolytopeSpec {
    PolytopeFamily family;
    int n;

    static PolytopeSpec cube(int n);
    static PolytopeSpec crosspolytope(int n);
    static PolytopeSpec simplex(int n);

    bool operator==(const PolytopeSpec&) const = default;
};

/// Combinatorial label of a k-face.
///   Cube:          indices = fixed coordinates, signs = their values.
///   Crosspolytope: indices = the k+1 spanning axes, signs = vertex signs.
///   Simplex:       indices = the k+1 spanning vertex indices (no signs).
struct FaceDescriptor {
    int dim;
    std::vector<int> indices;
    std::vector<int> signs;
};

/// Ordered conic intrinsic volumes v_0..v_m of a cone with ambient
/// dimension m. `errors`, when non-empty, carries a per-entry error
/// bound (propagated quadrature error or Monte Carlo stderr).
struct IntrinsicVolumeVector {
    std::vector<double> values;
    std::vector<double> errors;

    double sum() const;
    double odd_sum() const;
    double even_sum() const;
    /// v_k with the out-of-range convention v_k = 0.
    double at(int k) const;
};

/// Monte Carlo estimate with its reproducibility key.
struct Estimate {
    double mean = 0.0;
    double stderr_ = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

/// Tabulated density on a uniform grid [origin, origin + step*(N-1)].
struct GridDensity {
    double origin = 0.0;
    double step = 1.0;
    std::vector<double> values;

    /// Trapezoid-rule mass of the table.
    double total_mass() const;
    /// Linear interpolation, 0 outside the grid.
    double operator()(double x) const;
};

/// Exact binomial coefficient, 128-bit accumulation, valid for n <= 64.
/// Returns 0 for k outside [0, n]; rejects n < 0 or n > 64.
std::uint64_t binomial(int n, int k);

/// Number of k-faces of a regular polytope. Out-of-range k gives 0.
///   Cube:          2^(n-k) C(n,k),        0 <= k <= n-1
///   Crosspolytope: 2^(k+1) C(n,k+1),      0 <= k <= n-1
///   Simplex:       C(n+1,k+1),            0 <= k <= n
std::uint64_t face_count(const PolytopeSpec& p, int k);

/// Enumerate all k-faces of the polytope.
std::vector<FaceDescriptor> faces(const PolytopeSpec& p, int k);

/// Vertices of the polytope as columns, in working coordinates
/// (the simplex is given in its span basis, see simplex_span_basis).
Eigen::MatrixXd vertices(const PolytopeSpec& p);

/// Vertices of one face as columns.
Eigen::MatrixXd face_vertices(const PolytopeSpec& p, const FaceDescriptor& f);

/// Halfspace description A x <= b with the origin interior.
/// Crosspolytope restricted to n <= 16 (2^n rows).
struct HalfspaceSystem {
    Eigen::MatrixXd A;
    Eigen::VectorXd b;
};
HalfspaceSystem halfspaces(const PolytopeSpec& p);

/// Generators of the cone as columns. Simplex: n vectors in R^n with
/// Gram r + delta_ij; Cross: 2n vectors sigma*e_{n+1} +- e_i; Cube: 2^n
/// vectors sigma*e_{n+1} + sum eps_i e_i (n <= 20 enforced).
Eigen::MatrixXd cone_generators(const ConeSpec& c);

/// Orthonormal basis (columns) of the hyperplane {x in R^(n+1): sum x = 0},
/// the span of the centred standard simplex.
Eigen::MatrixXd simplex_span_basis(int n);

/// Default worker count for parallel estimators: CONIC_GEOM_THREADS if
/// set, otherwise hardware concurrency.
int default_threads();
void set_default_threads(int t);

}  // namespace conicgeom
