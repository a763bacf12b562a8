#include "conicgeom/absorption.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "conicgeom/conic.hpp"
#include "conicgeom/normal.hpp"
#include "quad.hpp"

namespace conicgeom {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

double parity_tail(const IntrinsicVolumeVector& v, int from) {
    double s = 0.0;
    for (int k = from; k >= 0; k -= 2) s += v.at(k);
    return s;
}

}  // namespace

double p_cross(int n, int d, double s2, const EvalMethod& m) {
    require(n >= d && d >= 1, "p_cross: need n >= d >= 1");
    require(s2 > 0.0, "p_cross: sigma^2 must be positive");
    const IntrinsicVolumeVector v = intrinsic_volumes(ConeSpec::cross(n, s2), m);
    return std::clamp(2.0 * parity_tail(v, d - 1), 0.0, 1.0);
}

double p_cube(int n, int d, double s2, const EvalMethod& m) {
    require(n >= d && d >= 1, "p_cube: need n >= d >= 1");
    require(s2 > 0.0, "p_cube: sigma^2 must be positive");
    const IntrinsicVolumeVector v = intrinsic_volumes(ConeSpec::cube(n, s2), m);
    return std::clamp(2.0 * parity_tail(v, d - 1), 0.0, 1.0);
}

double f_cross_d2(int n, double u, const EvalMethod& m) {
    require(n >= 2, "f_cross_d2: need n >= 2");
    require(u >= 0.0, "f_cross_d2: u must be >= 0");
    if (u == 0.0) return 0.0;

    const double root = std::sqrt(2.0 * u);
    const double root_u = std::sqrt(u);
    const double half_pi = 1.5707963267948966192313217;

    // F(u) = P((L_n^2 + xi^2)/2 <= u) after t = u sin^2 theta, integrated
    // in phi = theta sqrt(u) so the boundary layer at large u keeps a
    // u-independent scale.
    auto cdf_integrand = [&](double phi) {
        const double theta = phi / root_u;
        const double sn = std::sin(theta);
        const double cn = std::cos(theta);
        return std::pow(folded_cdf(root * sn), n - 1) * folded_cdf(root * cn) *
               std::exp(-u * sn * sn) * cn;
    };
    const double phi_max = std::min(half_pi * root_u, 12.0);
    const auto qf = detail::integrate(cdf_integrand, 0.0, phi_max, m.tol);
    const double big_f = (2.0 * n / std::sqrt(std::numbers::pi)) * qf.value;

    // Density of the same convolution, same substitution.
    auto pdf_integrand = [&](double theta) {
        return std::pow(folded_cdf(root * std::sin(theta)), n - 1);
    };
    const auto qd = detail::integrate(pdf_integrand, 0.0, half_pi, m.tol);
    const double small_f = (2.0 * n / std::numbers::pi) * std::exp(-u) * qd.value;

    return std::clamp(big_f + small_f, 0.0, 1.0);
}

double laplace_rhs(AbsorptionFamily family, int n, int d, double lambda,
                   const EvalMethod& m) {
    require(n >= d && d >= 1, "laplace_rhs: need n >= d >= 1");
    require(lambda > 0.0, "laplace_rhs: lambda must be positive");
    const ConeSpec cone = family == AbsorptionFamily::SymmetricGaussian
                              ? ConeSpec::cross(n, 1.0 / lambda)
                              : ConeSpec::cube(n, 1.0 / lambda);
    const IntrinsicVolumeVector v = intrinsic_volumes(cone, m);
    return 2.0 * std::tgamma(0.5 * d) * std::pow(lambda, -0.5 * d) *
           parity_tail(v, d - 1);
}

Estimate laplace_lhs_numeric(AbsorptionFamily family, int n, int d,
                             double lambda, std::uint64_t mc_samples,
                             std::uint64_t seed) {
    require(n >= d && d >= 1, "laplace_lhs_numeric: need n >= d >= 1");
    require(lambda > 0.0, "laplace_lhs_numeric: lambda must be positive");

    // Geometric radius grid covering the region where the weight
    // u^{d/2-1} e^{-lambda u} is above ~1e-12 of its scale.
    constexpr int kGrid = 64;
    const double u_min = 1e-3 / lambda;
    const double u_max = (30.0 + 3.0 * d) / lambda;
    const double ratio = std::pow(u_max / u_min, 1.0 / (kGrid - 1));
    std::vector<double> us(kGrid), weight(kGrid), trap(kGrid);
    for (int k = 0; k < kGrid; ++k) {
        us[k] = u_min * std::pow(ratio, k);
        weight[k] = std::pow(us[k], 0.5 * d - 1.0) * std::exp(-lambda * us[k]);
    }
    for (int k = 0; k < kGrid; ++k) {
        const double left = k == 0 ? us[0] : us[k - 1];
        const double right = k == kGrid - 1 ? us[kGrid - 1] : us[k + 1];
        trap[k] = 0.5 * (right - left);
    }

    const AbsorptionQuery q{family, n, d};
    const std::vector<double> radii =
        mc::sample_inradius_profile(q, mc_samples, seed);

    // Per-cloud value of the integral; common clouds across the grid.
    MeanAcc acc;
    for (const double r : radii) {
        const double u_star = 0.5 * r * r;  // outside iff u > u_star
        double g = 0.0;
        for (int k = 0; k < kGrid; ++k)
            if (us[k] > u_star) g += trap[k] * weight[k];
        acc.add(g);
    }
    return acc.estimate(seed);
}

}  // namespace conicgeom
