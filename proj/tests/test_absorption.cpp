#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "conicgeom/absorption.hpp"

using namespace conicgeom;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("p_cross frozen values") {
    CHECK(p_cross(3, 1, 1.0) == doctest::Approx(0.25).epsilon(1e-10));
    CHECK(p_cross(2, 2, 1.0) ==
          doctest::Approx(4.0 * std::atan(1.0 / std::sqrt(2.0)) / kPi).epsilon(1e-9));
    // A far random point escapes the hull.
    CHECK(p_cross(3, 2, 1e8) > 0.999);
    CHECK_THROWS_AS(p_cross(1, 2, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(p_cross(3, 2, 0.0), std::invalid_argument);
}

TEST_CASE("p_cube frozen values") {
    CHECK(p_cube(1, 1, 1.0) == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(p_cube(2, 2, 1.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
    CHECK(p_cube(3, 2, 1e8) > 0.999);
    CHECK_THROWS_AS(p_cube(2, 3, 1.0), std::invalid_argument);
}

TEST_CASE("parity structure: complementary tails add to one") {
    for (int n : {2, 3, 4}) {
        for (int d = 1; d <= n; ++d) {
            for (double s2 : {0.25, 1.0, 4.0}) {
                const auto vx = intrinsic_volumes(ConeSpec::cross(n, s2));
                double even_tail = 0.0, odd_tail = 0.0;
                for (int k = d - 1; k >= 0; k -= 2) even_tail += vx.at(k);
                for (int k = d - 2; k >= 0; k -= 2) odd_tail += vx.at(k);
                for (int k = d + 1; k <= n + 1; k += 2) even_tail += vx.at(k);
                for (int k = d; k <= n + 1; k += 2) odd_tail += vx.at(k);
                CHECK(even_tail + odd_tail == doctest::Approx(1.0).epsilon(1e-6));
            }
        }
    }
}

TEST_CASE("f_cross_d2 endpoints and monotonicity") {
    CHECK(f_cross_d2(2, 0.0) == 0.0);
    CHECK(f_cross_d2(5, 0.0) == 0.0);
    CHECK(f_cross_d2(3, 1e9) == doctest::Approx(1.0).epsilon(1e-9));
    double prev = -1.0;
    for (double u : {0.01, 0.1, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0}) {
        const double f = f_cross_d2(3, u);
        CHECK(f >= prev);
        CHECK(f >= 0.0);
        CHECK(f <= 1.0);
        prev = f;
    }
    CHECK_THROWS_AS(f_cross_d2(1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(f_cross_d2(3, -1.0), std::invalid_argument);
}

TEST_CASE("f_cross_d2 matches the direct simulation") {
    for (double u : {0.5, 1.0}) {
        const auto est = mc::estimate_absorption(
            {AbsorptionFamily::SymmetricGaussian, 3, 2}, std::sqrt(2.0 * u),
            200'000, 13);
        CHECK(std::abs(est.mean - f_cross_d2(3, u)) < 4.0 * est.stderr_);
    }
}

TEST_CASE("laplace_rhs closed forms") {
    CHECK(laplace_rhs(AbsorptionFamily::SymmetricGaussian, 3, 2, 1.0) ==
          doctest::Approx(6.0 * g_cube(2, 2.0).value).epsilon(1e-9));
    CHECK(laplace_rhs(AbsorptionFamily::GaussianZonotope, 2, 2, 1.0) ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-9));
    // d = 2 simplifications at several lambdas.
    for (double lam : {0.5, 1.0, 2.0}) {
        CHECK(laplace_rhs(AbsorptionFamily::SymmetricGaussian, 4, 2, lam) ==
              doctest::Approx((2.0 * 4 / lam) * g_cube(3, lam + 1.0).value)
                  .epsilon(1e-9));
        CHECK(laplace_rhs(AbsorptionFamily::GaussianZonotope, 3, 2, lam) ==
              doctest::Approx((8.0 / lam) * g_simplex(3, lam).value).epsilon(1e-9));
    }
    CHECK_THROWS_AS(laplace_rhs(AbsorptionFamily::SymmetricGaussian, 3, 2, 0.0),
                    std::invalid_argument);
}

TEST_CASE("laplace_rhs restates Gamma(d/2) lambda^{-d/2} p(1/lambda)") {
    for (int d : {1, 2, 3}) {
        for (double lam : {0.5, 2.0}) {
            const double lhs =
                laplace_rhs(AbsorptionFamily::SymmetricGaussian, 4, d, lam);
            const double rhs = std::tgamma(0.5 * d) * std::pow(lam, -0.5 * d) *
                               p_cross(4, d, 1.0 / lam);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
        }
    }
}

TEST_CASE("laplace transform: numeric LHS against the closed RHS") {
    for (auto fam : {AbsorptionFamily::SymmetricGaussian,
                     AbsorptionFamily::GaussianZonotope}) {
        const auto lhs = laplace_lhs_numeric(fam, 3, 2, 1.0, 30'000, 21);
        const double rhs = laplace_rhs(fam, 3, 2, 1.0);
        CHECK(std::abs(lhs.mean - rhs) <
              std::max(4.0 * lhs.stderr_, 0.02 * rhs));
    }
    // Decay in lambda for n > d.
    const double big = laplace_rhs(AbsorptionFamily::SymmetricGaussian, 3, 2, 50.0);
    CHECK(big < 0.05);
}
