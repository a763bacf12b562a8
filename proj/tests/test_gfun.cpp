#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "conicgeom/gfun.hpp"
#include "conicgeom/mc.hpp"

using namespace conicgeom;

namespace {
constexpr double kPi = std::numbers::pi;

double planar(double s2) { return std::atan(1.0 / std::sqrt(s2)) / kPi; }

// 2-D orthant probability with correlation rho, the classical closed form.
double orthant2(double rho) { return 0.25 + std::asin(rho) / (2.0 * kPi); }

// 3-D equicorrelated orthant probability.
double orthant3(double rho) { return 0.125 + 3.0 * std::asin(rho) / (4.0 * kPi); }
}  // namespace

TEST_CASE("g_cube closed forms") {
    CHECK(g_cube(0, 0.37).value == 0.5);
    CHECK(g_cube(1, 1.0).value == doctest::Approx(0.25).epsilon(1e-12));
    for (double s2 : {0.25, 1.0, 4.0})
        CHECK(g_cube(1, s2).value == doctest::Approx(planar(s2)).epsilon(1e-12));
    // Exchangeability of the n+1 folded normals at sigma = 1.
    for (int n = 1; n <= 6; ++n)
        CHECK(g_cube(n, 1.0).value ==
              doctest::Approx(1.0 / (2.0 * (n + 1))).epsilon(1e-10));
    CHECK_THROWS_AS(g_cube(2, 0.0), std::invalid_argument);
}

TEST_CASE("g_cross closed forms and table path") {
    CHECK(g_cross(0, 2.0).value == 0.5);
    CHECK(g_cross(1, 4.0).value == doctest::Approx(0.1475836176).epsilon(1e-9));
    for (double s2 : {0.25, 1.0, 4.0})
        CHECK(g_cross(1, s2).value == doctest::Approx(planar(s2)).epsilon(1e-12));
    // n = 2 table value against the Monte Carlo oracle.
    const auto q = g_cross(2, 1.0);
    const auto m = g_cross(2, 1.0, EvalMethod::monte_carlo(2'000'000, 17));
    CHECK(std::abs(q.value - m.value) < 4.0 * m.error_bound);
    CHECK_THROWS_AS(g_cross(2, -1.0), std::invalid_argument);
}

TEST_CASE("g_equicorr") {
    SUBCASE("trivial values") {
        for (int m = 1; m <= 8; ++m)
            CHECK(g_equicorr(m, 0.0).value == doctest::Approx(std::pow(2.0, -m)));
        CHECK(g_equicorr(1, 0.9).value == 0.5);
        CHECK(g_equicorr(1, -0.9).value == 0.5);
        CHECK(g_equicorr(0, 0.3).value == 1.0);
    }
    SUBCASE("m = 2 closed form, both signs of c") {
        for (double c : {-0.45, -0.25, -0.05, 0.3, 2.0}) {
            const double rho = c / (1.0 + c);
            CHECK(g_equicorr(2, c).value ==
                  doctest::Approx(orthant2(rho)).epsilon(1e-10));
        }
        CHECK(g_equicorr(2, -0.25).value ==
              doctest::Approx(std::acos(1.0 / 3.0) / (2.0 * kPi)).epsilon(1e-10));
    }
    SUBCASE("m = 3 closed form, both signs of c") {
        for (double c : {-0.3, -0.1, 0.4, 1.5}) {
            const double rho = c / (1.0 + c);
            CHECK(g_equicorr(3, c).value ==
                  doctest::Approx(orthant3(rho)).epsilon(1e-10));
        }
    }
    SUBCASE("negative-c quadrature against Monte Carlo, m = 5") {
        const auto q = g_equicorr(5, -0.15);
        const auto m = g_equicorr(5, -0.15, EvalMethod::monte_carlo(2'000'000, 5));
        CHECK(std::abs(q.value - m.value) < 4.0 * m.error_bound);
    }
    SUBCASE("domain") {
        CHECK_THROWS_AS(g_equicorr(4, -0.25), std::invalid_argument);
        CHECK_THROWS_AS(g_equicorr(4, -0.3), std::invalid_argument);
        CHECK_NOTHROW(g_equicorr(4, -0.2499));
    }
}

TEST_CASE("g_simplex") {
    CHECK(g_simplex(0, 5.0).value == 1.0);
    CHECK(g_simplex(1, 0.3).value == 0.5);
    CHECK(g_simplex(2, 1.0).value == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
    for (int n = 2; n <= 6; ++n)
        CHECK(g_simplex(n, 0.0).value == doctest::Approx(std::pow(2.0, -n)));
    // Planar angle arccos(r/(1+r)) / (2 pi) for n = 2.
    for (double r : {-0.3, 0.5, 2.0})
        CHECK(g_simplex(2, r).value ==
              doctest::Approx(std::acos(r / (1.0 + r)) / (2.0 * kPi)).epsilon(1e-10));
    CHECK_THROWS_AS(g_simplex(2, -0.5), std::invalid_argument);
}

TEST_CASE("g_simplex matches direct cone-membership sampling") {
    // Standard Gaussian in the span of the generators falling inside the cone.
    for (int n : {2, 3, 4}) {
        for (double r : {-1.0 / (n + 1) + 0.05, 0.0, 1.0}) {
            const auto gens = cone_generators(ConeSpec::simplex(n, r));
            std::uint64_t hits = 0;
            const std::uint64_t trials = 200'000;
            for (std::uint64_t i = 0; i < trials; ++i) {
                SampleRng rng(99, 4242, i);
                const auto x = mc::sample_gaussian(n, rng);
                if (mc::cone_contains(gens, x).feasible) ++hits;
            }
            const double freq = static_cast<double>(hits) / trials;
            const double se = std::sqrt(freq * (1.0 - freq) / trials);
            const double want = g_simplex(n, r).value;
            CHECK(std::abs(freq - want) < 4.0 * std::max(se, 1e-9));
        }
    }
}

TEST_CASE("quadrature vs Monte Carlo agreement for the cone angles") {
    for (int n : {1, 3, 6}) {
        for (double s2 : {0.25, 1.0, 4.0}) {
            const auto qc = g_cube(n, s2);
            const auto mc = g_cube(n, s2, EvalMethod::monte_carlo(400'000, 31));
            CHECK(std::abs(qc.value - mc.value) < 4.0 * mc.error_bound);
            const auto qx = g_cross(n, s2);
            const auto mx = g_cross(n, s2, EvalMethod::monte_carlo(400'000, 32));
            CHECK(std::abs(qx.value - mx.value) <
                  4.0 * std::max(mx.error_bound, 1e-9));
        }
    }
}

TEST_CASE("monotonicity and nesting in sigma^2") {
    for (int n : {1, 2, 4}) {
        double prev_cube = 1.0, prev_cross = 1.0;
        for (double s2 : {0.1, 0.5, 1.0, 2.0, 8.0}) {
            const double c = g_cube(n, s2).value;
            const double x = g_cross(n, s2).value;
            CHECK(c < prev_cube);
            CHECK(x < prev_cross);
            CHECK(x <= c + 1e-12);  // the l1 cone sits inside the linf cone
            prev_cube = c;
            prev_cross = x;
        }
    }
}

TEST_CASE("folded_sum_density") {
    SUBCASE("n = 1 is the half-normal") {
        const auto f = folded_sum_density(1);
        CHECK(f.values[0] == doctest::Approx(std::sqrt(2.0 / kPi)).epsilon(1e-6));
        CHECK(f.total_mass() == doctest::Approx(1.0).epsilon(1e-6));
    }
    SUBCASE("n = 2 mean is 2 E|xi|") {
        const auto f = folded_sum_density(2);
        double mean = 0.0;
        for (std::size_t i = 0; i < f.values.size(); ++i) {
            const double w = (i == 0 || i + 1 == f.values.size()) ? 0.5 : 1.0;
            mean += w * f.step * static_cast<double>(i) * f.values[i] * f.step;
        }
        CHECK(mean == doctest::Approx(2.0 * std::sqrt(2.0 / kPi)).epsilon(1e-4));
    }
    SUBCASE("mass within 1e-6 for all n <= 6") {
        for (int n = 1; n <= 6; ++n)
            CHECK(folded_sum_density(n).total_mass() ==
                  doctest::Approx(1.0).epsilon(1e-6));
    }
    SUBCASE("parameter validation") {
        CHECK_THROWS_AS(folded_sum_density(2, -0.5), std::invalid_argument);
        CHECK_THROWS_AS(folded_sum_density(0), std::invalid_argument);
        CHECK_THROWS_AS(folded_sum_density(4, 0.0009765625, 5.0),
                        std::invalid_argument);
    }
}

TEST_CASE("EvalMethod validation") {
    CHECK_THROWS_AS(EvalMethod::monte_carlo(100, 1), std::invalid_argument);
    CHECK_THROWS_AS(EvalMethod::quadrature(-1.0), std::invalid_argument);
    CHECK(EvalMethod::monte_carlo(10'000, 1).is_mc());
}

TEST_CASE("Monte Carlo determinism: same seed, any thread count") {
    const auto m = EvalMethod::monte_carlo(100'000, 77);
    set_default_threads(1);
    const auto a = g_cross(2, 1.0, m);
    set_default_threads(4);
    const auto b = g_cross(2, 1.0, m);
    set_default_threads(0);
    CHECK(a.value == b.value);
    CHECK(a.error_bound == b.error_bound);
}
