#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conicgeom/core.hpp"

using namespace conicgeom;

TEST_CASE("binomial basics") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(10, 5) == 252);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(64, 32) == 1832624140942590534ULL);
    CHECK(binomial(7, -1) == 0);
    CHECK_THROWS_AS(binomial(65, 2), std::invalid_argument);
    CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
}

TEST_CASE("face counts") {
    CHECK(face_count(PolytopeSpec::cube(3), 1) == 12);
    CHECK(face_count(PolytopeSpec::crosspolytope(3), 2) == 8);
    CHECK(face_count(PolytopeSpec::simplex(3), 1) == 6);
    CHECK(face_count(PolytopeSpec::cube(3), 3) == 0);
    CHECK(face_count(PolytopeSpec::cube(3), -1) == 0);
    CHECK(face_count(PolytopeSpec::simplex(3), 3) == 1);
}

TEST_CASE("Euler relation across families, n <= 8") {
    for (int n = 1; n <= 8; ++n) {
        long long cube_sum = 0, cross_sum = 0, simplex_sum = 0;
        for (int k = 0; k <= n - 1; ++k) {
            const long long sign = k % 2 == 0 ? 1 : -1;
            cube_sum += sign * static_cast<long long>(face_count(PolytopeSpec::cube(n), k));
            cross_sum += sign * static_cast<long long>(
                                    face_count(PolytopeSpec::crosspolytope(n), k));
        }
        for (int k = 0; k <= n; ++k) {
            const long long sign = k % 2 == 0 ? 1 : -1;
            simplex_sum += sign * static_cast<long long>(
                                      face_count(PolytopeSpec::simplex(n), k));
        }
        const long long want = 1 - (n % 2 == 0 ? 1 : -1);
        CHECK(cube_sum == want);
        CHECK(cross_sum == want);
        CHECK(simplex_sum == 1);
    }
}

TEST_CASE("face enumeration matches the closed-form counts") {
    for (int n = 1; n <= 5; ++n) {
        for (const auto& p : {PolytopeSpec::cube(n), PolytopeSpec::crosspolytope(n),
                              PolytopeSpec::simplex(n)}) {
            const int top = p.family == PolytopeFamily::Simplex ? n : n - 1;
            for (int k = 0; k <= top; ++k)
                CHECK(faces(p, k).size() == face_count(p, k));
        }
    }
}

TEST_CASE("cone generator Gram matrices") {
    SUBCASE("simplex: <u_i,u_j> = r + delta_ij") {
        for (double r : {-0.2, 0.0, 1.0, 4.0}) {
            const auto v = cone_generators(ConeSpec::simplex(4, r));
            const Eigen::MatrixXd gram = v.transpose() * v;
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    CHECK(gram(i, j) ==
                          doctest::Approx(r + (i == j ? 1.0 : 0.0)).epsilon(1e-12));
        }
    }
    SUBCASE("cross: sigma^2 +- delta") {
        const double s2 = 2.5;
        const auto v = cone_generators(ConeSpec::cross(3, s2));
        const Eigen::MatrixXd gram = v.transpose() * v;
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                const double d = i == j ? 1.0 : 0.0;
                CHECK(gram(2 * i, 2 * j) == doctest::Approx(s2 + d).epsilon(1e-12));
                CHECK(gram(2 * i + 1, 2 * j + 1) == doctest::Approx(s2 + d).epsilon(1e-12));
                CHECK(gram(2 * i, 2 * j + 1) == doctest::Approx(s2 - d).epsilon(1e-12));
            }
        }
    }
    SUBCASE("cube: sigma^2 + <eps,eta>") {
        const double s2 = 0.7;
        const auto v = cone_generators(ConeSpec::cube(3, s2));
        const Eigen::MatrixXd gram = v.transpose() * v;
        const auto cube_vs = vertices(PolytopeSpec::cube(3));
        for (int a = 0; a < 8; ++a)
            for (int b = 0; b < 8; ++b)
                CHECK(gram(a, b) ==
                      doctest::Approx(s2 + cube_vs.col(a).dot(cube_vs.col(b)))
                          .epsilon(1e-12));
    }
}

TEST_CASE("polytope geometry consistency") {
    SUBCASE("origin strictly inside the halfspace systems") {
        for (int n = 1; n <= 5; ++n) {
            for (const auto& p : {PolytopeSpec::cube(n), PolytopeSpec::crosspolytope(n),
                                  PolytopeSpec::simplex(n)}) {
                const auto hs = halfspaces(p);
                CHECK(hs.b.minCoeff() > 0.0);
            }
        }
    }
    SUBCASE("vertices satisfy their halfspaces with equality somewhere") {
        for (const auto& p : {PolytopeSpec::cube(3), PolytopeSpec::crosspolytope(3),
                              PolytopeSpec::simplex(3)}) {
            const auto hs = halfspaces(p);
            const auto vs = vertices(p);
            for (int c = 0; c < vs.cols(); ++c) {
                const Eigen::VectorXd slack = hs.b - hs.A * vs.col(c);
                CHECK(slack.minCoeff() > -1e-12);
                CHECK(slack.minCoeff() < 1e-12);  // vertex lies on the boundary
            }
        }
    }
    SUBCASE("simplex vertices are a regular simplex") {
        const auto vs = vertices(PolytopeSpec::simplex(4));
        const double edge = (vs.col(0) - vs.col(1)).norm();
        for (int a = 0; a < 5; ++a)
            for (int b = a + 1; b < 5; ++b)
                CHECK((vs.col(a) - vs.col(b)).norm() == doctest::Approx(edge).epsilon(1e-12));
        CHECK(vs.rowwise().sum().cwiseAbs().maxCoeff() < 1e-12);  // centred
    }
    SUBCASE("crosspolytope halfspaces limited to n <= 16") {
        CHECK_THROWS_AS(halfspaces(PolytopeSpec::crosspolytope(17)),
                        std::invalid_argument);
    }
}

TEST_CASE("ConeSpec validation") {
    CHECK_THROWS_AS(ConeSpec::cube(3, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(ConeSpec::cross(3, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(ConeSpec::simplex(4, -0.25), std::invalid_argument);
    CHECK(ConeSpec::simplex(4, -0.2).ambient_dim() == 4);
    CHECK(ConeSpec::cross(4, 1.0).ambient_dim() == 5);
    CHECK(ConeSpec::cube(4, 1.0).ambient_dim() == 5);
}

TEST_CASE("GridDensity interpolation and mass") {
    GridDensity g;
    g.origin = 0.0;
    g.step = 0.5;
    g.values = {0.0, 1.0, 1.0, 0.0};
    CHECK(g.total_mass() == doctest::Approx(1.0));
    CHECK(g(0.25) == doctest::Approx(0.5));
    CHECK(g(-1.0) == 0.0);
    CHECK(g(99.0) == 0.0);
}
