#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "conicgeom/conic.hpp"
#include "conicgeom/mc.hpp"

using namespace conicgeom;
using namespace conicgeom::mc;

TEST_CASE("sample_gaussian moments and determinism") {
    double sum = 0.0, sumsq = 0.0;
    const std::uint64_t n = 1'000'000;
    for (std::uint64_t i = 0; i < n; ++i) {
        SampleRng rng(12, 0, i);
        const double x = rng.next_normal();
        sum += x;
        sumsq += x * x;
    }
    const double mean = sum / n;
    const double var = sumsq / n - mean * mean;
    CHECK(std::abs(mean) < 4.0 / std::sqrt(static_cast<double>(n)));
    CHECK(std::abs(var - 1.0) < 0.01);

    SampleRng a(3, 4, 5), b(3, 4, 5);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("sample_uniform_subspace") {
    SUBCASE("orthonormal columns") {
        SampleRng rng(1, 2, 3);
        for (int dim : {1, 3, 5}) {
            const auto basis = sample_uniform_subspace(5, dim, rng);
            const Eigen::MatrixXd gram =
                basis.columns.transpose() * basis.columns -
                Eigen::MatrixXd::Identity(dim, dim);
            CHECK(gram.cwiseAbs().maxCoeff() < 1e-12);
        }
    }
    SUBCASE("line angles uniform on [0, pi): chi-squared test") {
        constexpr int kBins = 36;
        constexpr std::uint64_t kTrials = 100'000;
        int bins[kBins] = {};
        for (std::uint64_t i = 0; i < kTrials; ++i) {
            SampleRng rng(9, 1, i);
            const auto basis = sample_uniform_subspace(2, 1, rng);
            double theta = std::atan2(basis.columns(1, 0), basis.columns(0, 0));
            if (theta < 0.0) theta += std::numbers::pi;
            if (theta >= std::numbers::pi) theta -= std::numbers::pi;
            ++bins[static_cast<int>(theta / std::numbers::pi * kBins)];
        }
        const double expect = static_cast<double>(kTrials) / kBins;
        double chi2 = 0.0;
        for (int b : bins) chi2 += (b - expect) * (b - expect) / expect;
        CHECK(chi2 < 66.619);  // 0.999 quantile of chi^2(35)
    }
    SUBCASE("degenerate dims") {
        SampleRng rng(4, 4, 4);
        CHECK(sample_uniform_subspace(3, 0, rng).columns.cols() == 0);
        CHECK(sample_uniform_subspace(3, 3, rng).columns.cols() == 3);
    }
}

TEST_CASE("LP feasibility basics") {
    SUBCASE("cone_hits_subspace trivial cases") {
        const auto gens = cone_generators(ConeSpec::cross(2, 1.0));
        SubspaceBasis full_perp{3, 3, Eigen::MatrixXd::Identity(3, 3)};
        CHECK_FALSE(cone_hits_subspace(gens, full_perp).feasible);  // L = {0}
        SubspaceBasis empty_perp{3, 0, Eigen::MatrixXd(3, 0)};
        CHECK(cone_hits_subspace(gens, empty_perp).feasible);  // L = R^3
    }
    SUBCASE("face on one side of the subspace misses it") {
        // Cube facet x_1 = 1 versus L = span{e_2, e_3} in R^3.
        const auto p = PolytopeSpec::cube(3);
        FaceDescriptor facet{2, {0}, {1}};
        const auto w = face_vertices(p, facet);
        SubspaceBasis lperp{3, 1, Eigen::MatrixXd::Identity(3, 3).leftCols(1)};
        CHECK_FALSE(face_hits_subspace(w, lperp).feasible);
        // A face containing a point of L is hit: facet x_3 = 1 contains e_3... no,
        // L = span{e_2,e_3}: the facet x_2 = 1 contains the point e_2 of L.
        FaceDescriptor facet2{2, {1}, {1}};
        CHECK(face_hits_subspace(face_vertices(p, facet2), lperp).feasible);
    }
    SUBCASE("point_in_hull trivial cases") {
        Eigen::MatrixXd pts(2, 3);
        pts << 0, 2, 0, 0, 0, 2;
        Eigen::VectorXd x(2);
        x << 0, 0;
        CHECK(point_in_hull(pts, x).feasible);  // a vertex
        x << 0.6, 0.6;
        CHECK(point_in_hull(pts, x).feasible);  // centroid-ish
        x << 3, 3;
        CHECK_FALSE(point_in_hull(pts, x).feasible);  // outside bounding box
        // Certificate reproduces the point.
        const auto r = point_in_hull(pts, x = (Eigen::VectorXd(2) << 0.5, 0.25).finished());
        CHECK(r.feasible);
        CHECK((pts * r.certificate - x).norm() < 1e-8);
        CHECK(std::abs(r.certificate.sum() - 1.0) < 1e-8);
    }
    SUBCASE("point_in_zonotope trivial cases") {
        Eigen::MatrixXd g(2, 3);
        g << 1, 0, 1, 0, 1, 1;
        Eigen::VectorXd x = Eigen::VectorXd::Zero(2);
        CHECK(point_in_zonotope(g, x).feasible);
        x = g.rowwise().sum();
        CHECK(point_in_zonotope(g, x).feasible);  // all lambda = 1
        x *= 1.01;
        CHECK_FALSE(point_in_zonotope(g, x).feasible);
        // Certificate lies in the cube and reproduces x.
        x = 0.3 * g.rowwise().sum();
        const auto r = point_in_zonotope(g, x);
        CHECK(r.feasible);
        CHECK(r.certificate.cwiseAbs().maxCoeff() <= 1.0 + 1e-8);
        CHECK((g * r.certificate - x).norm() < 1e-8);
    }
}

TEST_CASE("nnls_project_cone") {
    Eigen::MatrixXd quad = Eigen::MatrixXd::Identity(2, 2);
    Eigen::VectorXd x(2);
    x << 1, -1;
    auto pr = nnls_project_cone(quad, x);
    CHECK((pr.projection - (Eigen::VectorXd(2) << 1, 0).finished()).norm() < 1e-12);
    CHECK(pr.face_dim == 1);
    x << 2, 3;
    pr = nnls_project_cone(quad, x);
    CHECK((pr.projection - x).norm() < 1e-12);
    CHECK(pr.face_dim == 2);
    x << -1, -2;
    pr = nnls_project_cone(quad, x);
    CHECK(pr.projection.norm() < 1e-12);
    CHECK(pr.face_dim == 0);
    // Projection is idempotent and never increases the norm.
    SampleRng rng(8, 8, 8);
    const auto gens = cone_generators(ConeSpec::cube(3, 1.0));
    for (int t = 0; t < 50; ++t) {
        const Eigen::VectorXd y = sample_gaussian(4, rng);
        const auto p1 = nnls_project_cone(gens, y);
        CHECK(p1.projection.norm() <= y.norm() + 1e-10);
        const auto p2 = nnls_project_cone(gens, p1.projection);
        CHECK((p2.projection - p1.projection).norm() < 1e-8);
    }
}

TEST_CASE("estimate_intrinsic_volumes matches the closed forms") {
    SUBCASE("quadrant") {
        const auto est = estimate_intrinsic_volumes(ConeSpec::simplex(2, 0.0),
                                                    100'000, 5);
        CHECK(std::abs(est.values[0] - 0.25) < 4.0 * est.errors[0]);
        CHECK(std::abs(est.values[1] - 0.50) < 4.0 * est.errors[1]);
        CHECK(std::abs(est.values[2] - 0.25) < 4.0 * est.errors[2]);
    }
    SUBCASE("simplex cone dimension 3 at r = 0") {
        const auto est = estimate_intrinsic_volumes(ConeSpec::simplex(3, 0.0),
                                                    100'000, 6);
        const double want[] = {0.125, 0.375, 0.375, 0.125};
        for (int k = 0; k <= 3; ++k)
            CHECK(std::abs(est.values[k] - want[k]) < 4.0 * est.errors[k]);
    }
    SUBCASE("cube cone matches Theorem values") {
        const auto est = estimate_intrinsic_volumes(ConeSpec::cube(2, 1.0),
                                                    100'000, 7);
        const auto th = intrinsic_volumes(ConeSpec::cube(2, 1.0));
        for (int k = 0; k <= 3; ++k)
            CHECK(std::abs(est.values[k] - th.values[k]) <
                  4.0 * std::max(est.errors[k], 1e-9));
    }
}

TEST_CASE("section_polygon_2d exact cases") {
    SUBCASE("axis plane through the cube is a square") {
        SubspaceBasis b{3, 2, Eigen::MatrixXd::Identity(3, 3).leftCols(2)};
        const auto poly = section_polygon_2d(PolytopeSpec::cube(3), b);
        CHECK(poly.vertex_count == 4);
    }
    SUBCASE("plane orthogonal to (1,1,1) cuts a hexagon") {
        Eigen::MatrixXd cols(3, 2);
        cols.col(0) = Eigen::Vector3d(1, -1, 0).normalized();
        cols.col(1) = Eigen::Vector3d(1, 1, -2).normalized();
        SubspaceBasis b{3, 2, cols};
        const auto poly = section_polygon_2d(PolytopeSpec::cube(3), b);
        CHECK(poly.vertex_count == 6);
    }
    SUBCASE("random octahedron sections are hexagons") {
        SampleRng rng(1, 1, 1);
        for (int t = 0; t < 200; ++t) {
            const auto b = sample_uniform_subspace(3, 2, rng);
            const auto poly =
                section_polygon_2d(PolytopeSpec::crosspolytope(3), b);
            if (!poly.degenerate) CHECK(poly.vertex_count == 6);
        }
    }
}

TEST_CASE("per-trial equality of the two section counters") {
    for (const auto& p : {PolytopeSpec::cube(4), PolytopeSpec::crosspolytope(4),
                          PolytopeSpec::simplex(4)}) {
        const auto ag = run_section_agreement(p, 2'000, 99);
        CHECK(ag.discarded * 1000 <= 2'000);
        CHECK(ag.equal == ag.trials);
    }
}

TEST_CASE("estimate_absorption endpoints") {
    const auto zero = estimate_absorption(
        {AbsorptionFamily::SymmetricGaussian, 3, 2}, 0.0, 20'000, 2);
    CHECK(zero.mean == 0.0);  // origin is always absorbed for n >= 2
    const auto far = estimate_absorption(
        {AbsorptionFamily::SymmetricGaussian, 3, 2}, 100.0, 20'000, 2);
    CHECK(far.mean > 0.999);
    CHECK_THROWS_AS(estimate_absorption({AbsorptionFamily::SymmetricGaussian, 1, 2},
                                        1.0, 20'000, 2),
                    std::invalid_argument);
}

TEST_CASE("estimators are independent of the worker count") {
    set_default_threads(1);
    const auto a = estimate_intrinsic_volumes(ConeSpec::cross(2, 1.0), 50'000, 31);
    const auto ga = estimate_grassmann_angle(ConeSpec::cross(2, 1.0), 1, 50'000, 32);
    set_default_threads(3);
    const auto b = estimate_intrinsic_volumes(ConeSpec::cross(2, 1.0), 50'000, 31);
    const auto gb = estimate_grassmann_angle(ConeSpec::cross(2, 1.0), 1, 50'000, 32);
    set_default_threads(0);
    for (int k = 0; k <= 3; ++k) CHECK(a.values[k] == b.values[k]);
    CHECK(ga.mean == gb.mean);
    CHECK(ga.stderr_ == gb.stderr_);
}

TEST_CASE("scaled non-absorption oracle hits a known value") {
    // p_cross(3,1,1) = 1/4 by pure symmetry.
    const auto est = estimate_scaled_nonabsorption(
        {AbsorptionFamily::SymmetricGaussian, 3, 1}, 1.0, 200'000, 55);
    CHECK(std::abs(est.mean - 0.25) < 4.0 * est.stderr_);
}
