#include "conicgeom/sections.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "conicgeom/conic.hpp"

namespace conicgeom {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

double odd_tail_from(const IntrinsicVolumeVector& v, int l) {
    double s = 0.0;
    for (int k = l + 1; k < static_cast<int>(v.values.size()) + 2; k += 2)
        s += v.at(k);
    return s;
}

double factorial(int n) { return std::tgamma(n + 1.0); }

}  // namespace

double prob_face_hit(const PolytopeSpec& p, int d, int l, const EvalMethod& m) {
    const int n = p.n;
    require(l >= 1 && l <= n - 1, "prob_face_hit: l out of range");
    require(d >= l && d <= n - 1, "prob_face_hit: d out of range");
    switch (p.family) {
        case PolytopeFamily::Cube: {
            const auto v = intrinsic_volumes(ConeSpec::cube(d, double(n - d)), m);
            return 2.0 * odd_tail_from(v, l);
        }
        case PolytopeFamily::Crosspolytope: {
            double s = 0.0;
            for (int i = l; i <= d; ++i) s += static_cast<double>(binomial(d, i));
            return std::ldexp(s, -d);
        }
        case PolytopeFamily::Simplex: {
            const auto v = intrinsic_volumes(
                ConeSpec::simplex(d + 1, -1.0 / (n + 1)), m);
            return 2.0 * odd_tail_from(v, l);
        }
    }
    throw std::logic_error("prob_face_hit: unknown family");
}

double expected_faces(const SectionQuery& q, const EvalMethod& m) {
    const int n = q.polytope.n;
    require(n > q.k && q.k > q.j && q.j >= 0,
            "expected_faces: need n > k > j >= 0");
    const int l = n - q.k;
    const int d = q.j + l;
    return static_cast<double>(face_count(q.polytope, d)) *
           prob_face_hit(q.polytope, d, l, m);
}

double asymp_simplex_deficit(int i, int l, int n) {
    require(i > l && l >= 1, "asymp_simplex_deficit: need i > l >= 1");
    require(n - i + l + 1 >= 0, "asymp_simplex_deficit: n too small");
    const double im_l = i - l;
    const double c =
        std::pow(std::numbers::pi, 0.5 * (i - 2)) *
        std::pow(2.0, 0.5 * (i - 2 * l + 1)) * std::exp(1.5 * (l - i)) /
        (factorial(l - 1) * factorial(i - l) * std::pow(im_l, 0.5 * (i - 1)));
    const double nn = n;
    return c * std::pow(nn, -0.5 * nn) * std::pow(nn, 1.5 * (i - 1)) *
           std::pow(im_l * std::numbers::e / (2.0 * std::numbers::pi), 0.5 * nn);
}

double asymp_cube_lowdim(int j, int l, int n) {
    require(j >= 0 && l >= 1, "asymp_cube_lowdim: need j >= 0, l >= 1");
    const double nn = n;
    return std::pow(2.0, n - j) * std::pow(nn, j + 0.5 * l) /
           (factorial(l) * factorial(j)) * std::tgamma(0.5 * (l + 1)) /
           std::pow(std::numbers::pi, 0.5 * (l + 1));
}

double asymp_cube_fixed_codim(int m, int l, int n) {
    require(l >= 1 && l < m, "asymp_cube_fixed_codim: need 1 <= l < m");
    return std::pow(2.0 * n, m - l) / factorial(m - l);
}

double boroczky_henk_constant(int j, int k) {
    require(j >= 0 && k > j, "boroczky_henk_constant: need 0 <= j < k");
    const double g = g_simplex(j, 1.0 / (k - j)).value;
    return std::pow(2.0, k) * std::pow(std::numbers::pi, 0.5 * (k - 1)) *
           std::sqrt(static_cast<double>(k)) * factorial(k - 1) /
           (factorial(k - j) * factorial(j)) * g;
}

}  // namespace conicgeom
