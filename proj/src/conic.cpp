#include "conicgeom/conic.hpp"

#include <cmath>
#include <stdexcept>

namespace conicgeom {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

struct Term {
    double value = 0.0;
    double error = 0.0;
};

// a * g1 * g2 with first-order error propagation.
Term product(double a, const GValue& g1, const GValue& g2) {
    Term t;
    t.value = a * g1.value * g2.value;
    t.error = a * (std::abs(g1.value) * g2.error_bound +
                   std::abs(g2.value) * g1.error_bound);
    return t;
}

}  // namespace

IntrinsicVolumeVector intrinsic_volumes(const ConeSpec& c, const EvalMethod& m) {
    const int n = c.n;
    IntrinsicVolumeVector out;
    const int dim = c.ambient_dim();
    out.values.assign(dim + 1, 0.0);
    out.errors.assign(dim + 1, 0.0);

    switch (c.family) {
        case ConeFamily::Cube: {
            const double s2 = c.param;
            const GValue v0 = g_cross(n, 1.0 / s2, m);
            out.values[0] = v0.value;
            out.errors[0] = v0.error_bound;
            for (int k = 1; k <= n + 1; ++k) {
                const double a =
                    std::ldexp(static_cast<double>(binomial(n, k - 1)), n - k + 1);
                const Term t = product(a, g_cube(k - 1, s2 + n - k + 1, m),
                                       g_simplex(n - k + 1, 1.0 / s2, m));
                out.values[k] = t.value;
                out.errors[k] = t.error;
            }
            break;
        }
        case ConeFamily::Cross: {
            const double s2 = c.param;
            for (int k = 0; k <= n; ++k) {
                const double a = std::ldexp(static_cast<double>(binomial(n, k)), k);
                const Term t = product(a, g_cube(n - k, 1.0 / s2 + k, m),
                                       g_simplex(k, s2, m));
                out.values[k] = t.value;
                out.errors[k] = t.error;
            }
            const GValue vt = g_cross(n, s2, m);
            out.values[n + 1] = vt.value;
            out.errors[n + 1] = vt.error_bound;
            break;
        }
        case ConeFamily::Simplex: {
            const double r = c.param;
            for (int k = 0; k <= n; ++k) {
                const double ck = -r / (1.0 + k * r);
                const Term t =
                    product(static_cast<double>(binomial(n, k)),
                            g_equicorr(k, ck, m), g_equicorr(n - k, -ck, m));
                out.values[k] = t.value;
                out.errors[k] = t.error;
            }
            break;
        }
    }
    return out;
}

ConeSpec polar(const ConeSpec& c) {
    switch (c.family) {
        case ConeFamily::Cube:
            return ConeSpec::cross(c.n, 1.0 / c.param);
        case ConeFamily::Cross:
            return ConeSpec::cube(c.n, 1.0 / c.param);
        case ConeFamily::Simplex: {
            if (c.n == 0) return c;
            return ConeSpec::simplex(c.n, -c.param / (1.0 + c.n * c.param));
        }
    }
    throw std::logic_error("polar: unknown family");
}

double grassmann_angle(const GrassmannQuery& q, const EvalMethod& m) {
    const int dim = q.cone.ambient_dim();
    require(q.codim >= 0 && q.codim <= dim, "grassmann_angle: codim out of range");
    const IntrinsicVolumeVector v = intrinsic_volumes(q.cone, m);
    double s = 0.0;
    for (int k = q.codim + 1; k <= dim; k += 2) s += v.at(k);
    return 2.0 * s;
}

double grassmann_complement(const GrassmannQuery& q, const EvalMethod& m) {
    const int dim = q.cone.ambient_dim();
    require(q.codim >= 0 && q.codim <= dim,
            "grassmann_complement: codim out of range");
    const IntrinsicVolumeVector v = intrinsic_volumes(q.cone, m);
    double s = 0.0;
    for (int k = q.codim - 1; k >= 0; k -= 2) s += v.at(k);
    return 2.0 * s;
}

GValue crosspoly_internal_angle(int n, int k, const EvalMethod& m) {
    require(n >= 1, "crosspoly_internal_angle: n must be >= 1");
    require(k >= 0 && k <= n - 1, "crosspoly_internal_angle: k out of range");
    return g_cross(n - k - 1, 1.0 / (k + 1), m);
}

GValue crosspoly_external_angle(int n, int k, const EvalMethod& m) {
    require(n >= 1, "crosspoly_external_angle: n must be >= 1");
    require(k >= 0 && k <= n - 1, "crosspoly_external_angle: k out of range");
    return g_cube(n - k - 1, static_cast<double>(k + 1), m);
}

}  // namespace conicgeom
