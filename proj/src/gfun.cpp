#include "conicgeom/gfun.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include <Eigen/Cholesky>
#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_dawson.h>

#include "conicgeom/normal.hpp"
#include "conicgeom/rng.hpp"
#include "quad.hpp"

namespace conicgeom {

namespace {

constexpr std::uint64_t kStreamCube = 0x67637562;
constexpr std::uint64_t kStreamCross = 0x67637273;
constexpr std::uint64_t kStreamEqui = 0x67657175;

const int g_gsl_handler_off = [] {
    gsl_set_error_handler_off();
    return 0;
}();

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

GValue quad_value(double v, const EvalMethod& m, double err) {
    return {clamp01(v), m, err};
}

GValue exact_value(double v, const EvalMethod& m) { return {v, m, 0.0}; }

// Monte Carlo frequency of a per-sample predicate.
template <typename Pred>
GValue mc_frequency(const EvalMethod& m, std::uint64_t stream, Pred&& pred) {
    auto acc = chunked_reduce<CountAcc>(
        m.samples, [&](std::uint64_t lo, std::uint64_t hi, CountAcc& a) {
            for (std::uint64_t i = lo; i < hi; ++i) {
                SampleRng rng(m.seed, stream, i);
                if (pred(rng)) ++a.hits;
                ++a.total;
            }
        });
    const Estimate e = acc.estimate(m.seed);
    return {e.mean, m, e.stderr_};
}

// Density table of S_n for the default grid parameters, built once per n.
const GridDensity& cached_folded_density(int n) {
    static std::map<int, GridDensity> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, folded_sum_density(n)).first;
    return it->second;
}

}  // namespace

EvalMethod EvalMethod::quadrature(double tol) {
    require(tol > 0.0, "EvalMethod: tol must be positive");
    EvalMethod m;
    m.kind = Kind::Quadrature;
    m.tol = tol;
    return m;
}

EvalMethod EvalMethod::monte_carlo(std::uint64_t samples, std::uint64_t seed) {
    require(samples >= 10000, "EvalMethod: Monte Carlo needs >= 1e4 samples");
    EvalMethod m;
    m.kind = Kind::MonteCarlo;
    m.samples = samples;
    m.seed = seed;
    return m;
}

GValue g_cube(int n, double s2, const EvalMethod& m) {
    require(n >= 0, "g_cube: n must be nonnegative");
    require(s2 > 0.0, "g_cube: sigma^2 must be positive");
    if (n == 0) return exact_value(0.5, m);
    const double sigma = std::sqrt(s2);
    if (m.is_mc()) {
        return mc_frequency(m, kStreamCube, [&](SampleRng& rng) {
            double mx = 0.0;
            for (int j = 0; j < n; ++j) mx = std::max(mx, std::abs(rng.next_normal()));
            return rng.next_normal() >= sigma * mx;
        });
    }
    const double upper = 8.0 + 8.0 * std::max(sigma, 1.0 / sigma);
    auto integrand = [&](double t) {
        return norm_pdf(t) * std::pow(folded_cdf(t / sigma), n);
    };
    const auto q = detail::integrate(integrand, 0.0, upper, m.tol);
    return quad_value(q.value, m, q.error);
}

GValue g_cross(int n, double s2, const EvalMethod& m) {
    require(n >= 0, "g_cross: n must be nonnegative");
    require(s2 > 0.0, "g_cross: sigma^2 must be positive");
    if (n == 0) return exact_value(0.5, m);
    const double sigma = std::sqrt(s2);
    if (m.is_mc()) {
        return mc_frequency(m, kStreamCross, [&](SampleRng& rng) {
            double sum = 0.0;
            for (int j = 0; j < n; ++j) sum += std::abs(rng.next_normal());
            return rng.next_normal() >= sigma * sum;
        });
    }
    if (n == 1) {
        // S_1 is half-normal; integrate the analytic density directly.
        const double upper = 8.0 + 8.0 * std::max(sigma, 1.0 / sigma);
        auto integrand = [&](double s) {
            return (1.0 - norm_cdf(sigma * s)) * 2.0 * norm_pdf(s);
        };
        const auto q = detail::integrate(integrand, 0.0, upper, m.tol);
        return quad_value(q.value, m, q.error);
    }
    const GridDensity& f = cached_folded_density(n);
    const double h = f.step;
    double sum = 0.0;
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        const double s = f.origin + h * static_cast<double>(i);
        double g = (1.0 - norm_cdf(sigma * s)) * f.values[i];
        if (i == 0 || i + 1 == f.values.size()) g *= 0.5;
        sum += g;
    }
    const double mass_defect = std::abs(1.0 - f.total_mass());
    return quad_value(sum * h, m, 0.1 * h * h + mass_defect);
}

GValue g_equicorr(int m, double c, const EvalMethod& meth) {
    require(m >= 0, "g_equicorr: m must be nonnegative");
    if (m == 0) return exact_value(1.0, meth);
    require(c > -1.0 / m, "g_equicorr: c must exceed -1/m");
    if (m == 1) return exact_value(0.5, meth);

    if (meth.is_mc()) {
        // Cholesky factor of I + c J; antithetic pairs z, -z.
        Eigen::MatrixXd cov =
            Eigen::MatrixXd::Constant(m, m, c) + Eigen::MatrixXd::Identity(m, m);
        Eigen::LLT<Eigen::MatrixXd> llt(cov);
        require(llt.info() == Eigen::Success, "g_equicorr: covariance not PD");
        const Eigen::MatrixXd chol = llt.matrixL();
        auto acc = chunked_reduce<MeanAcc>(
            meth.samples, [&](std::uint64_t lo, std::uint64_t hi, MeanAcc& a) {
                Eigen::VectorXd z(m);
                for (std::uint64_t i = lo; i < hi; ++i) {
                    SampleRng rng(meth.seed, kStreamEqui, i);
                    for (int j = 0; j < m; ++j) z[j] = rng.next_normal();
                    const Eigen::VectorXd eta = chol * z;
                    int hits = (eta.array() < 0.0).all() ? 1 : 0;
                    hits += (eta.array() > 0.0).all() ? 1 : 0;
                    a.add(0.5 * hits);
                }
            });
        const Estimate e = acc.estimate(meth.seed);
        return {e.mean, meth, e.stderr_};
    }

    if (c == 0.0) return exact_value(std::pow(2.0, -m), meth);

    if (c > 0.0) {
        const double sc = std::sqrt(c);
        auto integrand = [&](double t) {
            return norm_pdf(t) * std::pow(norm_cdf(sc * t), m);
        };
        const auto q = detail::integrate(integrand, -12.0, 12.0, meth.tol);
        return quad_value(q.value, meth, q.error);
    }

    // c < 0: analytic continuation of the c > 0 reduction. With b = sqrt(-c),
    // Phi(i b t) = 1/2 + (i/2) erfi(b t / sqrt(2)), and odd powers of erfi
    // integrate to zero against phi, leaving
    //   g = 2^-m * sum_p (-1)^p C(m, 2p) * int phi(t) erfi(beta t)^(2p) dt,
    // each term evaluated through the Dawson function so the exponentials
    // combine into a decaying Gaussian factor.
    const double ac = -c;
    const double beta = std::sqrt(0.5 * ac);
    const double inv_sqrt_2pi = 0.3989422804014326779399461;
    const double two_over_sqrt_pi = 1.1283791670955125738961589;
    double total = 1.0;
    double err_total = 0.0;
    for (int p = 1; 2 * p <= m; ++p) {
        const double decay = 0.5 - p * ac;  // > 0 on the admissible domain
        const double upper = std::sqrt(90.0 / (2.0 * decay)) + 2.0;
        const double amp = std::pow(two_over_sqrt_pi, 2 * p) * inv_sqrt_2pi;
        auto integrand = [&](double t) {
            const double d = gsl_sf_dawson(beta * t);
            return amp * std::pow(d, 2 * p) * std::exp(-decay * t * t);
        };
        const auto q = detail::integrate(integrand, 0.0, upper, meth.tol);
        const double coeff = static_cast<double>(binomial(m, 2 * p));
        const double sign = (p % 2 == 0) ? 1.0 : -1.0;
        total += sign * coeff * 2.0 * q.value;
        err_total += coeff * 2.0 * q.error;
    }
    const double scale = std::pow(2.0, -m);
    return quad_value(scale * total, meth, scale * err_total + 1e-15);
}

GValue g_simplex(int n, double r, const EvalMethod& m) {
    require(n >= 0, "g_simplex: n must be nonnegative");
    if (n == 0) return exact_value(1.0, m);
    require(r > -1.0 / n, "g_simplex: r must exceed -1/n");
    if (n == 1) return exact_value(0.5, m);
    return g_equicorr(n, -r / (1.0 + n * r), m);
}

GridDensity folded_sum_density(int n, double step, double truncation) {
    require(n >= 1, "folded_sum_density: n must be positive");
    require(step > 0.0, "folded_sum_density: step must be positive");
    const double min_trunc = n + 6.0 * std::sqrt(static_cast<double>(n));
    if (truncation == 0.0) truncation = n + 8.0 * std::sqrt(static_cast<double>(n)) + 8.0;
    require(truncation >= min_trunc,
            "folded_sum_density: truncation must cover n + 6 sqrt(n)");

    auto grid_len = [&](double trunc) {
        return static_cast<std::size_t>(std::floor(trunc / step)) + 1;
    };
    const std::size_t len_final = grid_len(truncation);
    const double half_normal = 0.7978845608028653558798921;

    const std::size_t len1 =
        (n == 1) ? len_final : std::min(len_final, grid_len(17.0));
    std::vector<double> cur(len1);
    for (std::size_t i = 0; i < len1; ++i) {
        const double x = step * static_cast<double>(i);
        cur[i] = half_normal * std::exp(-0.5 * x * x);
    }

    // Half-normal kernel; contributions beyond x = 12 are below 3e-32.
    const std::size_t len_kernel = std::min(len1, grid_len(12.0));
    const std::vector<double> kernel(cur.begin(), cur.begin() + len_kernel);

    for (int k = 2; k <= n; ++k) {
        const double trunc_k =
            (k == n) ? truncation : k + 8.0 * std::sqrt(static_cast<double>(k)) + 8.0;
        const std::size_t len_k = std::min(len_final, grid_len(trunc_k));
        std::vector<double> next(len_k, 0.0);
        for (std::size_t i = 1; i < len_k; ++i) {
            const std::size_t jhi = std::min(i, len_kernel - 1);
            const std::size_t jlo = i + 1 > cur.size() ? i + 1 - cur.size() : 0;
            double s = 0.0;
            for (std::size_t j = jlo; j <= jhi; ++j) {
                const double w = (j == 0 || j == i) ? 0.5 : 1.0;
                s += w * kernel[j] * cur[i - j];
            }
            next[i] = s * step;
        }
        cur = std::move(next);
    }

    GridDensity out;
    out.origin = 0.0;
    out.step = step;
    cur.resize(len_final, 0.0);
    out.values = std::move(cur);
    return out;
}

}  // namespace conicgeom
