#include "conicgeom/mc.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace conicgeom::mc {

namespace {

constexpr std::uint64_t kStreamIv = 0x6d632d6976;
constexpr std::uint64_t kStreamGrass = 0x6d632d6772;
constexpr std::uint64_t kStreamFaces = 0x6d632d6661;
constexpr std::uint64_t kStreamSection = 0x6d632d7365;
constexpr std::uint64_t kStreamAbsorb = 0x6d632d6162;
constexpr std::uint64_t kStreamRadius = 0x6d632d7261;
constexpr std::uint64_t kRetrySalt = 0x9e3779b97f4a7c15ull;

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

// ---------------------------------------------------------------------------
// Phase-1 dense simplex with Bland's rule. Solves: does there exist x >= 0
// with A x = b? Small dense problems only.

struct Phase1Result {
    bool feasible = false;
    bool degenerate = false;
    double objective = 0.0;
    Eigen::VectorXd x;
};

Phase1Result lp_phase1(const Eigen::MatrixXd& a0, const Eigen::VectorXd& b0,
                       double tol) {
    const int m = static_cast<int>(a0.rows());
    const int n = static_cast<int>(a0.cols());
    Phase1Result res;
    res.x = Eigen::VectorXd::Zero(n);

    Eigen::MatrixXd t(m, n + m);
    Eigen::VectorXd rhs(m);
    for (int i = 0; i < m; ++i) {
        double scale = std::max(a0.row(i).cwiseAbs().maxCoeff(), std::abs(b0[i]));
        if (scale < 1e-300) scale = 1.0;
        const double sign = b0[i] < 0.0 ? -1.0 : 1.0;
        t.row(i).head(n) = (sign / scale) * a0.row(i);
        rhs[i] = sign * b0[i] / scale;
    }
    t.block(0, n, m, m) = Eigen::MatrixXd::Identity(m, m);

    std::vector<int> basis(m);
    std::vector<char> in_basis(n + m, 0);
    for (int i = 0; i < m; ++i) {
        basis[i] = n + i;
        in_basis[n + i] = 1;
    }

    // Reduced costs for min sum(artificials) with the artificial basis.
    Eigen::VectorXd red(n + m);
    red.setZero();
    for (int j = 0; j < n; ++j) red[j] = -t.col(j).sum();

    constexpr double kEps = 1e-11;
    const int max_iters = 200 * (n + m) + 200;
    bool hit_cap = true;
    for (int iter = 0; iter < max_iters; ++iter) {
        int enter = -1;
        for (int j = 0; j < n + m; ++j) {
            if (!in_basis[j] && red[j] < -kEps) {
                enter = j;
                break;  // Bland: smallest eligible index
            }
        }
        if (enter < 0) {
            hit_cap = false;
            break;
        }
        int leave = -1;
        double best = 0.0;
        for (int i = 0; i < m; ++i) {
            const double piv = t(i, enter);
            if (piv <= kEps) continue;
            const double ratio = rhs[i] / piv;
            if (leave < 0 || ratio < best - 1e-13 ||
                (std::abs(ratio - best) <= 1e-13 && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave < 0) {
            // Phase-1 objective is bounded below; this is a numeric failure.
            res.degenerate = true;
            hit_cap = false;
            break;
        }
        const double piv = t(leave, enter);
        t.row(leave) /= piv;
        rhs[leave] /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == leave) continue;
            const double f = t(i, enter);
            if (f == 0.0) continue;
            t.row(i) -= f * t.row(leave);
            rhs[i] -= f * rhs[leave];
            if (rhs[i] < 0.0) rhs[i] = rhs[i] > -1e-12 ? 0.0 : rhs[i];
        }
        const double fr = red[enter];
        red -= fr * t.row(leave).transpose();
        in_basis[basis[leave]] = 0;
        in_basis[enter] = 1;
        basis[leave] = enter;
    }
    if (hit_cap) res.degenerate = true;

    double obj = 0.0;
    for (int i = 0; i < m; ++i) {
        if (basis[i] >= n) obj += rhs[i];
        else res.x[basis[i]] = rhs[i];
    }
    res.objective = obj;
    res.feasible = obj <= tol;
    if (!res.feasible && obj <= 1000.0 * tol) res.degenerate = true;

    if (res.feasible) {
        // Re-validate the certificate against the original constraints.
        const double scale = std::max(1.0, b0.cwiseAbs().maxCoeff());
        const double viol = (a0 * res.x - b0).cwiseAbs().maxCoeff();
        if (viol > 10.0 * tol * scale || res.x.minCoeff() < -10.0 * tol)
            res.degenerate = true;
    }
    return res;
}

LpResult to_lp_result(const Phase1Result& r, double tol) {
    LpResult out;
    out.feasible = r.feasible;
    out.degenerate = r.degenerate;
    out.certificate = r.x;
    out.tolerance = tol;
    return out;
}

}  // namespace

Eigen::VectorXd sample_gaussian(int dim, SampleRng& rng) {
    require(dim >= 1, "sample_gaussian: dim must be >= 1");
    Eigen::VectorXd x(dim);
    for (int i = 0; i < dim; ++i) x[i] = rng.next_normal();
    return x;
}

SubspaceBasis sample_uniform_subspace(int n, int dim, SampleRng& rng) {
    require(n >= 1 && dim >= 0 && dim <= n, "sample_uniform_subspace: bad dims");
    SubspaceBasis basis;
    basis.n = n;
    basis.dim = dim;
    if (dim == 0) {
        basis.columns = Eigen::MatrixXd(n, 0);
        return basis;
    }
    while (true) {
        Eigen::MatrixXd g(n, dim);
        for (int j = 0; j < dim; ++j)
            for (int i = 0; i < n; ++i) g(i, j) = rng.next_normal();
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
        const Eigen::MatrixXd r = qr.matrixQR().topRows(dim).triangularView<Eigen::Upper>();
        bool ok = true;
        for (int j = 0; j < dim; ++j)
            if (std::abs(r(j, j)) < 1e-12) ok = false;
        if (!ok) continue;  // rank deficiency has probability zero
        basis.columns = qr.householderQ() * Eigen::MatrixXd::Identity(n, dim);
        return basis;
    }
}

LpResult cone_hits_subspace(const Eigen::MatrixXd& generators,
                            const SubspaceBasis& lperp, double tol) {
    require(generators.rows() == lperp.n, "cone_hits_subspace: dim mismatch");
    const int k = static_cast<int>(generators.cols());
    const int l = lperp.dim;
    Eigen::MatrixXd a(l + 1, k);
    if (l > 0) a.topRows(l) = lperp.columns.transpose() * generators;
    a.row(l).setOnes();
    Eigen::VectorXd b = Eigen::VectorXd::Zero(l + 1);
    b[l] = 1.0;
    return to_lp_result(lp_phase1(a, b, tol), tol);
}

LpResult face_hits_subspace(const Eigen::MatrixXd& vertices,
                            const SubspaceBasis& lperp, double tol) {
    return cone_hits_subspace(vertices, lperp, tol);
}

LpResult point_in_hull(const Eigen::MatrixXd& points, const Eigen::VectorXd& x,
                       double tol) {
    require(points.cols() >= 1, "point_in_hull: need at least one point");
    require(points.rows() == x.size(), "point_in_hull: dim mismatch");
    const int d = static_cast<int>(points.rows());
    const int k = static_cast<int>(points.cols());
    Eigen::MatrixXd a(d + 1, k);
    a.topRows(d) = points;
    a.row(d).setOnes();
    Eigen::VectorXd b(d + 1);
    b.head(d) = x;
    b[d] = 1.0;
    return to_lp_result(lp_phase1(a, b, tol), tol);
}

LpResult cone_contains(const Eigen::MatrixXd& generators,
                       const Eigen::VectorXd& x, double tol) {
    require(generators.rows() == x.size(), "cone_contains: dim mismatch");
    return to_lp_result(lp_phase1(generators, x, tol), tol);
}

LpResult point_in_zonotope(const Eigen::MatrixXd& generators,
                           const Eigen::VectorXd& x, double tol) {
    require(generators.rows() == x.size(), "point_in_zonotope: dim mismatch");
    const int d = static_cast<int>(generators.rows());
    const int n = static_cast<int>(generators.cols());
    // lambda in [-1,1]^n via lambda = 2 mu - 1, mu in [0,1]^n with slacks.
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(d + n, 2 * n);
    a.topLeftCorner(d, n) = 2.0 * generators;
    a.bottomLeftCorner(n, n) = Eigen::MatrixXd::Identity(n, n);
    a.bottomRightCorner(n, n) = Eigen::MatrixXd::Identity(n, n);
    Eigen::VectorXd b(d + n);
    b.head(d) = x + generators.rowwise().sum();
    b.tail(n).setOnes();
    const Phase1Result r = lp_phase1(a, b, tol);
    LpResult out = to_lp_result(r, tol);
    if (r.feasible)
        out.certificate = 2.0 * r.x.head(n) - Eigen::VectorXd::Ones(n);
    return out;
}

ConeProjection nnls_project_cone(const Eigen::MatrixXd& generators,
                                 const Eigen::VectorXd& x, double tol) {
    require(generators.rows() == x.size(), "nnls_project_cone: dim mismatch");
    const int d = static_cast<int>(generators.rows());
    const int k = static_cast<int>(generators.cols());
    Eigen::VectorXd lambda = Eigen::VectorXd::Zero(k);
    std::vector<int> passive;
    Eigen::VectorXd residual = x;
    const double w_tol = 1e-10 * (1.0 + x.norm());
    const int max_outer = 50 * k + 50;

    auto solve_passive = [&](const std::vector<int>& p) {
        Eigen::MatrixXd vp(d, p.size());
        for (std::size_t j = 0; j < p.size(); ++j) vp.col(j) = generators.col(p[j]);
        return Eigen::VectorXd(vp.colPivHouseholderQr().solve(x));
    };

    for (int outer = 0; outer < max_outer; ++outer) {
        const Eigen::VectorXd w = generators.transpose() * residual;
        int best = -1;
        double best_w = w_tol;
        std::vector<char> is_passive(k, 0);
        for (int j : passive) is_passive[j] = 1;
        for (int j = 0; j < k; ++j) {
            if (!is_passive[j] && w[j] > best_w) {
                best = j;
                best_w = w[j];
            }
        }
        if (best < 0) break;
        passive.push_back(best);

        for (int inner = 0; inner < max_outer; ++inner) {
            const Eigen::VectorXd z = solve_passive(passive);
            if (!z.allFinite())
                throw std::runtime_error("nnls_project_cone: singular passive set");
            if (z.minCoeff() > 0.0) {
                lambda.setZero();
                for (std::size_t j = 0; j < passive.size(); ++j)
                    lambda[passive[j]] = z[j];
                break;
            }
            double alpha = 1.0;
            for (std::size_t j = 0; j < passive.size(); ++j) {
                if (z[j] <= 0.0) {
                    const double lj = lambda[passive[j]];
                    alpha = std::min(alpha, lj / (lj - z[j]));
                }
            }
            for (std::size_t j = 0; j < passive.size(); ++j) {
                const int idx = passive[j];
                lambda[idx] += alpha * (z[j] - lambda[idx]);
            }
            std::vector<int> kept;
            for (std::size_t j = 0; j < passive.size(); ++j) {
                if (z[j] > 0.0 && lambda[passive[j]] > 1e-14)
                    kept.push_back(passive[j]);
                else
                    lambda[passive[j]] = 0.0;
            }
            if (kept.size() == passive.size())
                throw std::runtime_error("nnls_project_cone: stalled inner loop");
            passive = std::move(kept);
            if (passive.empty()) {
                lambda.setZero();
                break;
            }
        }
        residual = x - generators * lambda;
        if (outer == max_outer - 1)
            throw std::runtime_error("nnls_project_cone: iteration cap reached");
    }

    ConeProjection out;
    out.coefficients = lambda;
    out.projection = generators * lambda;
    std::vector<int> active;
    for (int j = 0; j < k; ++j)
        if (lambda[j] > tol) active.push_back(j);
    if (active.empty()) {
        out.face_dim = 0;
        return out;
    }
    Eigen::MatrixXd va(d, active.size());
    for (std::size_t j = 0; j < active.size(); ++j)
        va.col(j) = generators.col(active[j]);
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(va);
    qr.setThreshold(1e-9);
    out.face_dim = static_cast<int>(qr.rank());
    return out;
}

namespace {

struct HistAcc {
    std::vector<std::uint64_t> counts;
    std::uint64_t used = 0;
    std::uint64_t discarded = 0;

    HistAcc& operator+=(const HistAcc& o) {
        if (counts.size() < o.counts.size()) counts.resize(o.counts.size(), 0);
        for (std::size_t i = 0; i < o.counts.size(); ++i) counts[i] += o.counts[i];
        used += o.used;
        discarded += o.discarded;
        return *this;
    }
};

struct TrialAcc {
    MeanAcc mean;
    std::uint64_t discarded = 0;

    TrialAcc& operator+=(const TrialAcc& o) {
        mean += o.mean;
        discarded += o.discarded;
        return *this;
    }
};

void check_discards(std::uint64_t discarded, std::uint64_t samples) {
    if (discarded * 1000 > samples)
        throw std::runtime_error(
            "estimator: degenerate-trial rate exceeded 0.1%");
}

}  // namespace

IntrinsicVolumeVector estimate_intrinsic_volumes(const ConeSpec& c,
                                                 std::uint64_t samples,
                                                 std::uint64_t seed) {
    const Eigen::MatrixXd gens = cone_generators(c);
    require(gens.cols() >= 1 && gens.cols() <= 4096,
            "estimate_intrinsic_volumes: generator count out of range");
    const int dim = static_cast<int>(gens.rows());

    auto acc = chunked_reduce<HistAcc>(
        samples, [&](std::uint64_t lo, std::uint64_t hi, HistAcc& a) {
            a.counts.assign(dim + 1, 0);
            for (std::uint64_t i = lo; i < hi; ++i) {
                bool done = false;
                for (int retry = 0; retry < 32 && !done; ++retry) {
                    SampleRng rng(seed, kStreamIv + retry * kRetrySalt, i);
                    const Eigen::VectorXd x = sample_gaussian(dim, rng);
                    try {
                        const ConeProjection pr = nnls_project_cone(gens, x);
                        ++a.counts[pr.face_dim];
                        ++a.used;
                        done = true;
                    } catch (const std::runtime_error&) {
                        ++a.discarded;
                    }
                }
            }
        });
    check_discards(acc.discarded, samples);

    IntrinsicVolumeVector out;
    out.values.assign(dim + 1, 0.0);
    out.errors.assign(dim + 1, 0.0);
    const double n = static_cast<double>(acc.used);
    for (int j = 0; j <= dim; ++j) {
        const double p = static_cast<double>(acc.counts[j]) / n;
        out.values[j] = p;
        out.errors[j] = std::sqrt(p * (1.0 - p) / n);
    }
    return out;
}

Estimate estimate_grassmann_angle(const ConeSpec& c, int codim,
                                  std::uint64_t samples, std::uint64_t seed) {
    const Eigen::MatrixXd gens = cone_generators(c);
    const int dim = static_cast<int>(gens.rows());
    require(codim >= 0 && codim <= dim, "estimate_grassmann_angle: bad codim");

    auto acc = chunked_reduce<HistAcc>(
        samples, [&](std::uint64_t lo, std::uint64_t hi, HistAcc& a) {
            a.counts.assign(2, 0);
            for (std::uint64_t i = lo; i < hi; ++i) {
                for (int retry = 0; retry < 32; ++retry) {
                    SampleRng rng(seed, kStreamGrass + retry * kRetrySalt, i);
                    const SubspaceBasis lperp =
                        sample_uniform_subspace(dim, codim, rng);
                    const LpResult r = cone_hits_subspace(gens, lperp);
                    if (r.degenerate) {
                        ++a.discarded;
                        continue;
                    }
                    ++a.counts[r.feasible ? 1 : 0];
                    ++a.used;
                    break;
                }
            }
        });
    check_discards(acc.discarded, samples);

    CountAcc counts;
    counts.hits = acc.counts[1];
    counts.total = acc.used;
    return counts.estimate(seed);
}

SectionPolygon section_polygon_2d(const PolytopeSpec& p,
                                  const SubspaceBasis& basis, double tol) {
    require(basis.dim == 2 && basis.n == p.n, "section_polygon_2d: need a plane");
    const HalfspaceSystem hs = halfspaces(p);
    const int m = static_cast<int>(hs.A.rows());
    const Eigen::VectorXd cs = hs.A * basis.columns.col(0);
    const Eigen::VectorXd ds = hs.A * basis.columns.col(1);

    SectionPolygon out;
    const double active_band = 10.0 * tol;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            const double det = cs[i] * ds[j] - cs[j] * ds[i];
            if (std::abs(det) < 1e-12) continue;
            const double s = (hs.b[i] * ds[j] - hs.b[j] * ds[i]) / det;
            const double t = (cs[i] * hs.b[j] - cs[j] * hs.b[i]) / det;
            bool feasible = true;
            int active = 0;
            for (int r = 0; r < m; ++r) {
                const double v = cs[r] * s + ds[r] * t - hs.b[r];
                if (v > tol) {
                    feasible = false;
                    break;
                }
                if (std::abs(v) <= active_band) ++active;
            }
            if (!feasible) continue;
            if (active > 2) out.degenerate = true;
            bool fresh = true;
            for (const auto& v : out.vertices) {
                if (std::abs(v[0] - s) < 1e-7 && std::abs(v[1] - t) < 1e-7) {
                    fresh = false;
                    break;
                }
            }
            if (fresh) out.vertices.push_back({s, t});
        }
    }
    out.vertex_count = static_cast<int>(out.vertices.size());
    return out;
}

Estimate estimate_expected_faces(const PolytopeSpec& p, int k, int j,
                                 std::uint64_t samples, std::uint64_t seed) {
    const int n = p.n;
    require(n > k && k > j && j >= 0, "estimate_expected_faces: need n > k > j >= 0");
    const int l = n - k;
    const std::vector<FaceDescriptor> fl = faces(p, j + l);
    std::vector<Eigen::MatrixXd> face_verts;
    face_verts.reserve(fl.size());
    for (const auto& f : fl) face_verts.push_back(face_vertices(p, f));

    auto acc = chunked_reduce<TrialAcc>(
        samples, [&](std::uint64_t lo, std::uint64_t hi, TrialAcc& a) {
            for (std::uint64_t i = lo; i < hi; ++i) {
                for (int retry = 0; retry < 32; ++retry) {
                    SampleRng rng(seed, kStreamFaces + retry * kRetrySalt, i);
                    const SubspaceBasis full = sample_uniform_subspace(n, n, rng);
                    SubspaceBasis lperp{n, l, full.columns.rightCols(l)};
                    int count = 0;
                    bool bad = false;
                    for (const auto& w : face_verts) {
                        const LpResult r = face_hits_subspace(w, lperp);
                        if (r.degenerate) {
                            bad = true;
                            break;
                        }
                        if (r.feasible) ++count;
                    }
                    if (bad) {
                        ++a.discarded;
                        continue;
                    }
                    a.mean.add(static_cast<double>(count));
                    break;
                }
            }
        });
    check_discards(acc.discarded, samples);
    return acc.mean.estimate(seed);
}

SectionAgreement run_section_agreement(const PolytopeSpec& p,
                                       std::uint64_t samples,
                                       std::uint64_t seed) {
    const int n = p.n;
    require(n >= 3, "run_section_agreement: need n >= 3");
    const int l = n - 2;
    const std::vector<FaceDescriptor> fl = faces(p, l);
    std::vector<Eigen::MatrixXd> face_verts;
    face_verts.reserve(fl.size());
    for (const auto& f : fl) face_verts.push_back(face_vertices(p, f));

    auto acc = chunked_reduce<HistAcc>(
        samples, [&](std::uint64_t lo, std::uint64_t hi, HistAcc& a) {
            a.counts.assign(2, 0);
            for (std::uint64_t i = lo; i < hi; ++i) {
                SampleRng rng(seed, kStreamSection, i);
                const SubspaceBasis full = sample_uniform_subspace(n, n, rng);
                const SubspaceBasis plane{n, 2, full.columns.leftCols(2)};
                const SubspaceBasis lperp{n, l, full.columns.rightCols(l)};
                const SectionPolygon poly = section_polygon_2d(p, plane);
                int count = 0;
                bool bad = poly.degenerate;
                if (!bad) {
                    for (const auto& w : face_verts) {
                        const LpResult r = face_hits_subspace(w, lperp);
                        if (r.degenerate) {
                            bad = true;
                            break;
                        }
                        if (r.feasible) ++count;
                    }
                }
                if (bad) {
                    ++a.discarded;
                    continue;
                }
                ++a.used;
                if (count == poly.vertex_count) ++a.counts[1];
            }
        });

    SectionAgreement out;
    out.trials = acc.used;
    out.equal = acc.counts[1];
    out.discarded = acc.discarded;
    return out;
}

namespace {

bool absorption_inside(const AbsorptionQuery& q, const Eigen::MatrixXd& cloud,
                       const Eigen::VectorXd& x, bool& degenerate) {
    LpResult r;
    if (q.family == AbsorptionFamily::SymmetricGaussian) {
        const int n = static_cast<int>(cloud.cols());
        Eigen::MatrixXd pts(cloud.rows(), 2 * n);
        pts.leftCols(n) = cloud;
        pts.rightCols(n) = -cloud;
        r = point_in_hull(pts, x);
    } else {
        r = point_in_zonotope(cloud, x);
    }
    degenerate = r.degenerate;
    return r.feasible;
}

}  // namespace

Estimate estimate_absorption(const AbsorptionQuery& q, double x_norm,
                             std::uint64_t samples, std::uint64_t seed) {
    require(q.n >= q.d && q.d >= 1, "estimate_absorption: need n >= d >= 1");
    require(x_norm >= 0.0, "estimate_absorption: x_norm must be >= 0");

    auto acc = chunked_reduce<HistAcc>(
        samples, [&](std::uint64_t lo, std::uint64_t hi, HistAcc& a) {
            a.counts.assign(2, 0);
            Eigen::VectorXd x = Eigen::VectorXd::Zero(q.d);
            x[0] = x_norm;
            for (std::uint64_t i = lo; i < hi; ++i) {
                for (int retry = 0; retry < 32; ++retry) {
                    SampleRng rng(seed, kStreamAbsorb + retry * kRetrySalt, i);
                    Eigen::MatrixXd cloud(q.d, q.n);
                    for (int c = 0; c < q.n; ++c)
                        cloud.col(c) = sample_gaussian(q.d, rng);
                    bool degen = false;
                    const bool inside = absorption_inside(q, cloud, x, degen);
                    if (degen) {
                        ++a.discarded;
                        continue;
                    }
                    ++a.used;
                    if (!inside) ++a.counts[1];
                    break;
                }
            }
        });
    check_discards(acc.discarded, samples);

    CountAcc counts;
    counts.hits = acc.counts[1];
    counts.total = acc.used;
    return counts.estimate(seed);
}

Estimate estimate_scaled_nonabsorption(const AbsorptionQuery& q, double sigma2,
                                       std::uint64_t samples,
                                       std::uint64_t seed) {
    require(q.n >= q.d && q.d >= 1, "estimate_scaled_nonabsorption: n >= d >= 1");
    require(sigma2 > 0.0, "estimate_scaled_nonabsorption: sigma^2 > 0");
    const double sigma = std::sqrt(sigma2);

    auto acc = chunked_reduce<HistAcc>(
        samples, [&](std::uint64_t lo, std::uint64_t hi, HistAcc& a) {
            a.counts.assign(2, 0);
            for (std::uint64_t i = lo; i < hi; ++i) {
                for (int retry = 0; retry < 32; ++retry) {
                    SampleRng rng(seed, kStreamAbsorb + 1 + retry * kRetrySalt, i);
                    Eigen::MatrixXd cloud(q.d, q.n);
                    for (int c = 0; c < q.n; ++c)
                        cloud.col(c) = sample_gaussian(q.d, rng);
                    const Eigen::VectorXd x = sigma * sample_gaussian(q.d, rng);
                    bool degen = false;
                    const bool inside = absorption_inside(q, cloud, x, degen);
                    if (degen) {
                        ++a.discarded;
                        continue;
                    }
                    ++a.used;
                    if (!inside) ++a.counts[1];
                    break;
                }
            }
        });
    check_discards(acc.discarded, samples);

    CountAcc counts;
    counts.hits = acc.counts[1];
    counts.total = acc.used;
    return counts.estimate(seed);
}

std::vector<double> sample_inradius_profile(const AbsorptionQuery& q,
                                            std::uint64_t samples,
                                            std::uint64_t seed) {
    require(q.n >= q.d && q.d >= 1, "sample_inradius_profile: need n >= d >= 1");
    std::vector<double> radii(samples, 0.0);

    struct Acc {
        Acc& operator+=(const Acc&) { return *this; }
    };
    chunked_reduce<Acc>(
        samples, [&](std::uint64_t lo, std::uint64_t hi, Acc&) {
            Eigen::VectorXd x = Eigen::VectorXd::Zero(q.d);
            for (std::uint64_t i = lo; i < hi; ++i) {
                SampleRng rng(seed, kStreamRadius, i);
                Eigen::MatrixXd cloud(q.d, q.n);
                for (int c = 0; c < q.n; ++c)
                    cloud.col(c) = sample_gaussian(q.d, rng);
                double hi_t = q.family == AbsorptionFamily::SymmetricGaussian
                                  ? cloud.colwise().norm().maxCoeff()
                                  : cloud.colwise().norm().sum();
                hi_t += 1.0;
                double lo_t = 0.0;
                // Root finding crosses the LP tolerance band by design, so
                // only the feasible verdict matters here; the radius feeds a
                // frequency on a much coarser grid.
                for (int it = 0; it < 46; ++it) {
                    const double mid = 0.5 * (lo_t + hi_t);
                    x[0] = mid;
                    bool degen = false;
                    if (absorption_inside(q, cloud, x, degen)) lo_t = mid;
                    else hi_t = mid;
                }
                radii[i] = 0.5 * (lo_t + hi_t);
            }
        });
    return radii;
}

}  // namespace conicgeom::mc
