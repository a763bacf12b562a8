#include "conicgeom/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <ostream>

#include "conicgeom/absorption.hpp"
#include "conicgeom/conic.hpp"
#include "conicgeom/core.hpp"
#include "conicgeom/gfun.hpp"
#include "conicgeom/mc.hpp"
#include "conicgeom/sections.hpp"

namespace conicgeom::accept {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof(buf), f, args...);
    return buf;
}

/// Tracks the worst deviation-to-tolerance ratio across a sweep.
struct Worst {
    double ratio = 0.0;
    std::string where;

    void update(double dev, double tol, const std::string& label) {
        const double r = dev / tol;
        if (r > ratio) {
            ratio = r;
            where = label;
        }
    }
    bool pass() const { return ratio <= 1.0; }
    std::string detail() const {
        return fmt("worst %.3f x tolerance at %s", ratio, where.c_str());
    }
};

std::vector<ConeSpec> grid_cones(int n) {
    std::vector<ConeSpec> out;
    for (double s2 : {0.25, 1.0, 4.0}) {
        out.push_back(ConeSpec::cube(n, s2));
        out.push_back(ConeSpec::cross(n, s2));
    }
    for (double r : {-1.0 / (n + 1) + 0.05, 0.0, 1.0})
        out.push_back(ConeSpec::simplex(n, r));
    return out;
}

const char* family_name(ConeFamily f) {
    switch (f) {
        case ConeFamily::Simplex: return "simplex";
        case ConeFamily::Cross: return "cross";
        case ConeFamily::Cube: return "cube";
    }
    return "?";
}

// --- criterion 1: normalization + parity --------------------------------

CheckResult check_normalization(const Config&) {
    Worst w;
    for (int n = 1; n <= 6; ++n) {
        for (const ConeSpec& c : grid_cones(n)) {
            const auto v = intrinsic_volumes(c);
            const auto label = fmt("%s n=%d p=%.3g", family_name(c.family), n, c.param);
            w.update(std::abs(v.sum() - 1.0), 1e-6, label);
            w.update(std::abs(v.odd_sum() - 0.5), 1e-6, label);
        }
    }
    return {"normalization-parity", w.pass(), w.detail(), 0.0};
}

// --- criterion 2: polarity reversal --------------------------------------

CheckResult check_polarity(const Config&) {
    Worst w;
    for (int n = 1; n <= 6; ++n) {
        for (const ConeSpec& c : grid_cones(n)) {
            const int m = c.ambient_dim();
            const auto v = intrinsic_volumes(c);
            const auto vp = intrinsic_volumes(polar(c));
            for (int j = 0; j <= m; ++j) {
                w.update(std::abs(vp.values[j] - v.values[m - j]), 1e-6,
                         fmt("%s n=%d p=%.3g j=%d", family_name(c.family), n,
                             c.param, j));
            }
        }
    }
    return {"polarity", w.pass(), w.detail(), 0.0};
}

// --- criterion 3: NNLS projection oracle ---------------------------------

CheckResult check_iv_oracle(const Config& cfg) {
    Worst w;
    std::uint64_t salt = 0;
    for (int n = 1; n <= 3; ++n) {
        for (const ConeSpec& c : {ConeSpec::cube(n, 1.0), ConeSpec::cross(n, 1.0),
                                  ConeSpec::simplex(n, 1.0)}) {
            const auto est =
                mc::estimate_intrinsic_volumes(c, cfg.samples, cfg.seed + salt++);
            const auto th = intrinsic_volumes(c);
            for (int k = 0; k <= c.ambient_dim(); ++k) {
                const double band =
                    cfg.band() * std::max(est.errors[k], 1e-12) + 1e-6;
                w.update(std::abs(est.values[k] - th.values[k]), band,
                         fmt("%s n=%d k=%d", family_name(c.family), n, k));
            }
        }
    }
    // Exact values for the simplex cone at r = 0 in dimension 4.
    const auto v4 = intrinsic_volumes(ConeSpec::simplex(4, 0.0));
    for (int k = 0; k <= 4; ++k) {
        const double want = static_cast<double>(binomial(4, k)) / 16.0;
        w.update(std::abs(v4.values[k] - want), 1e-8, fmt("simplex4 exact k=%d", k));
    }
    return {"iv-oracle", w.pass(), w.detail(), 0.0};
}

// --- criterion 4: closed planar values ------------------------------------

CheckResult check_planar_forms(const Config&) {
    Worst w;
    for (double s2 : {0.25, 1.0, 4.0}) {
        const double want = std::atan(1.0 / std::sqrt(s2)) / kPi;
        w.update(std::abs(g_cube(1, s2).value - want), 1e-10, fmt("g_cube(1,%.2f)", s2));
        w.update(std::abs(g_cross(1, s2).value - want), 1e-10, fmt("g_cross(1,%.2f)", s2));
    }
    for (int n = 0; n <= 6; ++n) {
        const double want = 1.0 / (2.0 * (n + 1));
        w.update(std::abs(g_cube(n, 1.0).value - want), 1e-8, fmt("g_cube(%d,1)", n));
    }
    return {"planar-closed-forms", w.pass(), w.detail(), 0.0};
}

// --- criterion 5: absorption probabilities vs simulation ------------------

CheckResult check_absorption(const Config& cfg) {
    Worst w;
    w.update(std::abs(p_cross(3, 1, 1.0) - 0.25), 1e-8, "p_cross(3,1,1)");
    w.update(std::abs(p_cube(1, 1, 1.0) - 0.5), 1e-8, "p_cube(1,1,1)");

    std::uint64_t salt = 100;
    {
        const auto mc31 = mc::estimate_scaled_nonabsorption(
            {AbsorptionFamily::SymmetricGaussian, 3, 1}, 1.0, cfg.samples,
            cfg.seed + salt++);
        w.update(std::abs(mc31.mean - 0.25), cfg.band() * mc31.stderr_,
                 "mc p_cross(3,1,1)");
        const auto mc11 = mc::estimate_scaled_nonabsorption(
            {AbsorptionFamily::GaussianZonotope, 1, 1}, 1.0, cfg.samples,
            cfg.seed + salt++);
        w.update(std::abs(mc11.mean - 0.5), cfg.band() * mc11.stderr_,
                 "mc p_cube(1,1,1)");
    }

    const std::pair<int, int> grid[] = {{2, 2}, {3, 2}, {3, 3}, {4, 2}, {4, 3}};
    for (const auto& [n, d] : grid) {
        for (double s2 : {0.25, 1.0, 4.0}) {
            const auto mcx = mc::estimate_scaled_nonabsorption(
                {AbsorptionFamily::SymmetricGaussian, n, d}, s2, cfg.samples,
                cfg.seed + salt++);
            w.update(std::abs(mcx.mean - p_cross(n, d, s2)),
                     cfg.band() * std::max(mcx.stderr_, 1e-12),
                     fmt("p_cross(%d,%d,%.2f)", n, d, s2));
            const auto mcz = mc::estimate_scaled_nonabsorption(
                {AbsorptionFamily::GaussianZonotope, n, d}, s2, cfg.samples,
                cfg.seed + salt++);
            w.update(std::abs(mcz.mean - p_cube(n, d, s2)),
                     cfg.band() * std::max(mcz.stderr_, 1e-12),
                     fmt("p_cube(%d,%d,%.2f)", n, d, s2));
        }
    }
    return {"absorption", w.pass(), w.detail(), 0.0};
}

// --- criterion 6: planar closed form + Laplace consistency ----------------

CheckResult check_d2_form(const Config& cfg) {
    Worst w;
    std::uint64_t salt = 200;
    for (double u : {0.25, 1.0, 4.0}) {
        const auto est = mc::estimate_absorption(
            {AbsorptionFamily::SymmetricGaussian, 3, 2}, std::sqrt(2.0 * u),
            cfg.samples, cfg.seed + salt++);
        w.update(std::abs(est.mean - f_cross_d2(3, u)),
                 cfg.band() * std::max(est.stderr_, 1e-12),
                 fmt("f_cross_d2(3,%.2f)", u));
    }
    for (AbsorptionFamily fam : {AbsorptionFamily::SymmetricGaussian,
                                 AbsorptionFamily::GaussianZonotope}) {
        for (double lambda : {0.5, 1.0, 2.0}) {
            const auto lhs = laplace_lhs_numeric(fam, 3, 2, lambda, cfg.mid(),
                                                 cfg.seed + salt++);
            const double rhs = laplace_rhs(fam, 3, 2, lambda);
            const double tol =
                std::max(cfg.band() * lhs.stderr_, 0.02 * std::abs(rhs));
            w.update(std::abs(lhs.mean - rhs), tol,
                     fmt("laplace fam=%d lambda=%.1f", static_cast<int>(fam),
                         lambda));
        }
    }
    return {"d2-closed-form", w.pass(), w.detail(), 0.0};
}

// --- criterion 7: section expectations ------------------------------------

CheckResult check_sections(const Config& cfg) {
    Worst w;
    w.update(std::abs(expected_faces({PolytopeSpec::crosspolytope(3), 2, 0}) - 6.0),
             1e-12, "E cross(0,2,3)");

    std::uint64_t octa_bad = 0, octa_total = 0, octa_discard = 0;
    const std::uint64_t sweeps = cfg.small() * 10;  // 1e4 at full budget
    for (std::uint64_t i = 0; i < sweeps; ++i) {
        SampleRng rng(cfg.seed + 300, 0x6f637461, i);
        const auto basis = mc::sample_uniform_subspace(3, 2, rng);
        const auto poly =
            mc::section_polygon_2d(PolytopeSpec::crosspolytope(3), basis);
        if (poly.degenerate) {
            ++octa_discard;
            continue;
        }
        ++octa_total;
        if (poly.vertex_count != 6) ++octa_bad;
    }
    w.update(static_cast<double>(octa_bad), 0.5, "octahedron hexagon count");
    w.update(static_cast<double>(octa_discard),
             std::max(1.0, 0.001 * static_cast<double>(sweeps)),
             "octahedron degenerate rate");

    const double cube_formula = expected_faces({PolytopeSpec::cube(3), 2, 0});
    const double cube_closed = 24.0 * std::atan(1.0 / std::sqrt(2.0)) / kPi;
    w.update(std::abs(cube_formula - cube_closed), 1e-6, "E cube(0,2,3) closed form");
    const double simp_formula = expected_faces({PolytopeSpec::simplex(3), 2, 0});
    const double simp_closed = 12.0 * std::acos(-1.0 / 3.0) / (2.0 * kPi);
    w.update(std::abs(simp_formula - simp_closed), 1e-6, "E simplex(0,2,3) closed form");

    const auto mc_cube = mc::estimate_expected_faces(PolytopeSpec::cube(3), 2, 0,
                                                     cfg.mid(), cfg.seed + 301);
    w.update(std::abs(mc_cube.mean - cube_formula), cfg.band() * mc_cube.stderr_,
             "E cube(0,2,3) mc");
    const auto mc_simp = mc::estimate_expected_faces(PolytopeSpec::simplex(3), 2, 0,
                                                     cfg.mid(), cfg.seed + 302);
    w.update(std::abs(mc_simp.mean - simp_formula), cfg.band() * mc_simp.stderr_,
             "E simplex(0,2,3) mc");
    return {"sections", w.pass(), w.detail(), 0.0};
}

// --- criterion 8: per-trial section equivalence ---------------------------

CheckResult check_prop41(const Config& cfg) {
    Worst w;
    const std::uint64_t trials = cfg.small() * 10;  // 1e4 at full budget
    std::uint64_t salt = 400;
    for (int n : {3, 4, 5}) {
        for (const PolytopeSpec& p :
             {PolytopeSpec::cube(n), PolytopeSpec::crosspolytope(n),
              PolytopeSpec::simplex(n)}) {
            const auto ag = mc::run_section_agreement(p, trials, cfg.seed + salt++);
            const double eq_rate = static_cast<double>(ag.equal) /
                                   static_cast<double>(std::max<std::uint64_t>(ag.trials, 1));
            const auto label = fmt("fam=%d n=%d", static_cast<int>(p.family), n);
            w.update(1.0 - eq_rate, 0.001, label + " equality");
            w.update(static_cast<double>(ag.discarded),
                     std::max(1.0, 0.001 * static_cast<double>(trials)),
                     label + " discards");
        }
    }
    return {"prop41-equivalence", w.pass(), w.detail(), 0.0};
}

// --- criterion 9: asymptotic trends ----------------------------------------

CheckResult check_asymptotics(const Config&) {
    Worst w;
    double prev_gap = 1e9;
    for (int n : {8, 10, 12, 14}) {
        const double exact = expected_faces({PolytopeSpec::cube(n), n - 1, 0});
        const double ratio = exact / asymp_cube_lowdim(0, 1, n);
        if (n == 14)
            w.update(std::abs(ratio - 1.0), 0.3, "lowdim ratio at n=14");
        const double gap = std::abs(ratio - 1.0);
        w.update(gap <= prev_gap + 1e-12 ? 0.0 : 1.0, 0.5,
                 fmt("lowdim monotone trend n=%d", n));
        prev_gap = gap;
    }
    {
        const double exact = expected_faces({PolytopeSpec::cube(10), 9, 8});
        const double ratio = exact / asymp_cube_fixed_codim(2, 1, 10);
        w.update(std::abs(ratio - 1.0), 0.3, "fixed-codim ratio at n=10");
    }
    return {"asymptotics", w.pass(), w.detail(), 0.0};
}

// --- criterion 10: crosspolytope angles ------------------------------------

CheckResult check_crosspoly_angles(const Config&) {
    Worst w;
    w.update(std::abs(crosspoly_internal_angle(2, 0).value - 0.25), 1e-8,
             "internal square vertex");
    w.update(std::abs(crosspoly_external_angle(2, 0).value - 0.25), 1e-8,
             "external square vertex");
    w.update(std::abs(crosspoly_internal_angle(3, 1).value -
                      std::atan(std::sqrt(2.0)) / kPi),
             1e-8, "internal octahedron edge");
    return {"crosspoly-angles", w.pass(), w.detail(), 0.0};
}

}  // namespace

std::vector<CheckResult> run_all(const Config& cfg, std::ostream* progress) {
    if (cfg.threads > 0) set_default_threads(cfg.threads);
    using Check = std::function<CheckResult(const Config&)>;
    const std::pair<const char*, Check> checks[] = {
        {"normalization-parity", check_normalization},
        {"polarity", check_polarity},
        {"iv-oracle", check_iv_oracle},
        {"planar-closed-forms", check_planar_forms},
        {"absorption", check_absorption},
        {"d2-closed-form", check_d2_form},
        {"sections", check_sections},
        {"prop41-equivalence", check_prop41},
        {"asymptotics", check_asymptotics},
        {"crosspoly-angles", check_crosspoly_angles},
    };

    std::vector<CheckResult> results;
    for (const auto& [name, fn] : checks) {
        const auto t0 = std::chrono::steady_clock::now();
        CheckResult r;
        try {
            r = fn(cfg);
        } catch (const std::exception& e) {
            r = {name, false, std::string("exception: ") + e.what(), 0.0};
        }
        r.seconds = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
        if (progress) {
            (*progress) << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  ("
                        << fmt("%.1fs", r.seconds) << ")  " << r.detail << "\n";
            progress->flush();
        }
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace conicgeom::accept
