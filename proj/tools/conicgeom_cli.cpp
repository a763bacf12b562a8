// Command-line front end: batch computations over the cone families,
// emitted as CSV or JSON tables. All randomized commands require an
// explicit --seed; exit codes are 0 (success), 1 (verification failure),
// 2 (usage or parameter error).

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "conicgeom/absorption.hpp"
#include "conicgeom/acceptance.hpp"
#include "conicgeom/conic.hpp"
#include "conicgeom/core.hpp"
#include "conicgeom/gfun.hpp"
#include "conicgeom/mc.hpp"
#include "conicgeom/sections.hpp"

namespace cg = conicgeom;

namespace {

// ---------------------------------------------------------------------------
// Table output: CSV (RFC-4180-style, '.' decimal separator) or JSON with
// numbers at 17 significant digits.

struct Cell {
    enum class Kind { Text, Number, Integer, Boolean } kind;
    std::string text;
    double num = 0.0;
    long long integer = 0;
    bool flag = false;

    static Cell str(std::string s) { return {Kind::Text, std::move(s)}; }
    static Cell number(double v) { return {Kind::Number, {}, v}; }
    static Cell integer_of(long long v) { return {Kind::Integer, {}, 0.0, v}; }
    static Cell boolean(bool v) { return {Kind::Boolean, {}, 0.0, 0, v}; }
};

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<Cell>> rows;
};

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_csv(const Table& t, std::ostream& os) {
    for (std::size_t i = 0; i < t.header.size(); ++i)
        os << t.header[i] << (i + 1 < t.header.size() ? "," : "");
    os << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            const Cell& c = row[i];
            switch (c.kind) {
                case Cell::Kind::Text: os << c.text; break;
                case Cell::Kind::Number: os << format_number(c.num); break;
                case Cell::Kind::Integer: os << c.integer; break;
                case Cell::Kind::Boolean: os << (c.flag ? "true" : "false"); break;
            }
            os << (i + 1 < row.size() ? "," : "");
        }
        os << "\n";
    }
}

void write_json(const Table& t, std::ostream& os) {
    os << "[\n";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        os << "  {";
        for (std::size_t i = 0; i < t.rows[r].size(); ++i) {
            const Cell& c = t.rows[r][i];
            os << "\"" << t.header[i] << "\": ";
            switch (c.kind) {
                case Cell::Kind::Text: os << "\"" << c.text << "\""; break;
                case Cell::Kind::Number: os << format_number(c.num); break;
                case Cell::Kind::Integer: os << c.integer; break;
                case Cell::Kind::Boolean: os << (c.flag ? "true" : "false"); break;
            }
            if (i + 1 < t.rows[r].size()) os << ", ";
        }
        os << "}" << (r + 1 < t.rows.size() ? "," : "") << "\n";
    }
    os << "]\n";
}

void emit(const Table& t, const std::string& format, const std::string& out_path) {
    std::ostringstream buf;
    if (format == "json") write_json(t, buf);
    else write_csv(t, buf);
    if (out_path.empty()) {
        std::cout << buf.str();
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
        f << buf.str();
    }
}

bool agree(double formula, double mc, double stderr_, double atol, double band) {
    return std::abs(formula - mc) <= std::max(band * stderr_, atol);
}

// ---------------------------------------------------------------------------

struct CommonOpts {
    std::string method = "quadrature";
    std::uint64_t samples = 1'000'000;
    std::optional<std::uint64_t> seed;
    int threads = 0;
    double tol = 1e-10;
    std::string format = "csv";
    std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_method) {
    if (with_method)
        cmd->add_option("--method", o.method)
            ->check(CLI::IsMember({"quadrature", "mc"}));
    cmd->add_option("--samples", o.samples);
    cmd->add_option("--seed", o.seed);
    cmd->add_option("--threads", o.threads);
    cmd->add_option("--tol", o.tol);
    cmd->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", o.out);
}

cg::EvalMethod make_method(const CommonOpts& o) {
    if (o.method == "mc") {
        if (!o.seed)
            throw std::invalid_argument("--method mc requires an explicit --seed");
        return cg::EvalMethod::monte_carlo(o.samples, *o.seed);
    }
    return cg::EvalMethod::quadrature(o.tol);
}

void apply_threads(const CommonOpts& o) {
    if (o.threads > 0) cg::set_default_threads(o.threads);
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

std::vector<double> parse_double_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    if (out.empty()) throw std::invalid_argument("empty value list");
    return out;
}

// ---------------------------------------------------------------------------

int cmd_angle(const std::string& family, const std::string& ns,
              const std::string& params, const CommonOpts& o) {
    apply_threads(o);
    const cg::EvalMethod m = make_method(o);
    Table t;
    t.header = {"family", "n", "param", "value", "error_bound", "method"};
    for (int n : parse_int_list(ns)) {
        for (double p : parse_double_list(params)) {
            cg::GValue g;
            if (family == "cube") g = cg::g_cube(n, p, m);
            else if (family == "cross") g = cg::g_cross(n, p, m);
            else g = cg::g_simplex(n, p, m);
            t.rows.push_back({Cell::str(family), Cell::integer_of(n),
                              Cell::number(p), Cell::number(g.value),
                              Cell::number(g.error_bound), Cell::str(o.method)});
        }
    }
    emit(t, o.format, o.out);
    return 0;
}

int cmd_iv(const std::string& family, int n, double param, const CommonOpts& o) {
    apply_threads(o);
    const cg::EvalMethod m = make_method(o);
    cg::ConeSpec c = family == "cube"    ? cg::ConeSpec::cube(n, param)
                     : family == "cross" ? cg::ConeSpec::cross(n, param)
                                         : cg::ConeSpec::simplex(n, param);
    const auto v = cg::intrinsic_volumes(c, m);
    Table t;
    t.header = {"family", "n", "param", "k", "value", "error_bound", "sum_check",
                "odd_sum_check"};
    for (std::size_t k = 0; k < v.values.size(); ++k) {
        t.rows.push_back({Cell::str(family), Cell::integer_of(n),
                          Cell::number(param), Cell::integer_of((long long)k),
                          Cell::number(v.values[k]), Cell::number(v.errors[k]),
                          Cell::number(v.sum()), Cell::number(v.odd_sum())});
    }
    emit(t, o.format, o.out);
    return 0;
}

int cmd_absorption(const std::string& family, int n, int d,
                   const std::optional<double>& sigma2,
                   const std::optional<double>& u,
                   const std::optional<double>& lambda, const CommonOpts& o) {
    apply_threads(o);
    if (!o.seed) throw std::invalid_argument("absorption requires --seed");
    const bool cross = family == "cross";
    const auto fam = cross ? cg::AbsorptionFamily::SymmetricGaussian
                           : cg::AbsorptionFamily::GaussianZonotope;
    Table t;
    t.header = {"kind",     "n",        "d",          "arg",
                "formula",  "mc_value", "mc_stderr",  "agree"};
    const double band = 4.0;
    if (sigma2) {
        const double formula =
            cross ? cg::p_cross(n, d, *sigma2) : cg::p_cube(n, d, *sigma2);
        const auto est = cg::mc::estimate_scaled_nonabsorption({fam, n, d}, *sigma2,
                                                               o.samples, *o.seed);
        t.rows.push_back({Cell::str(cross ? "p_cross" : "p_cube"),
                          Cell::integer_of(n), Cell::integer_of(d),
                          Cell::number(*sigma2), Cell::number(formula),
                          Cell::number(est.mean), Cell::number(est.stderr_),
                          Cell::boolean(agree(formula, est.mean, est.stderr_,
                                              1e-6, band))});
    }
    if (u) {
        if (!cross || d != 2)
            throw std::invalid_argument("--u applies to --family cross with --d 2");
        const double formula = cg::f_cross_d2(n, *u);
        const auto est = cg::mc::estimate_absorption({fam, n, d},
                                                     std::sqrt(2.0 * *u),
                                                     o.samples, *o.seed);
        t.rows.push_back({Cell::str("f_cross_d2"), Cell::integer_of(n),
                          Cell::integer_of(d), Cell::number(*u),
                          Cell::number(formula), Cell::number(est.mean),
                          Cell::number(est.stderr_),
                          Cell::boolean(agree(formula, est.mean, est.stderr_,
                                              1e-6, band))});
    }
    if (lambda) {
        const double rhs = cg::laplace_rhs(fam, n, d, *lambda);
        const auto lhs = cg::laplace_lhs_numeric(fam, n, d, *lambda,
                                                 std::max<std::uint64_t>(o.samples / 10, 10000),
                                                 *o.seed);
        t.rows.push_back({Cell::str("laplace"), Cell::integer_of(n),
                          Cell::integer_of(d), Cell::number(*lambda),
                          Cell::number(rhs), Cell::number(lhs.mean),
                          Cell::number(lhs.stderr_),
                          Cell::boolean(agree(rhs, lhs.mean, lhs.stderr_,
                                              0.02 * std::abs(rhs), band))});
    }
    if (t.rows.empty())
        throw std::invalid_argument("absorption: pass --sigma2, --u, or --lambda");
    emit(t, o.format, o.out);
    return 0;
}

int cmd_sections(const std::string& family, int n, int k, int j, bool oracle2d,
                 const CommonOpts& o) {
    apply_threads(o);
    if (!o.seed) throw std::invalid_argument("sections requires --seed");
    cg::PolytopeSpec p = family == "cube"    ? cg::PolytopeSpec::cube(n)
                         : family == "cross" ? cg::PolytopeSpec::crosspolytope(n)
                                             : cg::PolytopeSpec::simplex(n);
    const double formula = cg::expected_faces({p, k, j});
    const std::uint64_t mc_trials = std::max<std::uint64_t>(o.samples / 10, 10000);
    const auto est = cg::mc::estimate_expected_faces(p, k, j, mc_trials, *o.seed);
    Table t;
    t.header = {"family", "n", "k", "j", "expected_formula", "mc_estimate",
                "mc_stderr", "agree"};
    if (oracle2d) t.header.push_back("oracle2d_mean_vertices");
    std::vector<Cell> row = {Cell::str(family),
                             Cell::integer_of(n),
                             Cell::integer_of(k),
                             Cell::integer_of(j),
                             Cell::number(formula),
                             Cell::number(est.mean),
                             Cell::number(est.stderr_),
                             Cell::boolean(agree(formula, est.mean, est.stderr_,
                                                 1e-6, 4.0))};
    if (oracle2d) {
        if (k != 2 || j != 0)
            throw std::invalid_argument("--oracle2d needs k = 2 and j = 0");
        double total = 0.0;
        std::uint64_t used = 0;
        const std::uint64_t sweeps = std::max<std::uint64_t>(o.samples / 100, 1000);
        for (std::uint64_t i = 0; i < sweeps; ++i) {
            cg::SampleRng rng(*o.seed, 0x32646f72, i);
            const auto basis = cg::mc::sample_uniform_subspace(n, 2, rng);
            const auto poly = cg::mc::section_polygon_2d(p, basis);
            if (poly.degenerate) continue;
            total += poly.vertex_count;
            ++used;
        }
        row.push_back(Cell::number(total / static_cast<double>(used)));
    }
    t.rows.push_back(std::move(row));
    emit(t, o.format, o.out);
    return 0;
}

int cmd_verify(const CommonOpts& o) {
    apply_threads(o);
    if (!o.seed) throw std::invalid_argument("verify requires --seed");
    if (o.tol <= 0.0) throw std::invalid_argument("verify: --tol must be positive");
    cg::accept::Config cfg;
    cfg.samples = o.samples;
    cfg.seed = *o.seed;
    cfg.threads = o.threads;
    const auto results = cg::accept::run_all(cfg, &std::cerr);

    std::ostringstream buf;
    buf << "{\n  \"samples\": " << cfg.samples << ",\n  \"seed\": " << cfg.seed
        << ",\n  \"checks\": [\n";
    bool all_pass = true;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        all_pass = all_pass && r.pass;
        buf << "    {\"name\": \"" << r.name << "\", \"pass\": "
            << (r.pass ? "true" : "false") << ", \"seconds\": "
            << format_number(r.seconds) << ", \"detail\": \"" << r.detail
            << "\"}" << (i + 1 < results.size() ? "," : "") << "\n";
    }
    buf << "  ],\n  \"pass\": " << (all_pass ? "true" : "false") << "\n}\n";
    if (o.out.empty()) std::cout << buf.str();
    else std::ofstream(o.out) << buf.str();
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Solid angles, conic intrinsic volumes, absorption "
                 "probabilities and random-section face counts for the "
                 "regular-polytope cone families"};
    app.require_subcommand(1);

    // angle
    auto* angle = app.add_subcommand("angle", "Solid angles g(n, param)");
    std::string a_family, a_ns = "1", a_sigma2, a_r;
    CommonOpts a_opts;
    angle->add_option("--family", a_family, "simplex|cross|cube")->required()
        ->check(CLI::IsMember({"simplex", "cross", "cube"}));
    angle->add_option("--n", a_ns, "comma-separated n values")->required();
    angle->add_option("--sigma2", a_sigma2, "comma-separated sigma^2 values");
    angle->add_option("--r", a_r, "comma-separated r values (simplex)");
    add_common(angle, a_opts, true);

    // iv
    auto* iv = app.add_subcommand("iv", "Conic intrinsic volumes");
    std::string i_family;
    int i_n = 1;
    double i_sigma2 = 1.0, i_r = 0.0;
    bool i_has_s2 = false, i_has_r = false;
    CommonOpts i_opts;
    iv->add_option("--family", i_family)->required()
        ->check(CLI::IsMember({"simplex", "cross", "cube"}));
    iv->add_option("--n", i_n)->required();
    auto* i_s2_opt = iv->add_option("--sigma2", i_sigma2);
    auto* i_r_opt = iv->add_option("--r", i_r);
    add_common(iv, i_opts, true);
    iv->callback([&] {
        i_has_s2 = i_s2_opt->count() > 0;
        i_has_r = i_r_opt->count() > 0;
    });

    // absorption
    auto* ab = app.add_subcommand("absorption", "Absorption probabilities");
    std::string b_family;
    int b_n = 1, b_d = 1;
    std::optional<double> b_sigma2, b_u, b_lambda;
    CommonOpts b_opts;
    ab->add_option("--family", b_family, "cross|cube")->required()
        ->check(CLI::IsMember({"cross", "cube"}));
    ab->add_option("--n", b_n)->required();
    ab->add_option("--d", b_d)->required();
    ab->add_option("--sigma2", b_sigma2);
    ab->add_option("--u", b_u);
    ab->add_option("--lambda", b_lambda);
    add_common(ab, b_opts, false);

    // sections
    auto* sec = app.add_subcommand("sections", "Random-section face counts");
    std::string s_family;
    int s_n = 3, s_k = 2, s_j = 0;
    bool s_oracle = false;
    CommonOpts s_opts;
    sec->add_option("--family", s_family)->required()
        ->check(CLI::IsMember({"simplex", "cross", "cube"}));
    sec->add_option("--n", s_n)->required();
    sec->add_option("--k", s_k)->required();
    sec->add_option("--j", s_j);
    sec->add_flag("--oracle2d", s_oracle, "exact polygon counts when k = 2");
    add_common(sec, s_opts, false);

    // verify
    auto* ver = app.add_subcommand("verify", "Run the verification suite");
    CommonOpts v_opts;
    add_common(ver, v_opts, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (angle->parsed()) {
            const bool simplex = a_family == "simplex";
            const std::string params = simplex ? a_r : a_sigma2;
            if (params.empty())
                throw std::invalid_argument(
                    simplex ? "angle: simplex needs --r" : "angle: needs --sigma2");
            return cmd_angle(a_family, a_ns, params, a_opts);
        }
        if (iv->parsed()) {
            const bool simplex = i_family == "simplex";
            if (simplex && !i_has_r)
                throw std::invalid_argument("iv: simplex needs --r");
            if (!simplex && !i_has_s2)
                throw std::invalid_argument("iv: needs --sigma2");
            return cmd_iv(i_family, i_n, simplex ? i_r : i_sigma2, i_opts);
        }
        if (ab->parsed())
            return cmd_absorption(b_family, b_n, b_d, b_sigma2, b_u, b_lambda,
                                  b_opts);
        if (sec->parsed())
            return cmd_sections(s_family, s_n, s_k, s_j, s_oracle, s_opts);
        if (ver->parsed()) return cmd_verify(v_opts);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
