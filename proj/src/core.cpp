#include "conicgeom/core.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>

namespace conicgeom {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

ConeSpec ConeSpec::simplex(int n, double r) {
    require(n >= 0, "ConeSpec: n must be nonnegative");
    if (n >= 1) require(r > -1.0 / n, "ConeSpec: simplex parameter must exceed -1/n");
    return {ConeFamily::Simplex, n, r};
}

ConeSpec ConeSpec::cross(int n, double sigma2) {
    require(n >= 0, "ConeSpec: n must be nonnegative");
    require(sigma2 > 0.0, "ConeSpec: sigma^2 must be positive");
    return {ConeFamily::Cross, n, sigma2};
}

ConeSpec ConeSpec::cube(int n, double sigma2) {
    require(n >= 0, "ConeSpec: n must be nonnegative");
    require(sigma2 > 0.0, "ConeSpec: sigma^2 must be positive");
    return {ConeFamily::Cube, n, sigma2};
}

int ConeSpec::ambient_dim() const {
    return family == ConeFamily::Simplex ? n : n + 1;
}

PolytopeSpec PolytopeSpec::cube(int n) {
    require(n >= 1, "PolytopeSpec: n must be >= 1");
    return {PolytopeFamily::Cube, n};
}

PolytopeSpec PolytopeSpec::crosspolytope(int n) {
    require(n >= 1, "PolytopeSpec: n must be >= 1");
    return {PolytopeFamily::Crosspolytope, n};
}

PolytopeSpec PolytopeSpec::simplex(int n) {
    require(n >= 1, "PolytopeSpec: n must be >= 1");
    return {PolytopeFamily::Simplex, n};
}

double IntrinsicVolumeVector::sum() const {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
}

double IntrinsicVolumeVector::odd_sum() const {
    double s = 0.0;
    for (std::size_t k = 1; k < values.size(); k += 2) s += values[k];
    return s;
}

double IntrinsicVolumeVector::even_sum() const {
    double s = 0.0;
    for (std::size_t k = 0; k < values.size(); k += 2) s += values[k];
    return s;
}

double IntrinsicVolumeVector::at(int k) const {
    if (k < 0 || k >= static_cast<int>(values.size())) return 0.0;
    return values[static_cast<std::size_t>(k)];
}

double GridDensity::total_mass() const {
    if (values.size() < 2) return 0.0;
    double s = 0.5 * (values.front() + values.back());
    for (std::size_t i = 1; i + 1 < values.size(); ++i) s += values[i];
    return s * step;
}

double GridDensity::operator()(double x) const {
    const double u = (x - origin) / step;
    if (u < 0.0 || values.empty()) return 0.0;
    const auto i = static_cast<std::size_t>(u);
    if (i + 1 >= values.size()) return 0.0;
    const double frac = u - static_cast<double>(i);
    return values[i] * (1.0 - frac) + values[i + 1] * frac;
}

std::uint64_t binomial(int n, int k) {
    require(n >= 0, "binomial: n must be nonnegative");
    require(n <= 64, "binomial: n must be <= 64");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    }
    return static_cast<std::uint64_t>(r);
}

std::uint64_t face_count(const PolytopeSpec& p, int k) {
    const int n = p.n;
    switch (p.family) {
        case PolytopeFamily::Cube:
            if (k < 0 || k > n - 1) return 0;
            return (std::uint64_t{1} << (n - k)) * binomial(n, k);
        case PolytopeFamily::Crosspolytope:
            if (k < 0 || k > n - 1) return 0;
            return (std::uint64_t{1} << (k + 1)) * binomial(n, k + 1);
        case PolytopeFamily::Simplex:
            if (k < 0 || k > n) return 0;
            return binomial(n + 1, k + 1);
    }
    return 0;
}

namespace {

// All (size)-subsets of {0,..,n-1} in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int size) {
    std::vector<std::vector<int>> out;
    if (size < 0 || size > n) return out;
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
        out.push_back(idx);
        int i = size - 1;
        while (i >= 0 && idx[i] == n - size + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

std::vector<std::vector<int>> sign_patterns(int m) {
    std::vector<std::vector<int>> out;
    out.reserve(std::size_t{1} << m);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<int> s(m);
        for (int i = 0; i < m; ++i) s[i] = (mask >> i) & 1 ? 1 : -1;
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace

std::vector<FaceDescriptor> faces(const PolytopeSpec& p, int k) {
    std::vector<FaceDescriptor> out;
    const int n = p.n;
    if (face_count(p, k) == 0) return out;
    switch (p.family) {
        case PolytopeFamily::Cube:
            for (const auto& fixed : subsets(n, n - k))
                for (const auto& sg : sign_patterns(n - k))
                    out.push_back({k, fixed, sg});
            break;
        case PolytopeFamily::Crosspolytope:
            for (const auto& axes : subsets(n, k + 1))
                for (const auto& sg : sign_patterns(k + 1))
                    out.push_back({k, axes, sg});
            break;
        case PolytopeFamily::Simplex:
            for (const auto& vs : subsets(n + 1, k + 1)) out.push_back({k, vs, {}});
            break;
    }
    return out;
}

Eigen::MatrixXd simplex_span_basis(int n) {
    Eigen::VectorXd ones = Eigen::VectorXd::Ones(n + 1);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(ones);
    Eigen::MatrixXd q = qr.householderQ();
    return q.rightCols(n);
}

Eigen::MatrixXd vertices(const PolytopeSpec& p) {
    const int n = p.n;
    switch (p.family) {
        case PolytopeFamily::Cube: {
            require(n <= 20, "vertices: cube limited to n <= 20");
            Eigen::MatrixXd v(n, std::int64_t{1} << n);
            for (std::int64_t mask = 0; mask < (std::int64_t{1} << n); ++mask)
                for (int i = 0; i < n; ++i) v(i, mask) = (mask >> i) & 1 ? 1.0 : -1.0;
            return v;
        }
        case PolytopeFamily::Crosspolytope: {
            Eigen::MatrixXd v = Eigen::MatrixXd::Zero(n, 2 * n);
            for (int i = 0; i < n; ++i) {
                v(i, 2 * i) = 1.0;
                v(i, 2 * i + 1) = -1.0;
            }
            return v;
        }
        case PolytopeFamily::Simplex: {
            const Eigen::MatrixXd u = simplex_span_basis(n);
            Eigen::MatrixXd v(n, n + 1);
            const Eigen::VectorXd centre =
                Eigen::VectorXd::Constant(n + 1, 1.0 / (n + 1));
            for (int i = 0; i <= n; ++i) {
                Eigen::VectorXd e = -centre;
                e[i] += 1.0;
                v.col(i) = u.transpose() * e;
            }
            return v;
        }
    }
    return {};
}

Eigen::MatrixXd face_vertices(const PolytopeSpec& p, const FaceDescriptor& f) {
    const int n = p.n;
    const int k = f.dim;
    switch (p.family) {
        case PolytopeFamily::Cube: {
            std::vector<int> free_coords;
            std::vector<bool> is_fixed(n, false);
            for (int i : f.indices) is_fixed[i] = true;
            for (int i = 0; i < n; ++i)
                if (!is_fixed[i]) free_coords.push_back(i);
            Eigen::MatrixXd v(n, std::int64_t{1} << k);
            for (std::int64_t mask = 0; mask < (std::int64_t{1} << k); ++mask) {
                Eigen::VectorXd x(n);
                for (std::size_t j = 0; j < f.indices.size(); ++j)
                    x[f.indices[j]] = f.signs[j];
                for (int j = 0; j < k; ++j)
                    x[free_coords[j]] = (mask >> j) & 1 ? 1.0 : -1.0;
                v.col(mask) = x;
            }
            return v;
        }
        case PolytopeFamily::Crosspolytope: {
            Eigen::MatrixXd v = Eigen::MatrixXd::Zero(n, k + 1);
            for (int j = 0; j <= k; ++j) v(f.indices[j], j) = f.signs[j];
            return v;
        }
        case PolytopeFamily::Simplex: {
            const Eigen::MatrixXd all = vertices(p);
            Eigen::MatrixXd v(n, k + 1);
            for (int j = 0; j <= k; ++j) v.col(j) = all.col(f.indices[j]);
            return v;
        }
    }
    return {};
}

HalfspaceSystem halfspaces(const PolytopeSpec& p) {
    const int n = p.n;
    switch (p.family) {
        case PolytopeFamily::Cube: {
            Eigen::MatrixXd a = Eigen::MatrixXd::Zero(2 * n, n);
            for (int i = 0; i < n; ++i) {
                a(2 * i, i) = 1.0;
                a(2 * i + 1, i) = -1.0;
            }
            return {a, Eigen::VectorXd::Ones(2 * n)};
        }
        case PolytopeFamily::Crosspolytope: {
            require(n <= 16, "halfspaces: crosspolytope limited to n <= 16");
            const auto rows = std::int64_t{1} << n;
            Eigen::MatrixXd a(rows, n);
            for (std::int64_t mask = 0; mask < rows; ++mask)
                for (int i = 0; i < n; ++i) a(mask, i) = (mask >> i) & 1 ? 1.0 : -1.0;
            return {a, Eigen::VectorXd::Ones(rows)};
        }
        case PolytopeFamily::Simplex: {
            // Interior of the centred standard simplex in span coordinates:
            // x_i >= 0 becomes -(e_i^T U) z <= 1/(n+1).
            const Eigen::MatrixXd u = simplex_span_basis(n);
            Eigen::MatrixXd a(n + 1, n);
            for (int i = 0; i <= n; ++i) a.row(i) = -u.row(i);
            return {a, Eigen::VectorXd::Constant(n + 1, 1.0 / (n + 1))};
        }
    }
    return {};
}

Eigen::MatrixXd cone_generators(const ConeSpec& c) {
    const int n = c.n;
    switch (c.family) {
        case ConeFamily::Simplex: {
            if (n == 0) return Eigen::MatrixXd(0, 0);
            // u_i = e_i + a * ones with 2a + n a^2 = r, giving Gram r + delta.
            const double a = (-1.0 + std::sqrt(1.0 + n * c.param)) / n;
            Eigen::MatrixXd v =
                Eigen::MatrixXd::Constant(n, n, a) + Eigen::MatrixXd::Identity(n, n);
            return v;
        }
        case ConeFamily::Cross: {
            const double sigma = std::sqrt(c.param);
            Eigen::MatrixXd v = Eigen::MatrixXd::Zero(n + 1, 2 * n);
            for (int i = 0; i < n; ++i) {
                v(i, 2 * i) = 1.0;
                v(n, 2 * i) = sigma;
                v(i, 2 * i + 1) = -1.0;
                v(n, 2 * i + 1) = sigma;
            }
            return v;
        }
        case ConeFamily::Cube: {
            require(n <= 20, "cone_generators: cube cone limited to n <= 20");
            const double sigma = std::sqrt(c.param);
            const auto cols = std::int64_t{1} << n;
            Eigen::MatrixXd v(n + 1, cols);
            for (std::int64_t mask = 0; mask < cols; ++mask) {
                for (int i = 0; i < n; ++i) v(i, mask) = (mask >> i) & 1 ? 1.0 : -1.0;
                v(n, mask) = sigma;
            }
            return v;
        }
    }
    return {};
}

namespace {
std::atomic<int> g_threads{0};
}

int default_threads() {
    int t = g_threads.load();
    if (t > 0) return t;
    if (const char* env = std::getenv("CONIC_GEOM_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

void set_default_threads(int t) { g_threads.store(t); }

}  // namespace conicgeom
