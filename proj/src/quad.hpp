#pragma once

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace conicgeom::detail {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
};

/// Adaptive Gauss-Kronrod (15-point) on [a, b] to tolerance tol.
template <typename F>
QuadResult integrate(F&& f, double a, double b, double tol) {
    double err = 0.0;
    const double tol_eff = std::clamp(tol, 1e-14, 1e-2);
    const double v = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        std::forward<F>(f), a, b, 17, tol_eff, &err);
    return {v, err};
}

}  // namespace conicgeom::detail
