#pragma once

#include <cmath>

namespace conicgeom {

inline double norm_pdf(double x) {
    return 0.3989422804014326779399461 * std::exp(-0.5 * x * x);
}

inline double norm_cdf(double x) {
    return 0.5 * std::erfc(-x * 0.7071067811865475244008444);
}

/// P(|xi| <= x) for standard normal xi, i.e. 2*Phi(x) - 1 (0 for x < 0).
inline double folded_cdf(double x) {
    return x <= 0.0 ? 0.0 : std::erf(x * 0.7071067811865475244008444);
}

}  // namespace conicgeom
