// ln Gamma for positive real arguments.
//
// Strategy: lift the argument into z >= 10 with the recurrence
// Gamma(z+n) = Gamma(z) * z(z+1)...(z+n-1), then apply the Stirling series
// with nine Bernoulli terms.  The skipped factors are accumulated as an
// exact double-double product and removed with a single log, so the shift
// costs one rounding instead of n of them.  Only positive arguments occur
// in this library (all gamma arguments are of the form a*k + 1/2, t*k + 1,
// lambda-scaled, ...), so there is no reflection path.

#pragma once

#include <cmath>
#include <stdexcept>

#include "hypasym/dd.hpp"

namespace hypasym {

namespace detail {

// B_{2n} / (2n (2n-1)), n = 1..9.
inline constexpr double kStirlingCoef[9] = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
};

inline constexpr double kLnSqrt2Pi = 0.91893853320467274178;
inline constexpr double kStirlingEdge = 10.0;

inline double stirling_log_gamma(double z) {
    double w = 1.0 / (z * z);
    double s = kStirlingCoef[8];
    for (int i = 7; i >= 0; --i) s = s * w + kStirlingCoef[i];
    return (z - 0.5) * std::log(z) - z + kLnSqrt2Pi + s / z;
}

} // namespace detail

inline double log_gamma(double z) {
    if (!(z > 0.0))
        throw std::domain_error("log_gamma: argument must be positive");
    if (z == 1.0 || z == 2.0) return 0.0;
    if (z >= detail::kStirlingEdge) return detail::stirling_log_gamma(z);

    int n = static_cast<int>(std::ceil(detail::kStirlingEdge - z));
    DD shift(z);
    for (int j = 1; j < n; ++j) shift = dd_mul(shift, z + j);
    double log_shift = std::log(shift.hi) + std::log1p(shift.lo / shift.hi);
    return detail::stirling_log_gamma(z + n) - log_shift;
}

} // namespace hypasym
