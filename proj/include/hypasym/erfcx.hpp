// Scaled complementary error function erfcx(z) = exp(z^2) erfc(z).
//
// For z >= 0 this is W. J. Cody's rational-approximation scheme from the
// SPECFUN routine CALERF (TOMS, 1990): a rational fit of erf on
// [0, 0.46875], of exp(z^2) erfc(z) on (0.46875, 4], and of
// z exp(z^2) erfc(z) in 1/z^2 beyond 4.  Each region is accurate to a few
// ulp in double precision.  Negative arguments use the reflection
// erfcx(-z) = 2 exp(z^2) - erfcx(z); past z ~ -26.6 the reflected value
// overflows double range, so a LogScaled variant carries it in log form.

#pragma once

#include <cmath>
#include <stdexcept>

#include "hypasym/log_scaled.hpp"

namespace hypasym {

namespace detail {

inline constexpr double kInvSqrtPi = 0.56418958354775628695;

// |z| <= 0.46875: erf(z) = z * R(z^2).
inline constexpr double kErfA[5] = {
    3.16112374387056560e00, 1.13864154151050156e02, 3.77485237685302021e02,
    3.20937758913846947e03, 1.85777706184603153e-1};
inline constexpr double kErfB[4] = {
    2.36012909523441209e01, 2.44024637934444173e02, 1.28261652607737228e03,
    2.84423683343917062e03};

// 0.46875 < z <= 4: erfcx(z) = R(z).
inline constexpr double kErfC[9] = {
    5.64188496988670089e-1, 8.88314979438837594e00, 6.61191906371416295e01,
    2.98635138197400131e02, 8.81952221241769090e02, 1.71204761263407058e03,
    2.05107837782607147e03, 1.23033935479799725e03, 2.15311535474403846e-8};
inline constexpr double kErfD[8] = {
    1.57449261107098347e01, 1.17693950891312499e02, 5.37181101862009858e02,
    1.62138957456669019e03, 3.29079923573345963e03, 4.36261909014324716e03,
    3.43936767414372164e03, 1.23033935480374942e03};

// z > 4: erfcx(z) = (1/sqrt(pi) - w R(w)) / z, w = 1/z^2.
inline constexpr double kErfP[6] = {
    3.05326634961232344e-1, 3.60344899949804439e-1, 1.25781726111229246e-1,
    1.60837851487422766e-2, 6.58749161529837803e-4, 1.63153871373020978e-2};
inline constexpr double kErfQ[5] = {
    2.56852019228982242e00, 1.87295284992346047e00, 5.27905102951428412e-1,
    6.05183413124413191e-2, 2.33520497626869185e-3};

inline double erfcx_nonneg(double z) {
    if (z <= 0.46875) {
        double w = z * z;
        double num = kErfA[4] * w;
        double den = w;
        for (int i = 0; i < 3; ++i) {
            num = (num + kErfA[i]) * w;
            den = (den + kErfB[i]) * w;
        }
        double erf = z * (num + kErfA[3]) / (den + kErfB[3]);
        return std::exp(w) * (1.0 - erf);
    }
    if (z <= 4.0) {
        double num = kErfC[8] * z;
        double den = z;
        for (int i = 0; i < 7; ++i) {
            num = (num + kErfC[i]) * z;
            den = (den + kErfD[i]) * z;
        }
        return (num + kErfC[7]) / (den + kErfD[7]);
    }
    if (z > 6.71e7) return kInvSqrtPi / z; // rational tail below noise level
    double w = 1.0 / (z * z);
    double num = kErfP[5] * w;
    double den = w;
    for (int i = 0; i < 4; ++i) {
        num = (num + kErfP[i]) * w;
        den = (den + kErfQ[i]) * w;
    }
    double r = w * (num + kErfP[4]) / (den + kErfQ[4]);
    return (kInvSqrtPi - r) / z;
}

} // namespace detail

inline double erfcx(double z) {
    if (z >= 0.0) return detail::erfcx_nonneg(z);
    if (z < -26.62)
        throw std::overflow_error(
            "erfcx: reflected value overflows double range; use erfcx_scaled");
    return 2.0 * std::exp(z * z) - detail::erfcx_nonneg(-z);
}

// Log-scaled erfcx, finite for any argument.  For z < 0 the dominant factor
// is exp(z^2), carried in the exponent: erfcx(z) = exp(z^2) (2 - erfc(-z))
// with the correction folded in through log1p.
inline LogScaled erfcx_scaled(double z) {
    if (z >= 0.0) return LogScaled::from_value(detail::erfcx_nonneg(z));
    double zz = z * z;
    double correction = (zz > 745.0) ? 0.0 : std::exp(-zz) * detail::erfcx_nonneg(-z);
    double log_mag = zz + std::log(2.0) + std::log1p(-0.5 * correction);
    return LogScaled::from_log(log_mag, +1);
}

} // namespace hypasym
