// Expansion coefficients and prefactors for the large-k Laplace expansion:
// the closed forms c2, c4, the Stirling-type gamma-ratio prefactor Xi, the
// generic Laplace-method coefficient engine used to cross-validate the
// closed forms, and the slow Pochhammer ratio P_r with its 1/k expansion.

#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include "hypasym/gamma.hpp"

namespace hypasym {

namespace detail {
inline constexpr double kCMin = 1e-300;
inline constexpr double kLn2Pi = 1.8378770664093454836;

inline double check_ab(double a, double z) {
    double c = a * (1.0 - a);
    if (!(c > kCMin))
        throw std::domain_error(
            "laplace coefficients: c = a(1-a) vanishes (t = 1 path must use the "
            "degenerate expansion)");
    if (std::fabs(1.0 - a * z) < 1e-9)
        throw std::domain_error("laplace coefficients: amplitude pole at a z = 1");
    return c;
}
} // namespace detail

// c2(a, z) = 2 c z^2/(1-a z)^2 + (1-2a) z/(1-a z) - (1+2c)/(12 c).
inline double c2_coeff(double a, double z) {
    double c = detail::check_ab(a, z);
    double u = 1.0 - a * z;
    return 2.0 * c * z * z / (u * u) + (1.0 - 2.0 * a) * z / u -
           (1.0 + 2.0 * c) / (12.0 * c);
}

// c4'(a, z): the c4 closed form without its -(1+2c)/(36c) c2 correction term.
inline double c4_prime_coeff(double a, double z) {
    double c = detail::check_ab(a, z);
    double u = 1.0 - a * z;
    double u2 = u * u;
    return 4.0 * c * c * z * z * z * z / (u2 * u2) +
           14.0 * (1.0 - 2.0 * a) * c * z * z * z / (3.0 * u2 * u) +
           (3.0 - 20.0 * c) * z * z / (3.0 * u2) -
           2.0 * (1.0 - 2.0 * a) * z / (3.0 * u) -
           (1.0 + 2.0 * c) * (1.0 + 2.0 * c) / (864.0 * c * c);
}

inline double c4_coeff(double a, double z) {
    double c = detail::check_ab(a, z);
    return c4_prime_coeff(a, z) - (1.0 + 2.0 * c) / (36.0 * c) * c2_coeff(a, z);
}

// Xi(a, k) = Gamma(k+1) / (Gamma(a k + 1/2) Gamma((1-a) k + 1/2))
//            * (k / 2 pi)^(-1/2) * a^(a k) (1-a)^((1-a) k),  gamma form.
inline double xi_gamma(double a, double k) {
    if (!(a > 0.0 && a < 1.0))
        throw std::domain_error("xi_gamma: a must lie in (0, 1)");
    if (!(k > 0.0)) throw std::domain_error("xi_gamma: k must be positive");
    double b = 1.0 - a;
    double lg = log_gamma(k + 1.0) - log_gamma(a * k + 0.5) - log_gamma(b * k + 0.5);
    double log_xi = lg - 0.5 * (std::log(k) - detail::kLn2Pi) +
                    a * k * std::log(a) + b * k * std::log(b);
    return std::exp(log_xi);
}

// Xi(a, k) = 1 + (1+2c)/(24 c k) + (1+2c)^2/(1152 c^2 k^2) + O(k^-3).
inline double xi_series(double a, double k) {
    if (!(a > 0.0 && a < 1.0))
        throw std::domain_error("xi_series: a must lie in (0, 1)");
    if (!(k > 0.0)) throw std::domain_error("xi_series: k must be positive");
    double c = a * (1.0 - a);
    double q = (1.0 + 2.0 * c) / c;
    return 1.0 + q / (24.0 * k) + q * q / (1152.0 * k * k);
}

struct LaplaceCoeffs {
    double c2;
    double c4;
};

// Generic Laplace coefficient engine: assembles c2 and c4 from the
// derivatives of the logarithmic phase psi(tau) = a ln tau + (1-a) ln(1-tau)
// at its saddle tau = a and of the amplitude
// f(tau) = tau^(-1/2) (1-tau)^(-1/2) / (1 - z tau).  The amplitude
// derivatives come from the log-derivative L = (ln f)' composed through the
// complete Bell polynomials, so this path is independent of the closed
// forms it checks.
inline LaplaceCoeffs laplace_coeffs_generic(double a, double z) {
    if (!(a > 0.0 && a < 1.0))
        throw std::domain_error("laplace_coeffs_generic: a must lie in (0, 1)");
    if (std::fabs(1.0 - a * z) < 1e-6)
        throw std::domain_error(
            "laplace_coeffs_generic: saddle within 1e-6 of the amplitude pole");

    double b = 1.0 - a;

    // psi^(n)(a) = (n-1)! * ((-1)^(n-1) a^(1-n) - b^(1-n)), n >= 1.
    std::array<double, 7> psi{};
    double fact = 1.0;
    for (int n = 1; n <= 6; ++n) {
        if (n > 1) fact *= (n - 1);
        double sgn = (n % 2 == 1) ? 1.0 : -1.0;
        psi[n] = fact * (sgn * std::pow(a, 1 - n) - std::pow(b, 1 - n));
    }
    double psi2 = psi[2];
    double P3 = psi[3] / psi2, P4 = psi[4] / psi2, P5 = psi[5] / psi2,
           P6 = psi[6] / psi2;

    // L^(n)(a) with L = -1/(2 tau) + 1/(2 (1-tau)) + z/(1 - z tau).
    std::array<double, 4> L{};
    double nfact = 1.0;
    for (int n = 0; n <= 3; ++n) {
        if (n > 0) nfact *= n;
        double sgn = (n % 2 == 0) ? 1.0 : -1.0;
        L[n] = nfact * (-0.5 * sgn * std::pow(a, -(n + 1)) +
                        0.5 * std::pow(b, -(n + 1)) +
                        std::pow(z, n + 1) * std::pow(1.0 - z * a, -(n + 1)));
    }
    double F1 = L[0];
    double F2 = L[1] + L[0] * L[0];
    double F3 = L[2] + 3.0 * L[0] * L[1] + L[0] * L[0] * L[0];
    double F4 = L[3] + 4.0 * L[0] * L[2] + 3.0 * L[1] * L[1] +
                6.0 * L[0] * L[0] * L[1] + L[0] * L[0] * L[0] * L[0];

    double c2 = -(F2 - P3 * F1 + (5.0 / 12.0) * P3 * P3 - 0.25 * P4) / psi2;
    double c4 =
        ((1.0 / 6.0) * F4 - (5.0 / 9.0) * P3 * F3 +
         (5.0 / 12.0) * ((7.0 / 3.0) * P3 * P3 - P4) * F2 -
         (35.0 / 36.0) * (P3 * P3 * P3 - P3 * P4 + (6.0 / 35.0) * P5) * F1 +
         (35.0 / 36.0) * ((11.0 / 24.0) * P3 * P3 * P3 * P3 -
                          0.75 * (P3 * P3 - P4 / 6.0) * P4 +
                          0.2 * P3 * P5 - P6 / 35.0)) /
        (psi2 * psi2);
    return {c2, c4};
}

struct PrPair {
    double exact;
    double expanded;
};

// P_r = (a k + 1/2)_r / (k + 1)_r, exactly and through its two-order 1/k
// expansion (valid for r^2/k << 1; enforced as k >= 10 r^2).
inline PrPair confluence_pr(int r, double a, double k) {
    if (r < 0) throw std::domain_error("confluence_pr: r must be nonnegative");
    if (!(a > 0.0 && a <= 1.0))
        throw std::domain_error("confluence_pr: a must lie in (0, 1]");
    if (!(k >= 10.0 * r * r))
        throw std::domain_error("confluence_pr: requires k >= 10 r^2");

    double exact = 1.0;
    for (int j = 0; j < r; ++j) exact *= (a * k + 0.5 + j) / (k + 1.0 + j);

    double rr = r;
    double first = (a * rr - rr * rr * (1.0 - a)) / (2.0 * a * k);
    double second = ((2.0 * a * a + 1.0) * rr + 9.0 * a * a * rr * rr -
                     2.0 * (1.0 - a) * (5.0 * a + 2.0) * rr * rr * rr +
                     3.0 * (1.0 - a) * (1.0 - a) * rr * rr * rr * rr) /
                    (24.0 * a * a * k * k);
    return {exact, 1.0 - first + second};
}

} // namespace hypasym
