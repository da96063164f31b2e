// Truncated large-k expansions of the target function, assembled from the
// Gauss basis functions F_m and the Pochhammer weights A_m.
//
// Three equivalent assemblies are kept side by side:
//   exact_am    - A_m kept as exact Pochhammer ratios,
//   expanded_am - A_m expanded in 1/k and folded into the coefficients,
//   t_equals_1  - the degenerate form at t = 1 (a = 1, c = 0).
// All variants share the same F_m values, so their differences isolate the
// coefficient algebra.

#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include "hypasym/params.hpp"
#include "hypasym/series.hpp"

namespace hypasym {

enum class Variant { exact_am, expanded_am, t_equals_1 };

inline const char *variant_name(Variant v) {
    switch (v) {
        case Variant::exact_am: return "exact_am";
        case Variant::expanded_am: return "expanded_am";
        case Variant::t_equals_1: return "t_equals_1";
    }
    return "?";
}

// A_m = (a k)_m / (t k + 1)_m as an exact m-fold product.
inline double a_m(int m, const DerivedParams &p) {
    if (m < 0) throw std::domain_error("a_m: m must be nonnegative");
    double v = 1.0;
    for (int j = 0; j < m; ++j) v *= (p.a * p.k + j) / (p.t * p.k + 1.0 + j);
    return v;
}

struct ExpansionResult {
    double value = 0.0;
    int order = 0;
    std::array<double, 3> terms{};  // contributions at k^0, k^-1, k^-2
    Variant variant = Variant::expanded_am;
    bool kt_regime_warning = false;  // k t < 10: outside the expansion's regime
    bool routed_to_t1 = false;       // c ~ 0 with t != 1 rerouted to the t=1 form
};

// Expansion truncated after the k^-order term, order in {0, 1, 2}.
inline ExpansionResult s_expansion(const DerivedParams &p, int order,
                                   Variant requested = Variant::expanded_am,
                                   double series_tol = 1e-18,
                                   std::int64_t max_terms = 10'000'000) {
    if (order < 0 || order > 2)
        throw std::domain_error("s_expansion: order must be 0, 1 or 2");

    // The expanded-A coefficients divide by c through alpha only as the
    // product alpha*c (finite as c -> 0), but the exact/expanded split is
    // meaningless at c = 0: route degenerate inputs to the t = 1 form.
    bool degenerate = p.c < 1e-12;
    Variant v = requested;
    bool routed = false;
    if (requested == Variant::t_equals_1) {
        if (!degenerate)
            throw std::domain_error("s_expansion: t_equals_1 variant requires t = 1");
    } else if (degenerate && requested == Variant::expanded_am) {
        v = Variant::t_equals_1;
        routed = (p.t != 1.0);
    }

    int mmax = order == 0 ? 0 : (order == 1 ? 2 : 4);
    if (v == Variant::t_equals_1) mmax = std::min(mmax, 2);

    std::array<double, 5> F{};
    for (int m = 0; m <= mmax; ++m) F[m] = f_m(m, p, series_tol, max_terms).value;

    const double k = p.k, x = p.x, t = p.t, a = p.a, c = p.c, X = p.X;
    ExpansionResult res;
    res.order = order;
    res.variant = v;
    res.kt_regime_warning = (k * t < 10.0);
    res.routed_to_t1 = routed;
    res.terms[0] = F[0];

    if (order >= 1) {
        switch (v) {
            case Variant::exact_am: {
                double A1 = a_m(1, p), A2 = a_m(2, p);
                res.terms[1] =
                    (0.5 * (1.0 - 2.0 * a) * x * A1 * F[1] + c * x * x * A2 * F[2]) / k;
                if (order >= 2) {
                    double A3 = a_m(3, p), A4 = a_m(4, p);
                    res.terms[2] = (0.5 * (2.0 * a - 1.0) * x * A1 * F[1] +
                                    0.25 * (3.0 - 20.0 * c) * x * x * A2 * F[2] +
                                    3.5 * (1.0 - 2.0 * a) * c * x * x * x * A3 * F[3] +
                                    3.0 * c * c * x * x * x * x * A4 * F[4]) /
                                   (k * k);
                }
                break;
            }
            case Variant::expanded_am: {
                res.terms[1] = -(0.5 * t * X * F[1] - c * X * X * F[2]) / k;
                if (order >= 2) {
                    res.terms[2] = (a * X * F[1] +
                                    0.25 * (3.0 - (20.0 + p.alpha) * c) * X * X * F[2] -
                                    3.5 * c * t * X * X * X * F[3] +
                                    3.0 * c * c * X * X * X * X * F[4]) /
                                   (k * k);
                }
                break;
            }
            case Variant::t_equals_1: {
                res.terms[1] = -X * F[1] / (2.0 * k);
                if (order >= 2)
                    res.terms[2] = (X * F[1] + 0.75 * X * X * F[2]) / (k * k);
                break;
            }
        }
    }

    res.value = res.terms[0];
    for (int j = 1; j <= order; ++j) res.value += res.terms[j];
    return res;
}

} // namespace hypasym
