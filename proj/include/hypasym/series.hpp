// Direct summation of hypergeometric-type series
//   sum_r  prod_i (num_i)_r / prod_j (den_j)_r * x^r / r!
// by multiplicative term-ratio recurrence in double-double arithmetic.
//
// Two regimes:
//  * x < 1: geometric tail.  Terms can first grow like r^(b k - 1) before
//    decaying when the parameters are large, so the stopping rule requires
//    the term sequence to be past its peak before tolerances are applied.
//    The tail is bounded with a provable supremum of all future term
//    ratios, not just the last observed one (the observed ratio approaches
//    its limit from below over an O(k^2)-wide window and can understate
//    the tail).
//  * x = 1 with positive parametric excess e: terms decay like r^(-1-e),
//    far too slowly to sum.  Partial sums at a power-of-two checkpoint
//    ladder are Richardson-extrapolated against the exponent ladder
//    {e, e+1, e+2, ...}.

#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "hypasym/accumulator.hpp"
#include "hypasym/dd.hpp"
#include "hypasym/params.hpp"

namespace hypasym {

struct SeriesSpec {
    std::vector<double> num;  // Pochhammer numerator parameters
    std::vector<double> den;  // Pochhammer denominator parameters; r! is implicit
    double x = 0.0;           // argument, in [0, 1]
    double rel_tol = 1e-16;
    std::int64_t max_terms = 10'000'000;
};

enum class SeriesStatus { converged, term_cap_hit };

struct SeriesResult {
    double value = 0.0;
    double value_lo = 0.0;  // compensation component; value + value_lo is the full sum
    std::int64_t terms_used = 0;
    double tail_bound = 0.0;  // estimated omitted tail relative to the value
    SeriesStatus status = SeriesStatus::converged;

    DD dd() const { return {value, value_lo}; }
};

namespace detail {

inline void validate_spec(const SeriesSpec &s) {
    if (!(s.x >= 0.0 && s.x <= 1.0))
        throw std::domain_error("series: argument must lie in [0, 1]");
    if (!(s.rel_tol >= 1e-30 && s.rel_tol <= 1e-3))
        throw std::domain_error("series: rel_tol must lie in [1e-30, 1e-3]");
    if (s.max_terms < 10)
        throw std::domain_error("series: max_terms must be at least 10");
    for (double d : s.den)
        if (!(d > 0.0))
            throw std::domain_error("series: denominator parameters must be positive");
    if (s.num.size() > s.den.size() + 1)
        throw std::domain_error("series: more numerator than denominator slots, divergent");
}

inline double parametric_excess(const SeriesSpec &s) {
    double e = 0.0;
    for (double d : s.den) e += d;
    for (double n : s.num) e -= n;
    return e;
}

// term_{r+1} / term_r as a double-double.
inline DD step_factor(const SeriesSpec &s, std::int64_t r) {
    double rr = static_cast<double>(r);
    DD n(s.x);
    for (double p : s.num) n = dd_mul(n, p + rr);
    DD d(rr + 1.0);
    for (double q : s.den) d = dd_mul(d, q + rr);
    return dd_div(n, d);
}

// Upper bound on every term ratio from step r onward.  Each Pochhammer pair
// factor (n + r')/(d + r') is monotone in r' with limit 1, so its supremum
// over r' >= r is max(value at r, 1); the unpaired numerator rides on the
// factorial slot and any unpaired denominators only shrink the ratio.
inline double future_ratio_bound(const SeriesSpec &s, std::int64_t r) {
    double rr = static_cast<double>(r);
    double rho = s.x;
    for (std::size_t i = 0; i < s.num.size(); ++i) {
        double d = (i < s.den.size()) ? s.den[i] : 1.0;
        double f = (s.num[i] + rr) / (d + rr);
        if (f > 1.0) rho *= f;
    }
    return rho;
}

SeriesResult sum_at_unit_argument(const SeriesSpec &s);

} // namespace detail

inline SeriesResult sum_series(const SeriesSpec &s) {
    detail::validate_spec(s);
    if (s.x == 0.0) return {1.0, 0.0, 1, 0.0, SeriesStatus::converged};
    if (s.x == 1.0) {
        if (!(detail::parametric_excess(s) > 0.0))
            throw std::domain_error(
                "series: argument 1 requires positive parametric excess");
        return detail::sum_at_unit_argument(s);
    }

    HiPrecAccumulator acc;
    acc.add(1.0);
    DD term(1.0);
    double prev = 1.0;
    int descending = 0;
    bool past_peak = false;

    for (std::int64_t r = 0; r < s.max_terms; ++r) {
        term = dd_mul(term, detail::step_factor(s, r));
        if (!std::isfinite(term.hi))
            throw std::overflow_error("series: term overflowed double range");
        acc.add(term);

        double th = term.hi;
        if (th < prev) {
            if (++descending >= 3) past_peak = true;
        } else if (past_peak && th > prev * (1.0 + 1e-12)) {
            throw std::logic_error("series: term sequence increased after its peak");
        } else if (!past_peak) {
            descending = 0;
        }
        prev = th;

        if (past_peak) {
            double rho = detail::future_ratio_bound(s, r + 1);
            if (rho < 1.0 - 1e-9) {
                double sum = acc.hi;
                double tail = th * rho / (1.0 - rho);
                if (tail <= s.rel_tol * sum && th <= s.rel_tol * sum)
                    return {acc.hi, acc.lo, r + 2, tail / sum, SeriesStatus::converged};
            }
        }
    }

    double sum = acc.hi;
    double rho = detail::future_ratio_bound(s, s.max_terms);
    double tail = rho < 1.0 ? prev * rho / ((1.0 - rho) * sum)
                            : std::numeric_limits<double>::infinity();
    return {acc.hi, acc.lo, s.max_terms + 1, tail, SeriesStatus::term_cap_hit};
}

namespace detail {

inline SeriesResult sum_at_unit_argument(const SeriesSpec &s) {
    // Checkpoint ladder: top at the largest power of two <= max_terms,
    // capped at 2^23 terms, with up to six halving levels.
    std::int64_t top = 1;
    while (top * 2 <= s.max_terms && top < (std::int64_t{1} << 23)) top *= 2;
    int levels = 1;
    while (levels < 6 && (top >> levels) >= 1024) ++levels;

    std::vector<std::int64_t> checkpoints(levels);
    for (int i = 0; i < levels; ++i) checkpoints[i] = top >> (levels - 1 - i);

    HiPrecAccumulator acc;
    acc.add(1.0);
    DD term(1.0);
    std::vector<DD> partials(levels);
    int next = 0;
    for (std::int64_t r = 0; r < top; ++r) {
        term = dd_mul(term, step_factor(s, r));
        if (!std::isfinite(term.hi))
            throw std::overflow_error("series: term overflowed double range");
        acc.add(term);
        if (r + 1 == checkpoints[next]) partials[next++] = acc.to_dd();
    }

    if (levels < 3) {
        // Not enough room to extrapolate; report the raw partial sum with the
        // integral-comparison tail estimate for r^(-1-e) decay.
        double e = parametric_excess(s);
        double tail = term.hi * static_cast<double>(top) / (e * acc.hi);
        return {acc.hi, acc.lo, top + 1, tail,
                tail <= s.rel_tol ? SeriesStatus::converged : SeriesStatus::term_cap_hit};
    }

    double e = parametric_excess(s);
    std::vector<double> tableau(levels);
    for (int i = 0; i < levels; ++i) tableau[i] = partials[i].value();

    double previous_top = tableau[levels - 1];
    for (int j = 0; j < levels - 1; ++j) {
        double f = std::exp2(e + j) - 1.0;
        for (int i = 0; i < levels - 1 - j; ++i)
            tableau[i] = tableau[i + 1] + (tableau[i + 1] - tableau[i]) / f;
        if (j + 1 < levels - 1) previous_top = tableau[0];
    }

    double value = tableau[0];
    double tail = std::fabs(value - previous_top) / std::fabs(value) + 4e-15;
    SeriesStatus status =
        tail <= s.rel_tol ? SeriesStatus::converged : SeriesStatus::term_cap_hit;
    // Keep the compensated remainder of the raw sum so downstream double-double
    // consumers see a consistent pair; the extrapolated correction lives in hi.
    return {value, 0.0, top + 1, tail, status};
}

} // namespace detail

// The r-th series term, built with the same recurrence the summation uses.
inline double series_term(const SeriesSpec &s, std::int64_t r) {
    detail::validate_spec(s);
    DD term(1.0);
    for (std::int64_t j = 0; j < r; ++j) term = dd_mul(term, detail::step_factor(s, j));
    return term.value();
}

// Visit terms 0..count-1 as double-doubles (for weighted-sum cross-checks).
template <class F>
inline void visit_terms(const SeriesSpec &s, std::int64_t count, F &&f) {
    detail::validate_spec(s);
    DD term(1.0);
    f(std::int64_t{0}, term);
    for (std::int64_t r = 1; r < count; ++r) {
        term = dd_mul(term, detail::step_factor(s, r - 1));
        f(r, term);
    }
}

// Ground-truth value of the target function
//   S(x;t) = 3F2(1, a k, a k + 1/2; t k + 1, k + 1; x),  a = (1+t)/2,
// by direct summation.  t = 0 is accepted as the documented limit case in
// which the first denominator parameter degenerates to 1 and the series
// reduces to a Gauss 2F1 (at x = 1 it sums to 2^k).
inline SeriesResult s_series(double k, double x, double t, double rel_tol,
                             std::int64_t max_terms = 10'000'000) {
    if (!(k > 0.0))
        throw std::domain_error("s_series: k must be positive");
    if (!(x >= 0.0 && x <= 1.0))
        throw std::domain_error("s_series: x must lie in [0, 1]");
    if (!(t >= 0.0 && t <= 1.0))
        throw std::domain_error("s_series: t must lie in [0, 1]");
    double a = 0.5 * (1.0 + t);
    SeriesSpec spec{{1.0, a * k, a * k + 0.5}, {t * k + 1.0, k + 1.0}, x, rel_tol,
                    max_terms};
    return sum_series(spec);
}

// F_m = 2F1(m+1, a k + m; t k + m + 1; a x), the Gauss basis functions of
// the large-k expansions.  Converges for x <= 1 when t < 1 and for x < 1
// when t = 1.
inline SeriesResult f_m(int m, const DerivedParams &p, double rel_tol,
                        std::int64_t max_terms = 10'000'000) {
    if (m < 0) throw std::domain_error("f_m: m must be nonnegative");
    if (p.t == 1.0 && p.chi >= 1.0)
        throw std::domain_error("f_m: series diverges at chi >= 1 when t = 1");
    SeriesSpec spec{{static_cast<double>(m) + 1.0, p.a * p.k + m},
                    {p.t * p.k + m + 1.0},
                    p.chi,
                    rel_tol,
                    max_terms};
    return sum_series(spec);
}

} // namespace hypasym
