// Sign/log-magnitude representation for factors that overflow double range,
// and a checked assembler that exponentiates only the final balanced exponent.

#pragma once

#include <cmath>
#include <initializer_list>
#include <limits>
#include <span>
#include <sstream>
#include <stdexcept>

namespace hypasym {

struct LogScaled {
    double log_mag = -std::numeric_limits<double>::infinity(); // ln |value|
    int sign = 0;                                              // +1, -1, 0

    static LogScaled zero() { return {}; }

    static LogScaled from_value(double v) {
        if (v == 0.0) return zero();
        if (!std::isfinite(v))
            throw std::domain_error("LogScaled: value must be finite");
        return {std::log(std::fabs(v)), v > 0.0 ? +1 : -1};
    }

    static LogScaled from_log(double log_mag, int sign = +1) {
        if (sign == 0) return zero();
        return {log_mag, sign > 0 ? +1 : -1};
    }

    LogScaled &operator*=(const LogScaled &o) {
        sign *= o.sign;
        log_mag = (sign == 0) ? -std::numeric_limits<double>::infinity()
                              : log_mag + o.log_mag;
        return *this;
    }

    friend LogScaled operator*(LogScaled a, const LogScaled &b) { return a *= b; }

    // Checked exponentiation back to an ordinary double.
    double to_double() const;
};

namespace detail {
// ln(DBL_MAX) and ln of the smallest normal double.
inline constexpr double kMaxExponent = 709.782712893383996;
inline constexpr double kMinExponent = -708.396418532264078;
} // namespace detail

inline double LogScaled::to_double() const {
    if (sign == 0) return 0.0;
    if (log_mag > detail::kMaxExponent) {
        std::ostringstream os;
        os << "LogScaled: exponent " << log_mag << " overflows double range";
        throw std::overflow_error(os.str());
    }
    if (log_mag < detail::kMinExponent) {
        std::ostringstream os;
        os << "LogScaled: exponent " << log_mag << " underflows double range";
        throw std::underflow_error(os.str());
    }
    return sign * std::exp(log_mag);
}

// Product of log-scaled factors and ordinary multiplicands, combined in the
// log domain.  Individual factors may overflow or underflow on their own;
// only the balanced total exponent is exponentiated, and an out-of-range
// total raises with the offending exponent in the message.
inline double log_assemble(std::span<const LogScaled> factors,
                           std::span<const double> linear_terms) {
    LogScaled acc = LogScaled::from_log(0.0, +1);
    for (const LogScaled &f : factors) acc *= f;
    for (double v : linear_terms) acc *= LogScaled::from_value(v);
    return acc.to_double();
}

inline double log_assemble(std::initializer_list<LogScaled> factors,
                           std::initializer_list<double> linear_terms) {
    return log_assemble(std::span<const LogScaled>(factors.begin(), factors.size()),
                        std::span<const double>(linear_terms.begin(), linear_terms.size()));
}

} // namespace hypasym
