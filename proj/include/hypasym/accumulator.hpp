// Compensated running sum for long positive-term series.

#pragma once

#include <cmath>
#include <stdexcept>

#include "hypasym/dd.hpp"

namespace hypasym {

// Two-component accumulator: the represented value is hi + lo and
// |lo| <= ulp(hi)/2 after every add.  Adding a double is an error-free
// transformation of the leading digits (sumXBLAS-style); adding a DD keeps
// the compensation of the term as well.
struct HiPrecAccumulator {
    double hi = 0.0;
    double lo = 0.0;

    void add(double term) {
        SplitSum s = two_sum(hi, term);
        double e = s.err + lo;
        SplitSum z = fast_two_sum(s.sum, e);
        hi = z.sum;
        lo = z.err;
        if (!std::isfinite(hi))
            throw std::overflow_error("HiPrecAccumulator: sum saturated double range");
    }

    void add(DD term) {
        SplitSum s = two_sum(hi, term.hi);
        double e = s.err + lo + term.lo;
        SplitSum z = fast_two_sum(s.sum, e);
        hi = z.sum;
        lo = z.err;
        if (!std::isfinite(hi))
            throw std::overflow_error("HiPrecAccumulator: sum saturated double range");
    }

    DD to_dd() const { return {hi, lo}; }
    double value() const { return hi + lo; }
};

} // namespace hypasym
