// Error-free transformations and a minimal double-double value type.
//
// The basic algorithms (two_sum, two_prod, the double-double products and
// quotients) follow M. Joldes et al., ACM Trans. Math. Softw. 44 (2018).
// Double-double carries ~31 significant digits, which is what lets the
// series engines honour truncation tolerances far below double precision.
//
// Nothing here survives -ffast-math; build with IEEE semantics.

#pragma once

#include <cmath>

namespace hypasym {

struct SplitSum {
    double sum;
    double err;
};

inline SplitSum two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

// Requires |a| >= |b| or a == 0.
inline SplitSum fast_two_sum(double a, double b) {
    double s = a + b;
    double err = (a - s) + b;
    return {s, err};
}

inline SplitSum two_prod(double a, double b) {
    double p = a * b;
    double err = std::fma(a, b, -p);
    return {p, err};
}

// Unevaluated sum hi + lo with |lo| <= ulp(hi)/2.
struct DD {
    double hi = 0.0;
    double lo = 0.0;

    constexpr DD() = default;
    constexpr DD(double x) : hi(x), lo(0.0) {}
    constexpr DD(double h, double l) : hi(h), lo(l) {}

    double value() const { return hi + lo; }
};

inline DD dd_add(DD x, double y) {
    SplitSum s = two_sum(x.hi, y);
    double v = x.lo + s.err;
    SplitSum z = fast_two_sum(s.sum, v);
    return {z.sum, z.err};
}

inline DD dd_add(DD x, DD y) {
    SplitSum s = two_sum(x.hi, y.hi);
    SplitSum t = two_sum(x.lo, y.lo);
    double c = s.err + t.sum;
    SplitSum v = fast_two_sum(s.sum, c);
    double w = t.err + v.err;
    SplitSum z = fast_two_sum(v.sum, w);
    return {z.sum, z.err};
}

inline DD dd_sub(DD x, DD y) { return dd_add(x, DD{-y.hi, -y.lo}); }

inline DD dd_mul(DD x, double y) {
    SplitSum p = two_prod(x.hi, y);
    double t = std::fma(x.lo, y, p.err);
    SplitSum z = fast_two_sum(p.sum, t);
    return {z.sum, z.err};
}

inline DD dd_mul(DD x, DD y) {
    SplitSum p = two_prod(x.hi, y.hi);
    double t = x.hi * y.lo + x.lo * y.hi + p.err;
    SplitSum z = fast_two_sum(p.sum, t);
    return {z.sum, z.err};
}

inline DD dd_div(DD x, DD y) {
    double q1 = x.hi / y.hi;
    DD r = dd_add(x, dd_mul(y, -q1));
    double q2 = r.hi / y.hi;
    r = dd_add(r, dd_mul(y, -q2));
    double q3 = r.hi / y.hi;
    SplitSum s = fast_two_sum(q1, q2);
    return dd_add(DD{s.sum, s.err}, q3);
}

} // namespace hypasym
