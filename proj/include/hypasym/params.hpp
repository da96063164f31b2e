// Derived parameters shared by every evaluation path.

#pragma once

#include <cmath>
#include <stdexcept>

namespace hypasym {

// For the target function with large parameter k, argument x and shape
// parameter t, all derived symbols are coupled:
//   a = (1+t)/2,  b = (1-t)/2,  c = a b,  2a - 1 = t,
//   chi = a x,  X = a x / t,  epsilon = a / t,  lambda = t k,
//   x_star = 4t/(1+t)^2,  alpha = 4(1+a)/(a t).
// The saddle/pole coalescence sits at epsilon * chi = 1, i.e. x = x_star.
struct DerivedParams {
    double k = 0, x = 0, t = 0;
    double a = 0, b = 0, c = 0;
    double X = 0, chi = 0;
    double epsilon = 0, lambda = 0;
    double x_star = 0, alpha = 0;
};

inline DerivedParams derive_params(double k, double x, double t) {
    if (!(k > 0.0))
        throw std::domain_error("derive_params: k must be positive");
    if (!(x > 0.0 && x <= 1.0))
        throw std::domain_error("derive_params: x must lie in (0, 1]");
    if (!(t > 0.0 && t <= 1.0))
        throw std::domain_error("derive_params: t must lie in (0, 1]");

    DerivedParams p;
    p.k = k;
    p.x = x;
    p.t = t;
    p.a = 0.5 * (1.0 + t);
    p.b = 0.5 * (1.0 - t);
    p.c = p.a * p.b;
    p.chi = p.a * x;
    p.X = p.chi / t;
    p.epsilon = p.a / t;
    p.lambda = t * k;
    p.x_star = 4.0 * t / ((1.0 + t) * (1.0 + t));
    p.alpha = 4.0 * (1.0 + p.a) / (p.a * t);
    return p;
}

} // namespace hypasym
