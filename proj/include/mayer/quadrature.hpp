#pragma once

#include <functional>

#include "mayer/types.hpp"

namespace mayer {

struct QuadratureResult {
    Complex value;
    double error = 0.0;
    int evaluations = 0;
};

// Adaptive Gauss–Kronrod (7/15) bisection on [a, b]. Throws QuadratureError when
// the estimated error stays above max(abs_tol, rel_tol*|value|) after max_intervals.
QuadratureResult integrate_gk15(const std::function<Complex(double)>& f, double a, double b, double abs_tol,
                                double rel_tol, int max_intervals = 2000);

}  // namespace mayer
