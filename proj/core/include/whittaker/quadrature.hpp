#pragma once

#include <complex>
#include <functional>

namespace whittaker {

struct QuadResult {
    std::complex<double> value;
    double abs_err = 0;
};

// Adaptive Gauss-Kronrod (15 points) on a finite interval.
QuadResult integrate_interval(const std::function<std::complex<double>(double)>& f, double a, double b, double rel_tol = 1e-12,
                              unsigned max_depth = 18);

// Real integrand on (0, infinity) by the exp-sinh rule.
double integrate_half_line(const std::function<double(double)>& f, double rel_tol = 1e-12, double* abs_err = nullptr);

}  // namespace whittaker
