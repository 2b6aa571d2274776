#include "whittaker/quadrature.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <limits>

namespace whittaker {

QuadResult integrate_interval(const std::function<std::complex<double>(double)>& f, double a, double b, double rel_tol, unsigned max_depth) {
    QuadResult r;
    r.value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, max_depth, rel_tol, &r.abs_err);
    return r;
}

double integrate_half_line(const std::function<double(double)>& f, double rel_tol, double* abs_err) {
    boost::math::quadrature::exp_sinh<double> es;
    double err = 0, l1 = 0;
    const double v = es.integrate(f, 0.0, std::numeric_limits<double>::infinity(), rel_tol, &err, &l1);
    if (abs_err) *abs_err = err;
    return v;
}

}  // namespace whittaker
