#include "whittaker/special.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/factorials.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <numbers>

#include "whittaker/errors.hpp"

namespace whittaker {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_nonpositive_integer(cplx z) { return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()); }

// Stirling series for |z| large with Re z > 0.
cplx stirling(cplx z) {
    static const double B[] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730, 7.0 / 6, -3617.0 / 510, 43867.0 / 798, -174611.0 / 330};
    cplx s = (z - 0.5) * std::log(z) - z + 0.5 * std::log(2 * kPi);
    const cplx iz2 = 1.0 / (z * z);
    cplx zp = 1.0 / z;
    for (int k = 1; k <= 10; ++k) {
        s += B[k - 1] / (2.0 * k * (2.0 * k - 1)) * zp;
        zp *= iz2;
    }
    return s;
}

// Trapezoid rule on the symmetric integral representation. The step shrinks
// with |nu| so that the saddle of width ~ 1/sqrt(nu) is resolved.
template <class Kernel>
cplx trapezoid_k(cplx nu, double x, double shift, Kernel kernel) {
    const double anu = std::abs(nu.real());
    double h = std::min(0.2, 0.6 / std::sqrt(1.0 + std::abs(nu)));
    h = std::min(h, 0.5 / (1.0 + std::abs(nu.imag())));
    const double ustar = std::asinh(anu / x);
    auto logmag = [&](double u) { return -x * std::cosh(u) + anu * u; };
    const double peak = logmag(ustar);
    cplx sum = 0.5 * kernel(0.0, nu, x, shift);
    for (int k = 1;; ++k) {
        const double u = k * h;
        sum += kernel(u, nu, x, shift);
        if (u > ustar && logmag(u) < peak - 46.0) break;
        if (k > 2000000) throw ConvergenceError("bessel_k: trapezoid rule did not terminate");
    }
    return h * sum;
}

cplx k_kernel(double u, cplx nu, double x, double shift) {
    const double base = -x * std::cosh(u) + shift;
    return 0.5 * (std::exp(base + nu * u) + std::exp(base - nu * u));
}

cplx dk_kernel(double u, cplx nu, double x, double shift) {
    const double base = -x * std::cosh(u) + shift;
    return 0.5 * u * (std::exp(base + nu * u) - std::exp(base - nu * u));
}

}  // namespace

cplx log_gamma(cplx z) {
    if (is_nonpositive_integer(z)) throw GammaPole("log_gamma: pole at " + std::to_string(z.real()));
    if (z.real() < 0.5) {
        // Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return std::log(kPi) - std::log(std::sin(kPi * z)) - log_gamma(1.0 - z);
    }
    cplx shift = 0;
    cplx w = z;
    while (std::abs(w) < 15.0) {
        shift += std::log(w);
        w += 1.0;
    }
    return stirling(w) - shift;
}

cplx gamma_c(cplx z) { return std::exp(log_gamma(z)); }

cplx rgamma(cplx z) {
    if (is_nonpositive_integer(z)) return 0.0;
    return std::exp(-log_gamma(z));
}

double log_abs_gamma(double x) {
    if (x <= 0 && x == std::floor(x)) throw GammaPole("log_abs_gamma: pole at " + std::to_string(x));
    return boost::math::lgamma(x);
}

int sign_gamma(double x) {
    if (x > 0) return 1;
    if (x == std::floor(x)) throw GammaPole("sign_gamma: pole at " + std::to_string(x));
    // Gamma alternates sign on the negative intervals (-k-1, -k)
    const long k = static_cast<long>(std::floor(-x));
    return k % 2 == 0 ? -1 : 1;
}

double digamma(double x) { return boost::math::digamma(x); }

double rgamma_deriv(double x) {
    if (x <= 0 && x == std::floor(x)) {
        const unsigned N = static_cast<unsigned>(-x);
        const double f = boost::math::factorial<double>(N);
        return N % 2 == 0 ? f : -f;
    }
    const double rg = sign_gamma(x) * std::exp(-log_abs_gamma(x));
    return -digamma(x) * rg;
}

cplx bessel_k(cplx nu, double x) {
    if (!(x > 0)) throw ParameterError("bessel_k: need x > 0");
    return trapezoid_k(nu, x, 0.0, k_kernel);
}

cplx bessel_k_scaled(cplx nu, double x) {
    if (!(x > 0)) throw ParameterError("bessel_k_scaled: need x > 0");
    return trapezoid_k(nu, x, x, k_kernel);
}

cplx bessel_i(cplx nu, double x) {
    if (!(x > 0)) throw ParameterError("bessel_i: need x > 0");
    if (is_nonpositive_integer(nu)) nu = -nu;  // I_{-N} = I_N
    const double y = 0.5 * x;
    const double y2 = y * y;
    cplx rg = rgamma(nu + 1.0);
    cplx term;
    if (rg == 0.0) {
        // cannot happen after the reflection above, kept for safety
        throw ConsistencyError("bessel_i: vanishing leading term");
    }
    term = std::exp(nu * std::log(y)) * rg;
    cplx sum = term;
    const double anu = std::abs(nu);
    for (int k = 0; k < 100000; ++k) {
        term *= y2 / ((k + 1.0) * (nu + (k + 1.0)));
        sum += term;
        if (k > anu + y && std::abs(term) < 1e-17 * std::abs(sum)) return sum;
    }
    throw ConvergenceError("bessel_i: series did not converge");
}

double bessel_k_real(double nu, double x) { return boost::math::cyl_bessel_k(nu, x); }

double bessel_i_real(double nu, double x) {
    if (nu < 0 && nu == std::floor(nu)) nu = -nu;
    return boost::math::cyl_bessel_i(nu, x);
}

double bessel_k_dnu(double nu, double x) {
    if (!(x > 0)) throw ParameterError("bessel_k_dnu: need x > 0");
    return trapezoid_k(cplx(nu, 0), x, 0.0, dk_kernel).real();
}

double bessel_i_dnu(double nu, double x) {
    if (!(x > 0)) throw ParameterError("bessel_i_dnu: need x > 0");
    const double ly = std::log(0.5 * x);
    double sum = 0;
    const double anu = std::abs(nu);
    for (int k = 0; k < 100000; ++k) {
        const double z = nu + k + 1;
        double rg = 0;
        if (!(z <= 0 && z == std::floor(z))) rg = sign_gamma(z) * std::exp(-log_abs_gamma(z));
        const double pref = std::exp((2.0 * k + nu) * ly - boost::math::lgamma(k + 1.0));
        const double term = pref * (ly * rg + rgamma_deriv(z));
        sum += term;
        if (k > anu + x && std::abs(term) < 1e-17 * std::abs(sum)) return sum;
    }
    throw ConvergenceError("bessel_i_dnu: series did not converge");
}

}  // namespace whittaker
