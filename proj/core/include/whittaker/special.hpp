#pragma once

#include <complex>

namespace whittaker {

using cplx = std::complex<double>;

// Principal-branch log Gamma for Re z > 0; for Re z <= 0 the reflection
// formula is used, which agrees with the principal branch up to 2*pi*i.
// Throws GammaPole at non-positive integers.
cplx log_gamma(cplx z);
cplx gamma_c(cplx z);
// 1/Gamma(z), entire; exactly 0 at non-positive integers.
cplx rgamma(cplx z);

// Real helpers. sign_gamma is the sign of Gamma(x) for non-pole x.
double log_abs_gamma(double x);
int sign_gamma(double x);
double digamma(double x);
// d/dx (1/Gamma(x)), including the poles where it equals (-1)^N N!.
double rgamma_deriv(double x);

// Modified Bessel functions of complex order and real argument x > 0.
cplx bessel_k(cplx nu, double x);
// e^x K_nu(x)
cplx bessel_k_scaled(cplx nu, double x);
cplx bessel_i(cplx nu, double x);

// Real order versions and their derivatives with respect to the order.
double bessel_k_real(double nu, double x);
double bessel_i_real(double nu, double x);
double bessel_k_dnu(double nu, double x);
double bessel_i_dnu(double nu, double x);

}  // namespace whittaker
