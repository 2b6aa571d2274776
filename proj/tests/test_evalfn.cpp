#include <cmath>
#include <numbers>

#include "doctest.h"
#include "whittaker/coords.hpp"
#include "whittaker/errors.hpp"
#include "whittaker/mellin_barnes.hpp"
#include "whittaker/params.hpp"
#include "whittaker/radial.hpp"
#include "whittaker/special.hpp"

using namespace whittaker;
using std::numbers::pi;

TEST_CASE("log gamma") {
    CHECK(std::abs(log_gamma(cplx(1.0))) < 1e-15);
    CHECK(std::abs(gamma_c(cplx(0.5)) - std::sqrt(pi)) < 1e-14 * std::sqrt(pi));
    // |Gamma(1/2 + iy)|^2 = pi / cosh(pi y), then the recurrence up to 5.5+2i
    const cplx z0(0.5, 2.0);
    CHECK(std::abs(std::exp(2 * log_gamma(z0).real()) - pi / std::cosh(2 * pi)) < 1e-14);
    cplx lg = log_gamma(z0);
    for (int k = 0; k < 5; ++k) lg += std::log(z0 + double(k));
    const cplx d = log_gamma(cplx(5.5, 2.0)) - lg;
    CHECK(std::abs(d.real()) < 1e-12);
    CHECK(std::abs(std::remainder(d.imag(), 2 * pi)) < 1e-12);
    CHECK_THROWS_AS(log_gamma(cplx(-2.0)), GammaPole);
    CHECK(rgamma(cplx(-3.0)) == cplx(0.0));
}

TEST_CASE("Bessel K closed form and symmetry") {
    for (double x : {0.01, 0.5, 2.0, 20.0}) {
        const double ex = std::sqrt(pi / (2 * x)) * std::exp(-x);
        CHECK(std::abs(bessel_k(cplx(0.5), x) - ex) <= 1e-11 * ex);
    }
    const cplx nu(1.3, 0.7);
    CHECK(std::abs(bessel_k(nu, 1.7) - bessel_k(-nu, 1.7)) <= 1e-11 * std::abs(bessel_k(nu, 1.7)));
    CHECK(std::abs(bessel_k_scaled(cplx(2.0), 40.0) - std::exp(40.0) * bessel_k(cplx(2.0), 40.0)) <=
          1e-10 * std::abs(bessel_k_scaled(cplx(2.0), 40.0)));
}

TEST_CASE("Wronskian") {
    const cplx nu(0.3);
    const double x = 2.0;
    const cplx I = bessel_i(nu, x), K = bessel_k(nu, x);
    const cplx dI = 0.5 * (bessel_i(nu - 1.0, x) + bessel_i(nu + 1.0, x));
    const cplx dK = -0.5 * (bessel_k(nu - 1.0, x) + bessel_k(nu + 1.0, x));
    CHECK(std::abs(I * dK - dI * K + 1.0 / x) < 1e-11);
}

TEST_CASE("Bessel I recurrence, small argument and the K relation") {
    for (cplx nu : {cplx(0.4), cplx(2.5, 1.0), cplx(-3.3)}) {
        const double x = 3.0;
        const cplx lhs = bessel_i(nu - 1.0, x) - bessel_i(nu + 1.0, x);
        CHECK(std::abs(lhs - 2.0 * nu / x * bessel_i(nu, x)) <= 1e-10 * std::max(1.0, std::abs(lhs)));
        const cplx k = pi * (bessel_i(-nu, x) - bessel_i(nu, x)) / (2.0 * std::sin(nu * pi));
        CHECK(std::abs(k - bessel_k(nu, x)) <= 1e-10 * std::abs(k));
    }
    CHECK(std::abs(bessel_i(cplx(0.0), 1e-12) - 1.0) < 1e-12);
    CHECK(std::abs(bessel_i(cplx(-2.0), 1.5) - bessel_i(cplx(2.0), 1.5)) < 1e-13);
}

TEST_CASE("t-coordinates") {
    const Character eta{1.0, -2.0};
    const auto t = to_t(1.0, 1.0, eta, +1);
    CHECK(t.t1 == doctest::Approx(1.0));
    CHECK(t.t2 == doctest::Approx(1.0));
    for (double a1 : {0.3, 2.0})
        for (double a2 : {0.7, 5.0})
            for (int sign : {+1, -1}) {
                const auto tt = to_t(a1, a2, eta, sign);
                CHECK(tt.t1 > 0);
                double b1 = 0, b2 = 0;
                from_t(tt, eta, sign, b1, b2);
                CHECK(b1 == doctest::Approx(a1).epsilon(1e-14));
                CHECK(b2 == doctest::Approx(a2).epsilon(1e-14));
            }
}

TEST_CASE("normalization") {
    const HCParam L = parse_hc("7,3,1", "5");
    const auto bw = blattner(L);
    auto lower = default_lower_rows(bw.lambda, 2);
    lower[0][0] = HalfInt(2);
    const auto dp = corner_pattern(bw.lambda, 2, 2, +1, lower);
    const auto ne = normalization_exponents(dp, L, +1);
    CHECK(ne.x == HalfInt(-3 + 1) + d_value(dp));
    for (double a1 : {0.2, 1.0, 3.0})
        for (double a2 : {0.5, 4.0}) CHECK(normalization(dp, L, a1, a2, Character{1.0, -1.0}, +1) > 0);
}

TEST_CASE("residue series against contour quadrature") {
    const auto es = make_exponent_system(2, {HalfInt(6), HalfInt(4)}, {});
    for (int j : {1, 2})
        for (Kernel k : {Kernel::K, Kernel::I}) {
            const cplx a = residue_eval(j, k, es, 1.0, 0.5);
            const cplx b = contour_quadrature(j, k, es, 1.0, 0.5);
            CHECK(std::abs(a - b) <= 1e-8 * std::abs(b));
        }
}

TEST_CASE("double pole at alpha_1 = alpha_2 is refused") {
    const auto es = make_exponent_system(2, {HalfInt(3), HalfInt(3)}, {});
    CHECK_THROWS_AS(residue_series(1, Kernel::K, es, 10), PoleCollision);
    const cplx v = contour_quadrature(1, Kernel::K, es, 1.0, 0.5);
    CHECK(std::isfinite(v.real()));
}

TEST_CASE("leading term of the first residue series") {
    const auto es = make_exponent_system(2, {HalfInt(6), HalfInt(4)}, {});
    const auto s = residue_series(1, Kernel::K, es, 5);
    // f_1 encircles both pole families; the first pole is at s = -alpha_1
    HalfInt smin = s.terms.front().s;
    for (const auto& t : s.terms) smin = std::min(smin, t.s);
    CHECK(smin == HalfInt(-6));
    const auto s2 = residue_series(2, Kernel::K, es, 5);
    smin = s2.terms.front().s;
    for (const auto& t : s2.terms) smin = std::min(smin, t.s);
    CHECK(smin == HalfInt(-4));
}

TEST_CASE("theta2 multiplies a single term by s") {
    MBSeries one;
    MBTerm t;
    t.coeff = 1.0;
    t.s = HalfInt::from_doubled(3);
    one.terms.push_back(t);
    one.s_min = one.s_max = t.s;
    const auto out = apply_euler_termwise(EulerOp::theta2(), one);
    CHECK(std::abs(out.evaluate(1.3, 0.4) - 1.5 * one.evaluate(1.3, 0.4)) < 1e-14);
}

TEST_CASE("Bessel operator annihilates t2^s K_{-s}(t1)") {
    MBSeries one;
    MBTerm t;
    t.coeff = 1.0;
    t.s = HalfInt::from_doubled(3);
    one.terms.push_back(t);
    one.s_min = one.s_max = t.s;
    const auto ode = ode_system(make_exponent_system(2, {HalfInt(6), HalfInt(4)}, {}));
    const auto rep = reduce_and_check(apply_euler_termwise(ode.first, one), t.s + HalfInt(10));
    CHECK(rep.max_relative < 1e-12);
}

TEST_CASE("both ODE operators annihilate the residue series") {
    const auto es = make_exponent_system(2, {HalfInt(6), HalfInt(4)}, {});
    const auto ode = ode_system(es);
    for (int j : {1, 2})
        for (Kernel k : {Kernel::K, Kernel::I}) {
            const auto f = residue_series(j, k, es, 30);
            CHECK(reduce_and_check(apply_euler_termwise(ode.first, f), f.s_max).max_relative <= 1e-10);
            CHECK(reduce_and_check(apply_euler_termwise(ode.second, f), f.s_max).max_relative <= 1e-10);
        }
}

TEST_CASE("f0 equals the two-gamma series") {
    const HalfInt a1 = HalfInt::parse("13/2"), a2 = HalfInt::parse("9/2");
    const auto es = make_exponent_system(2, {a1, a2}, {});
    const double f = f0_quadrature(a1.to_double(), a2.to_double(), 1.5, 0.8);
    const cplx s = residue_eval(1, Kernel::K, es, 1.5, 0.8);
    CHECK(std::abs(f - s) <= 1e-8 * std::abs(s));
}
