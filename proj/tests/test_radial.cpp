#include <random>

#include "doctest.h"
#include "whittaker/errors.hpp"
#include "whittaker/params.hpp"
#include "whittaker/radial.hpp"

using namespace whittaker;

namespace {

DistinguishedPattern n3_corner() {
    const HCParam L = parse_hc("7,3,1", "5");
    const auto bw = blattner(L);
    auto lower = default_lower_rows(bw.lambda, 2);
    lower[0][0] = HalfInt(2);
    return corner_pattern(bw.lambda, 2, 2, +1, lower);
}

EulerOp th2_plus(int a) { return EulerOp::theta2() + EulerOp::constant(Rational(a)); }

}  // namespace

TEST_CASE("K-sets, d and exponents of the n=3 corner") {
    const auto dp = n3_corner();
    CHECK(dp.valid());
    CHECK(dp.Q.q(2, 1) == HalfInt(2));
    const auto ks = build_ksets(dp);
    CHECK(ks.K6 == IntSet{1});
    CHECK(ks.K7.empty());
    CHECK(d_value(dp) == HalfInt(-2));

    const HCParam L = parse_hc("7,3,1", "5");
    const auto es = exponents(dp, L);
    CHECK(es.N1 == 2);
    CHECK(es.N2 == 2);
    CHECK(es.alpha == std::vector<HalfInt>{6, 4});
    CHECK(es.beta.empty());
    // alpha_1 = Lambda_n + Lambda_{n+1} on Q_{n-1}^+
    CHECK(es.a(1) == L[3] + L[4]);
    CHECK(ordering_holds(es));
}

TEST_CASE("ordering and gap on every distinguished pattern of (6,2,1)") {
    const HCParam L = parse_hc("7,3,1", "5");
    int n = 0;
    for (const auto& dp : enumerate_distinguished(blattner(L).lambda, 2)) {
        const auto es = exponents(dp, L);
        for (int p = 3; p <= es.N2; ++p) CHECK(es.b(p) - es.a(p) >= HalfInt(2));
        ++n;
    }
    CHECK(n > 0);
}

TEST_CASE("ordering failures are reported as consistency errors") {
    // With the chamber sign opposite to Lambda_n the lemma's bound is not
    // available and some patterns break the chain.
    const HCParam L = parse_hc("7,3,1", "-5");
    const Chamber c = classify(L);
    int failures = 0;
    for (const auto& dp : enumerate_distinguished(blattner(L).lambda, c.m)) {
        const auto loose = exponents(dp, L, SignConvention::UpperIsPlus, false);
        if (!ordering_holds(loose)) {
            ++failures;
            CHECK_THROWS_AS(exponents(dp, L), ConsistencyError);
        }
    }
    CHECK(failures > 0);
}

TEST_CASE("second ODE operator for N2 = 2") {
    const auto es = make_exponent_system(2, {HalfInt(6), HalfInt(4)}, {});
    const auto ode = ode_system(es);
    const EulerOp expect = th2_plus(6) * th2_plus(4) + EulerOp::monomial(-1, 1) * (EulerOp::theta1() - EulerOp::theta2());
    CHECK(ode.second == expect);
    CHECK(ode.first == EulerOp::theta1().pow(2) - EulerOp::theta2().pow(2) - EulerOp::monomial(2, 0));
}

TEST_CASE("S1 with no beta has no quotient part") {
    const auto es = make_exponent_system(2, {HalfInt(6), HalfInt(4)}, {});
    const EulerOp expect = EulerOp::monomial(-1, -1) * (EulerOp::theta1() + EulerOp::theta2()) * th2_plus(6);
    CHECK(s1_op(es) == expect);
}

TEST_CASE("S1 quotient is the exact polynomial") {
    // beta_3 = 5, alpha_{N1} = alpha_2 = 1: bracket (x+5) - (5-1-1) = x + 2 = x + alpha_2 + 1
    const auto es = make_exponent_system(2, {HalfInt(6), HalfInt(1), HalfInt(3)}, {HalfInt(5)});
    const EulerOp expect =
        EulerOp::monomial(-1, -1) * (EulerOp::theta1() + EulerOp::theta2()) * th2_plus(6) * th2_plus(3) + EulerOp::identity();
    CHECK(s1_op(es) == expect);
}

TEST_CASE("S2 factors") {
    // single factor theta2 + Lambda_n - q - n + m'
    const EulerOp one = s2_op(HalfInt(2), HalfInt(2), +1, HalfInt(1), 3, 2);
    CHECK(one == th2_plus(1 - 2 - 3 + 2));
    const EulerOp minus = s2_op(HalfInt(2), HalfInt(2), -1, HalfInt(1), 3, 2);
    CHECK(minus == th2_plus(-1 - 2 - 3 + 2));
    CHECK(s2_op(HalfInt(3), HalfInt(2), +1, HalfInt(1), 3, 2) == EulerOp::identity());
    CHECK(s2_op(HalfInt(0), HalfInt(2), +1, HalfInt(1), 3, 2).theta2_degree() == 3);
}

TEST_CASE("S3") {
    CHECK(s3_op(make_exponent_system(2, {HalfInt(6), HalfInt(4)}, {})) == EulerOp::identity());
    const auto es = make_exponent_system(2, {HalfInt(6), HalfInt(4), HalfInt(1)}, {HalfInt(3)});
    CHECK(s3_op(es) == EulerOp::constant(Rational(-1)) * th2_plus(2));
}

TEST_CASE("summation identities") {
    const Rational x1(3, 7), y1(-2, 5), z(11, 3);
    CHECK(check_summation_identity(2, 1, {x1}, {y1}, z) == 0);

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> num(-40, 40), den(1, 9);
    auto draw = [&] { return Rational(num(rng), den(rng)); };
    for (int which : {1, 2})
        for (int k = 1; k <= 5; ++k)
            for (int s = 0; s < 10; ++s) {
                std::vector<Rational> x, y;
                for (int i = 0; i < k; ++i) {
                    x.push_back(draw());
                    y.push_back(draw());
                }
                Rational res;
                try {
                    res = check_summation_identity(which, k, x, y, draw());
                } catch (const ParameterError&) {
                    continue;  // a vanishing denominator
                }
                CHECK(res == 0);
            }
}

TEST_CASE("Euler operator algebra") {
    // theta2 t2 = t2 (theta2 + 1)
    CHECK(EulerOp::theta2() * EulerOp::monomial(0, 1) == EulerOp::monomial(0, 1) * th2_plus(1));
    UPoly p = UPoly::linear(Rational(2)) * UPoly::linear(Rational(3));
    CHECK(p.divide_by_root(Rational(-2)).c == UPoly::linear(Rational(3)).c);
    CHECK_THROWS_AS(p.divide_by_root(Rational(1)), ConsistencyError);
}

TEST_CASE("m' out of range throws") {
    const auto dp = n3_corner();
    CHECK_THROWS_AS(make_distinguished(dp.Q, 2, 5), ParameterError);
}
