#include "whittaker/coords.hpp"

#include <cmath>

#include "whittaker/errors.hpp"

namespace whittaker {

TCoords to_t(double a1, double a2, const Character& eta, int sign) {
    check_character(eta);
    if (!(a1 > 0 && a2 > 0)) throw ParameterError("to_t: need a1, a2 > 0");
    return {eta.eta1 / a1, -sign * eta.eta1 * eta.eta2 / (2 * a2)};
}

void from_t(const TCoords& t, const Character& eta, int sign, double& a1, double& a2) {
    check_character(eta);
    if (!(t.t1 > 0) || t.t2 == 0) throw ParameterError("from_t: need t1 > 0 and t2 != 0");
    a1 = eta.eta1 / t.t1;
    a2 = -sign * eta.eta1 * eta.eta2 / (2 * t.t2);
    if (!(a2 > 0)) throw ParameterError("from_t: t2 has the wrong sign for this character");
}

NormalizationExponents normalization_exponents(const DistinguishedPattern& dp, const HCParam& L, int sign) {
    const GTPattern& Q = dp.Q;
    const int n = Q.n, m = dp.m;
    NormalizationExponents ne;
    ne.x = HalfInt(-n + 1) + d_value(dp);
    const BlattnerWeight bw = blattner(L, classify(L));
    HalfInt y(-m + 2);
    for (int p = 1; p <= m - 1; ++p) y -= l_coord(Q, 2 * n - 1, p);
    for (int p = 1; p <= m - 2; ++p) y += l_coord(Q, 2 * n - 2, p);
    y -= (L[n] + bw.lambda_np1) * sign;
    ne.y = y;
    return ne;
}

double normalization(const DistinguishedPattern& dp, const HCParam& L, double a1, double a2, const Character& eta, int sign) {
    check_character(eta);
    if (!(a1 > 0 && a2 > 0)) throw ParameterError("normalization: need a1, a2 > 0");
    const auto ne = normalization_exponents(dp, L, sign);
    return std::exp(ne.x.to_double() * std::log(a1) + ne.y.to_double() * std::log(a2) + sign * eta.eta2 * a1 / (2 * a2));
}

NumericOp a_op_to_t(const NumericOp& op, const NormalizationExponents& ne, const Character& eta, int sign) {
    using C = std::complex<double>;
    // images of theta_{a1}, theta_{a2} after conjugation by n
    const NumericOp ratio = NumericOp::monomial(-1, 1, C(1.0));  // t2/t1
    const NumericOp T1 = NumericOp::constant(C(ne.x.to_double())) - NumericOp::theta1() - ratio;
    const NumericOp T2 = NumericOp::constant(C(ne.y.to_double())) - NumericOp::theta2() + ratio;
    const double c2 = -sign * eta.eta1 * eta.eta2 / 2;  // a2 = c2 / t2
    NumericOp out;
    for (const auto& [k, c] : op.terms()) {
        const C scale = c * std::pow(eta.eta1, k.e1) * std::pow(c2, k.e2);
        out += NumericOp::monomial(-k.e1, -k.e2, scale) * T1.pow(k.p1) * T2.pow(k.p2);
    }
    return out;
}

}  // namespace whittaker
