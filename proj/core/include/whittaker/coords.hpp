#pragma once

#include "whittaker/euler_op.hpp"
#include "whittaker/half_int.hpp"
#include "whittaker/params.hpp"
#include "whittaker/radial.hpp"

namespace whittaker {

struct TCoords {
    double t1 = 0;
    double t2 = 0;
};

// t1 = eta1/a1, t2 = -sign * eta1 eta2 / (2 a2), where sign is the upper
// (+1) or lower (-1) choice of the displays.
TCoords to_t(double a1, double a2, const Character& eta, int sign);
void from_t(const TCoords& t, const Character& eta, int sign, double& a1, double& a2);

// Exponents of n(Q, m'; a) = a1^x a2^y exp(sign * eta2 a1 / (2 a2)).
struct NormalizationExponents {
    HalfInt x, y;
};
NormalizationExponents normalization_exponents(const DistinguishedPattern& dp, const HCParam& L, int sign);
double normalization(const DistinguishedPattern& dp, const HCParam& L, double a1, double a2, const Character& eta, int sign);

// An a-variable Euler operator rewritten in t-variables after conjugation
// by n(Q, m'; a): the result T satisfies (op c)(a) = n(a) (T f)(t) for
// c = n f. Uses theta_{a_i} = -theta_{t_i} and sign*eta2 a1/(2 a2) = -t2/t1.
NumericOp a_op_to_t(const NumericOp& op_in_a, const NormalizationExponents& ne, const Character& eta, int sign);

}  // namespace whittaker
