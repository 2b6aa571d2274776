#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "whittaker/euler_op.hpp"
#include "whittaker/gt_pattern.hpp"
#include "whittaker/half_int.hpp"
#include "whittaker/params.hpp"

namespace whittaker {

using IntSet = std::set<int>;

// A pattern Q with the level m' at which it is a corner candidate.
struct DistinguishedPattern {
    GTPattern Q;
    int m = 0;        // chamber index of the parameter
    int m_prime = 0;  // in [m-1, n-1]
    bool cond_5_13_1 = false;  // upper rows agree for p <= m-2
    bool cond_5_11 = false;    // the q_{2n-4} window
    bool cond_5_13_4 = false;  // the shape of rows 2n-3, 2n-2 around m'

    int n() const { return Q.n; }
    bool valid() const { return cond_5_13_1 && cond_5_11 && cond_5_13_4; }
    std::string str() const;
};

// Evaluates the three conditions. Throws ParameterError for m' out of range.
DistinguishedPattern make_distinguished(const GTPattern& Q, int m, int m_prime);

// Every pattern of GT(lambda) that is distinguished at some level m'.
std::vector<DistinguishedPattern> enumerate_distinguished(const Weight& lambda, int m);

// Rows q_1 .. q_{2n-4} with the q_{2n-4} window filled by its upper ends and
// each lower row by its upper interlacing bounds.
std::vector<Row> default_lower_rows(const Weight& lambda, int m);

// Corner patterns Q_{m'}^{+-} above the given rows q_1 .. q_{2n-4}.
// Throws ParameterError when the result is not a valid distinguished pattern.
DistinguishedPattern corner_pattern(const Weight& lambda, int m, int m_prime, int pm, const std::vector<Row>& lower);
// Same shape with an explicit common value q_{2n-2,m'} = q_{2n-3,m'}.
DistinguishedPattern corner_pattern_with_value(const Weight& lambda, int m, int m_prime, HalfInt v, const std::vector<Row>& lower);

struct KSets {
    IntSet K1, K2, K3, K4, K5, K6, K7, J, I1, I2;
    std::string to_json() const;
};

KSets build_ksets(const DistinguishedPattern& dp);
HalfInt d_value(const DistinguishedPattern& dp);

// Which chamber the upper sign of the +- displays refers to.
enum class SignConvention { UpperIsPlus, UpperIsMinus };

struct ExponentSystem {
    int N1 = 2, N2 = 2;
    std::vector<HalfInt> alpha;  // alpha_1 .. alpha_{N2}
    std::vector<HalfInt> beta;   // beta_3 .. beta_{N2}
    HalfInt d;
    int sign = +1;  // the effective upper/lower sign used for the displays
    KSets ks;

    HalfInt a(int p) const { return alpha[static_cast<std::size_t>(p - 1)]; }
    HalfInt b(int p) const { return beta[static_cast<std::size_t>(p - 3)]; }
    std::string to_json() const;
};

// Build an exponent system from bare numbers (tests and oracles).
ExponentSystem make_exponent_system(int N1, const std::vector<HalfInt>& alpha, const std::vector<HalfInt>& beta, int sign = +1);

// The interleaving chain and the gap condition beta_p - alpha_p >= 2.
// On failure, *why names the first violated inequality.
bool ordering_holds(const ExponentSystem& es, std::string* why = nullptr);

// Throws ConsistencyError when enforce_ordering is set and the chain fails.
ExponentSystem exponents(const DistinguishedPattern& dp, const HCParam& L, SignConvention conv = SignConvention::UpperIsPlus,
                         bool enforce_ordering = true);

struct OdeSystem {
    EulerOp first;   // theta1^2 - theta2^2 - t1^2
    EulerOp second;  // prod(theta2+alpha) + (t2/t1)(theta1-theta2) prod(theta2+beta)
};
OdeSystem ode_system(const ExponentSystem& es);

// S_1(m', Q). Throws ConsistencyError if the bracket is not divisible.
EulerOp s1_op(const ExponentSystem& es);
// prod_{q=lo}^{hi} (theta2 + sign*Lambda_n - q - n + m'); identity for empty range.
EulerOp s2_op(HalfInt lo, HalfInt hi, int sign, HalfInt Lambda_n, int n, int m_prime);
// S_2 for the step Q_{m'}^+ -> Q_{m'-1}^-.
EulerOp s2_op(const DistinguishedPattern& dp, const HCParam& L, int sign);
EulerOp s3_op(const ExponentSystem& es);

// LHS - RHS of the two summation identities, exactly. Rejects zero
// denominators with ParameterError.
Rational check_summation_identity(int which, int k, const std::vector<Rational>& x, const std::vector<Rational>& y, const Rational& z);

}  // namespace whittaker
