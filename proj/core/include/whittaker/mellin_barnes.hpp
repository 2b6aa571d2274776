#pragma once

#include <complex>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "whittaker/euler_op.hpp"
#include "whittaker/half_int.hpp"
#include "whittaker/radial.hpp"
#include "whittaker/special.hpp"

namespace whittaker {

enum class Kernel { K, I };
std::string kernel_name(Kernel k);

// Gamma(a + eps*s)^power with eps, power in {+1, -1}.
struct GammaFactor {
    HalfInt a;
    int eps = 1;
    int power = 1;
};

// The integrand of f_j^{K,I}: a gamma-factor ratio times (sigma t2)^s B_{-s}(t1).
struct MBIntegrand {
    int j = 1;
    Kernel kind = Kernel::K;
    int t2_sign = +1;  // sigma
    std::vector<GammaFactor> factors;
    std::vector<HalfInt> pole_starts;  // -alpha_p for the encircled families
    HalfInt crossing;                   // -alpha_j - 1/2
};

MBIntegrand mb_integrand(int j, Kernel kind, const ExponentSystem& es);

// log of the gamma-factor ratio at complex s (any branch; only exp() is used)
cplx log_gamma_ratio(const MBIntegrand& ig, cplx s);

// (sigma t2)^s with the branch (-|t2|)^s = exp(s (log|t2| + i pi)).
cplx signed_power(int sigma, double t2, cplx s);
cplx signed_log(int sigma, double t2);

// coeff * t1^t1_pow * (sigma t2)^s * L^log_power * (d/dnu)^dnu B_nu(t1),
// with nu = -s + order_offset and L = log(sigma t2).
struct MBTerm {
    cplx coeff;
    HalfInt s;
    Kernel kind = Kernel::K;
    int t2_sign = +1;
    int log_power = 0;
    int dnu = 0;
    int t1_pow = 0;
    int order_offset = 0;
    double mag = 0;  // sum of |contributions| merged into coeff, 0 if unmerged

    HalfInt order() const { return -s + order_offset; }
    cplx value(double t1, double t2) const;
};

struct MBSeries {
    std::vector<MBTerm> terms;
    Kernel kind = Kernel::K;
    int t2_sign = +1;
    HalfInt s_min, s_max;  // exponents covered completely by the truncation
    int cutoff = 0;
    double error_bound = 0;  // filled in by evaluate()

    // Sum of all terms; abs_err receives the size of the last exponent
    // level plus a rounding estimate.
    cplx evaluate(double t1, double t2, double* abs_err = nullptr) const;
};

// Residues of the f_j integrand at s = k - alpha_p, k <= cutoff, p >= j.
// Double poles produce log and order-derivative terms. Throws PoleCollision
// for alpha_1 = alpha_2 or a pole of order three or more.
MBSeries residue_series(int j, Kernel kind, const ExponentSystem& es, int cutoff);

// Evaluate f_j with a cutoff that grows until the last level is below tol.
cplx residue_eval(int j, Kernel kind, const ExponentSystem& es, double t1, double t2, double rel_tol = 1e-14, double* abs_err = nullptr);

// The contour integral itself, over the rectangle-shaped loop around
// [-alpha_j - 1/2, infinity). crossing_offset moves the vertical segment
// within (-alpha_j - 1, -alpha_j).
struct ContourOptions {
    double crossing_offset = 0.5;  // c = -alpha_j - crossing_offset
    double leg_height = 0.5;
    double rel_tol = 1e-12;
};
cplx contour_quadrature(int j, Kernel kind, const ExponentSystem& es, double t1, double t2, const ContourOptions& opt = {},
                        double* abs_err = nullptr);

// Displayed leading constant of f_j at t2 = 0 (the same for K and I).
double leading_constant(int j, const ExponentSystem& es);

// Exact symbolic action of an Euler operator on a series.
MBSeries apply_euler_termwise(const NumericOp& op, const MBSeries& series);
MBSeries apply_euler_termwise(const EulerOp& op, const MBSeries& series);

// Termwise reduction: Bessel orders are normalized to -s and -s-1 with the
// three-term recurrences, equal keys are merged, and for each key the ratio
// |sum| / sum|contributions| is reported. Keys with s above s_limit are
// skipped because truncation leaves them incomplete.
struct ReductionReport {
    double max_relative = 0;   // over keys with nonzero contributions
    double max_abs = 0;
    double scale = 0;          // largest contribution magnitude
    std::size_t keys = 0;
};
ReductionReport reduce_and_check(const MBSeries& series, HalfInt s_limit);

// Smallest t2 exponent among the op's terms (0 if none is negative).
int min_t2_shift(const NumericOp& op);
int min_t2_shift(const EulerOp& op);

// The continuous-model function f0 by quadrature over u in (0, infinity).
double f0_quadrature(double alpha1, double alpha2, double t1, double t2, double rel_tol = 1e-13);
// S_3 f0 with S_3 applied under the integral sign.
double s3_f0_quadrature(const ExponentSystem& es, double t1, double t2, double rel_tol = 1e-13);

}  // namespace whittaker
