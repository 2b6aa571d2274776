#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "whittaker/euler_op.hpp"
#include "whittaker/gt_action.hpp"
#include "whittaker/gt_pattern.hpp"
#include "whittaker/params.hpp"
#include "whittaker/radial.hpp"

namespace whittaker {

enum class Relation { R5_14_1, R5_15_1, R5_15_2, R5_19_1, R5_22, R5_9_2, R5_10_2, R5_10_3 };
std::string relation_name(Relation r);
Relation parse_relation(const std::string& s);

// Everything a relation needs besides the coefficient functions. `index` is
// the j (or k) of the relation where it has one.
struct RelationContext {
    DistinguishedPattern dp;
    HCParam L;
    Character eta;
    int sign = +1;
    int index = 0;
};

// The relation as sum_i (op_i c(P_i)) = 0, with op_i an Euler operator in
// the a-variables (t1 -> a1, t2 -> a2, theta_i = a_i d/da_i).
struct RelationTerm {
    GTPattern pattern;
    NumericOp op;
};
// Throws ParameterError when the relation's hypothesis fails for the context.
std::vector<RelationTerm> relation_terms(Relation r, const RelationContext& ctx);

// Evaluates (op c_P)(a) at the chosen point.
using CoeffEvaluator = std::function<cplx(const GTPattern&, const NumericOp&)>;

// Jets: values of theta_1^k1 theta_2^k2 c_P at a point (a1, a2).
using Jet = std::map<std::pair<int, int>, cplx>;
CoeffEvaluator jet_evaluator(const std::map<GTPattern, Jet>& jets, double a1, double a2);

struct RelationResidual {
    cplx residual;
    double scale = 0;  // sum of |op_i c(P_i)|
};
RelationResidual relation_residual(Relation r, const RelationContext& ctx, const CoeffEvaluator& eval);

// The a-variable operators appearing in the displays.
NumericOp op_E(const Character& eta);                    // eta2 a1 / (2 a2)
NumericOp op_D1(const RelationContext& ctx, int sigma);  // D_1^{sigma}(Q)
NumericOp op_D2(const RelationContext& ctx);             // D_2^{+-}(Q), chamber sign

}  // namespace whittaker
