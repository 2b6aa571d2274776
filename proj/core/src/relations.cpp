#include "whittaker/relations.hpp"

#include <cmath>
#include <set>

#include "whittaker/errors.hpp"
#include "whittaker/gt_action.hpp"

namespace whittaker {

namespace {

using C = std::complex<double>;
const C I1(0.0, 1.0);

// tau_{i,j} without the validity check, for coefficient formulas that are
// evaluated on shifted patterns regardless of validity.
GTPattern raw_tau(const GTPattern& Q, int i, int j) {
    GTPattern P = Q;
    const int n = Q.n;
    if (j != 0) P.q(2 * n - 2, std::abs(j)) += (j > 0 ? 1 : -1);
    if (i != 0) P.q(2 * n - 3, std::abs(i)) += (i > 0 ? 1 : -1);
    return P;
}

bool valid_tau(const GTPattern& Q, int i, int j) { return tau(Q, i, j).has_value(); }

double L2(const GTPattern& P, int j) { return l_coord(P, 2 * P.n - 2, j).to_double(); }
double L3(const GTPattern& P, int i) { return l_coord(P, 2 * P.n - 3, i).to_double(); }
double L1(const GTPattern& P, int p) { return l_coord(P, 2 * P.n - 1, p).to_double(); }
C acoef(const GTPattern& P, int row, int j) { return a_coeff(P, row, j).value; }

double nonzero(double d, const char* what) {
    if (d == 0) throw ParameterError(std::string("relation: vanishing denominator in ") + what);
    return d;
}

NumericOp cst(C c) { return NumericOp::constant(c); }

// [-n+1, -m+1] u [0, n-1]
std::vector<int> side_set(int n, int m) {
    std::vector<int> v;
    for (int p = -n + 1; p <= -m + 1; ++p) v.push_back(p);
    for (int p = 0; p <= n - 1; ++p) v.push_back(p);
    return v;
}

// [-n, -1] u [m, n]
std::vector<int> top_set(int n, int m) {
    std::vector<int> v;
    for (int p = -n; p <= -1; ++p) v.push_back(p);
    for (int p = m; p <= n; ++p) v.push_back(p);
    return v;
}

C B_coeff(int jp, int j, const GTPattern& P, int m) {
    const int n = P.n;
    C num = acoef(raw_tau(P, 0, jp), 2 * n - 2, -jp);
    for (int p : side_set(n, m))
        if (p != j) num *= L2(P, jp) - L2(P, p);
    double den = 1;
    for (int p : top_set(n, m)) den *= L2(P, jp) + L1(P, p);
    return num / nonzero(den, "B_{j'}(j,Q)");
}

C A_coeff(int j, const GTPattern& Q, int m) {
    const int n = Q.n;
    C num = acoef(raw_tau(Q, 0, j), 2 * n - 2, -j);
    for (int p = 1; p <= m - 2; ++p) num *= L2(Q, j) - L2(Q, p);
    double den = 1;
    for (int p = 1; p <= m - 1; ++p) den *= L2(Q, j) + L1(Q, -p);
    return num / nonzero(den, "A_j(Q)");
}

void push(std::vector<RelationTerm>& out, const GTPattern& P, const NumericOp& op) {
    if (!op.is_zero()) out.push_back({P, op});
}

// V_j^{sigma}(Q) as terms, each multiplied on the left by `pre`.
void push_V(std::vector<RelationTerm>& out, const RelationContext& ctx, int j, int sigma, const NumericOp& pre) {
    const GTPattern& Q = ctx.dp.Q;
    const int n = Q.n;
    if (auto P = tau(Q, 0, j)) push(out, *P, pre * (op_D1(ctx, sigma) + cst(L2(Q, j))));
    const NumericOp eta_over_a1 = NumericOp::monomial(-1, 0, C(ctx.eta.eta1));
    for (int i = -(n - 1); i <= n - 1; ++i) {
        if (i == 0) continue;
        auto P = tau(Q, i, j);
        if (!P) continue;
        const C c = I1 * acoef(*P, 2 * n - 3, -i) / nonzero(L3(Q, i) - L2(Q, j), "V_j");
        push(out, *P, pre * eta_over_a1 * c);
    }
}

// polynomial in D2 by Horner's rule
NumericOp poly_at(const UPoly& p, const NumericOp& X) {
    NumericOp r;
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) r = r * X + cst(C(it->convert_to<double>()));
    return r;
}

std::vector<int> J_list(const KSets& ks) { return {ks.J.begin(), ks.J.end()}; }

}  // namespace

std::string relation_name(Relation r) {
    switch (r) {
        case Relation::R5_14_1: return "5.14(1)";
        case Relation::R5_15_1: return "5.15(1)";
        case Relation::R5_15_2: return "5.15(2)";
        case Relation::R5_19_1: return "5.19(1)";
        case Relation::R5_22: return "5.22";
        case Relation::R5_9_2: return "5.9(2)";
        case Relation::R5_10_2: return "5.10(2)";
        case Relation::R5_10_3: return "5.10(3)";
    }
    return "?";
}

Relation parse_relation(const std::string& s) {
    for (Relation r : {Relation::R5_14_1, Relation::R5_15_1, Relation::R5_15_2, Relation::R5_19_1, Relation::R5_22, Relation::R5_9_2,
                       Relation::R5_10_2, Relation::R5_10_3})
        if (relation_name(r) == s) return r;
    throw ParameterError("unknown relation " + s);
}

NumericOp op_E(const Character& eta) { return NumericOp::monomial(1, -1, C(eta.eta2 / 2)); }

NumericOp op_D1(const RelationContext& ctx, int sigma) {
    return NumericOp::theta1() + cst(C(ctx.dp.n() - 1.0)) + op_E(ctx.eta) * C(static_cast<double>(sigma));
}

NumericOp op_D2(const RelationContext& ctx) {
    const GTPattern& Q = ctx.dp.Q;
    const int m = ctx.dp.m;
    double c = m - 2;
    for (int p = 1; p <= m - 1; ++p) c += L1(Q, p);
    for (int p = 1; p <= m - 2; ++p) c -= L2(Q, p);
    c += ctx.sign * blattner(ctx.L, classify(ctx.L)).lambda_np1.to_double();
    return NumericOp::theta2() + cst(C(c)) + op_E(ctx.eta) * C(static_cast<double>(ctx.sign));
}

std::vector<RelationTerm> relation_terms(Relation r, const RelationContext& ctx) {
    const GTPattern& Q = ctx.dp.Q;
    const int n = Q.n, m = ctx.dp.m, mp = ctx.dp.m_prime, s = ctx.sign;
    const KSets ks = build_ksets(ctx.dp);
    const double d = d_value(ctx.dp).to_double();
    const double Lnp1 = ctx.L[n + 1].to_double();
    const double l1n = L1(Q, n);
    const NumericOp E = op_E(ctx.eta), D2 = op_D2(ctx);
    const NumericOp eta_over_a1 = NumericOp::monomial(-1, 0, C(ctx.eta.eta1));
    const NumericOp a1_over_eta = NumericOp::monomial(1, 0, C(1.0 / ctx.eta.eta1));
    const auto J = J_list(ks);
    std::vector<RelationTerm> out;
    const int j = ctx.index;

    switch (r) {
        case Relation::R5_9_2: {
            if (j < 1 || j > m - 1 || !valid_tau(Q, 0, j)) throw ParameterError("5.9(2): need j in [1,m-1] with tau_{0,j}Q valid");
            push(out, Q, D2 + cst(C(-L2(Q, m - 1) + L2(Q, j) - s * Lnp1)) - E * C(static_cast<double>(s)));
            std::set<int> js{j};
            for (int p = m; p <= n - 1; ++p) js.insert(p);
            for (int p = -n + 1; p <= 0; ++p) js.insert(p);
            for (int jp : js) {
                auto P = tau(Q, 0, jp);
                if (!P) continue;
                C c = acoef(*P, 2 * n - 2, -jp);
                for (int p = 1; p <= m - 1; ++p)
                    if (p != j) c *= L2(Q, jp) - L2(Q, p);
                double den = 1;
                for (int p = 1; p <= m - 1; ++p) den *= L2(Q, jp) + L1(Q, -p);
                push(out, *P, E * (I1 * c / nonzero(den, "5.9(2)")));
            }
            break;
        }
        case Relation::R5_10_2:
        case Relation::R5_10_3: {
            const int jj = r == Relation::R5_10_3 ? 0 : j;
            const bool in_range = (jj >= -n + 1 && jj <= -m + 1) || (jj >= 0 && jj <= n - 1);
            bool some = false;
            for (int i = -(n - 1); i <= n - 1; ++i) some = some || valid_tau(Q, i, jj);
            if (!in_range || !some) throw ParameterError("5.10(2): need j in [-n+1,-m+1] u [0,n-1] and a valid tau_{i,j}Q");
            push(out, Q, D2 + cst(C(L2(Q, jj))));
            std::set<int> js;
            if (r == Relation::R5_10_2) js.insert(jj);
            for (int p = -m + 2; p <= -1; ++p) js.insert(p);
            for (int jp : js) push_V(out, ctx, jp, -s, cst(C(-s) * I1 * B_coeff(jp, jj, Q, m)));
            if (r == Relation::R5_10_3) {
                double num = 1, den = 1;
                for (int p = 1; p <= n - 1; ++p) num *= L3(Q, p);
                for (int p = m; p <= n; ++p) den *= L1(Q, p);
                for (int p = 1; p <= m - 2; ++p) den *= -L2(Q, -p);
                const C R = -s * num / nonzero(den, "5.10(3)");
                push(out, Q, op_D1(ctx, -s) * R);
                for (int i = -(n - 1); i <= n - 1; ++i) {
                    if (i == 0) continue;
                    auto P = tau(Q, i, 0);
                    if (!P) continue;
                    push(out, *P, eta_over_a1 * (R * I1 * acoef(*P, 2 * n - 3, -i) / nonzero(L3(Q, i), "5.10(3)")));
                }
            }
            break;
        }
        case Relation::R5_14_1: {
            auto P = tau(Q, -mp, 0);
            if (!P) throw ParameterError("5.14(1): tau_{-m',0}Q is not valid");
            C c = -I1 * acoef(*P, 2 * n - 3, mp);
            for (int p : J) c *= L3(Q, -mp) - L3(Q, p);
            double den = L3(Q, -mp);  // p = 0 factor: l_{2n-3,-m'} + l_{2n-2,0}
            for (int p : J) den *= L3(Q, -mp) + L2(Q, -p);
            push(out, *P, eta_over_a1 * (c / nonzero(den, "5.14(1)")));
            const NumericOp rhs = D2 * C(s * l1n / nonzero(L2(Q, -mp), "5.14(1)")) + op_D1(ctx, -s) + cst(C(-d + L2(Q, -mp)));
            push(out, Q, rhs * C(-1.0));
            break;
        }
        case Relation::R5_15_1:
        case Relation::R5_15_2: {
            const HalfInt lam_next = mp + 1 == n ? abs(Q.top()[static_cast<std::size_t>(n - 1)]) : Q.top()[static_cast<std::size_t>(mp)];
            if (!(Q.q(2 * n - 2, mp) == Q.q(2 * n - 3, mp) && Q.q(2 * n - 2, mp) > lam_next))
                throw ParameterError("5.15: need q_{2n-2,m'} = q_{2n-3,m'} > lambda_{m'+1}");
            const GTPattern P1 = raw_tau(Q, -mp, -mp), P0 = raw_tau(Q, -mp, 0);
            const double lm = L2(Q, -mp);
            if (r == Relation::R5_15_1) {
                C c = C(-s) * I1 / B_coeff(mp, mp, P1, m) * (2 * lm + 1);
                for (int p : J) c *= lm + L3(Q, p);
                double den = lm;  // p = 0
                for (int p : J) den *= lm - L2(Q, -p);
                if (is_valid(P1)) push(out, P1, (D2 - cst(C(lm))) * (c / nonzero(den, "5.15(1)")));
                const NumericOp rhs0 = D2 * C(-s * l1n / nonzero(lm, "5.15(1)")) + op_D1(ctx, -s) + cst(C(-d - lm - 1));
                if (is_valid(P0)) push(out, P0, rhs0 * C(-1.0));
                const double l3 = L3(Q, mp);
                C cq = I1 * acoef(Q, 2 * n - 3, -mp) * (2 * l3 - 2);
                for (int p : J) cq *= l3 - L3(Q, p) - 1;
                double dq = (l3 - 1) * (l3 + L2(Q, -mp) - 1);  // p = 0 and p = m'
                for (int p : J) dq *= l3 + L2(Q, -p) - 1;
                push(out, Q, eta_over_a1 * (-cq / nonzero(dq, "5.15(1)")));
            } else {
                C c = C(-s) * (L3(Q, -mp) - lm + 1) / (acoef(P1, 2 * n - 2, mp) * acoef(P0, 2 * n - 3, mp));
                for (int p : top_set(n, m)) c *= lm + L1(Q, p);
                double den = 1;
                for (int p : side_set(n, m))
                    if (p != -mp) den *= lm - L2(Q, p);
                if (is_valid(P1)) push(out, P1, cst(C(1.0)));
                push(out, Q, a1_over_eta * (D2 + cst(C(lm))) * (-c / nonzero(den, "5.15(2)")));
            }
            break;
        }
        case Relation::R5_19_1: {
            if (!ks.K6.count(j)) throw ParameterError("5.19(1): need k in K_6(m')");
            const GTPattern P = *tau(Q, 0, j);
            const double lk = L2(Q, j);
            C c = C(-s) * I1 / B_coeff(-j, -j, P, m);
            for (int p : J) c *= lk + L3(Q, p);
            c *= lk + L3(Q, -mp);
            double den = lk;  // p = 0
            for (int p : J) den *= lk - L2(Q, -p);
            push(out, P, (D2 - cst(C(lk))) * (c / nonzero(den, "5.19(1)")));
            const NumericOp rhs = D2 * C(-s * l1n / nonzero(lk, "5.19(1)")) + op_D1(ctx, -s) + cst(C(-d - lk));
            push(out, Q, rhs * C(-1.0));
            break;
        }
        case Relation::R5_22: {
            if (!ks.K6.count(j)) throw ParameterError("5.22: need j in K_6(m')");
            const GTPattern P = *tau(Q, 0, j);
            const double lj = L2(Q, j);
            C c = -I1 * A_coeff(j, Q, m);
            for (int p : ks.K6)
                if (p != j) c *= lj - L2(Q, p);
            push(out, P, E * c);
            NumericOp rhs = D2 - cst(C(s * Lnp1));
            for (int p : ks.K6)
                if (p != j) rhs = (D2 - cst(C(L2(Q, p) - 1))) * rhs;
            // quotient (P7(x) - P7(l_j)) / (x - l_j), with P7(x) = prod_{K7} (x - l_{2n-3,p})
            UPoly P7 = UPoly::constant(1);
            for (int p : ks.K7) P7 = P7 * UPoly::linear(-l_coord(Q, 2 * n - 3, p).to_rational());
            const Rational lj_r = l_coord(Q, 2 * n - 2, j).to_rational();
            const Rational P7lj = P7.eval(lj_r);
            const UPoly quot = (P7 - UPoly::constant(P7lj)).divide_by_root(lj_r);
            const NumericOp inner = poly_at(quot, D2) * (op_D1(ctx, -s) - cst(C(d)) - D2 - cst(C(s * l1n)));
            const C constant = (lj - s * l1n) / nonzero(lj, "5.22") * P7lj.convert_to<double>();
            rhs += E * C(static_cast<double>(s)) * (inner - cst(constant));
            push(out, Q, rhs * C(-1.0));
            break;
        }
    }
    return out;
}

CoeffEvaluator jet_evaluator(const std::map<GTPattern, Jet>& jets, double a1, double a2) {
    return [&jets, a1, a2](const GTPattern& P, const NumericOp& op) -> cplx {
        auto it = jets.find(P);
        if (it == jets.end()) throw ParameterError("relation: missing value for pattern " + P.str());
        cplx acc = 0;
        for (const auto& [k, c] : op.terms()) {
            auto jt = it->second.find({k.p1, k.p2});
            if (jt == it->second.end())
                throw ParameterError("relation: missing derivative (" + std::to_string(k.p1) + "," + std::to_string(k.p2) + ") for " + P.str());
            acc += c * std::pow(a1, k.e1) * std::pow(a2, k.e2) * jt->second;
        }
        return acc;
    };
}

RelationResidual relation_residual(Relation r, const RelationContext& ctx, const CoeffEvaluator& eval) {
    RelationResidual res;
    for (const auto& t : relation_terms(r, ctx)) {
        const cplx v = eval(t.pattern, t.op);
        res.residual += v;
        res.scale += std::abs(v);
    }
    return res;
}

}  // namespace whittaker
