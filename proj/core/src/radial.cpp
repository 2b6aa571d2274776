#include "whittaker/radial.hpp"

#include <sstream>

#include "json.hpp"
#include "whittaker/errors.hpp"

namespace whittaker {

namespace {

// lambda_i, with |lambda_n| in place of lambda_n when it serves as a lower bound
struct Top {
    const Weight& lam;
    int n;
    HalfInt operator()(int i) const { return lam[static_cast<std::size_t>(i - 1)]; }
    HalfInt low(int i) const { return i == n ? abs((*this)(i)) : (*this)(i); }
};

bool in(HalfInt x, HalfInt lo, HalfInt hi) { return lo <= x && x <= hi; }

nlohmann::json set_json(const IntSet& s) { return nlohmann::json(std::vector<int>(s.begin(), s.end())); }

nlohmann::json half_json(HalfInt h) {
    if (h.is_integer()) return h.as_int();
    return h.str();
}

// Conditions evaluated on a pattern that is already known to be valid.
void evaluate_conditions(DistinguishedPattern& dp) {
    const GTPattern& Q = dp.Q;
    const int n = Q.n, m = dp.m, mp = dp.m_prime;
    const Top L{Q.top(), n};
    auto q = [&](int r, int j) { return Q.q(r, j); };
    const int r2 = 2 * n - 2, r3 = 2 * n - 3, r4 = 2 * n - 4;

    dp.cond_5_13_1 = true;
    for (int p = 1; p <= m - 2; ++p)
        if (!(q(r2, p) == q(r3, p) && q(r3, p) == q(r4, p))) dp.cond_5_13_1 = false;

    // k <= m-2 sits between lambda_k and lambda_{k+1}; the rest between
    // lambda_{k+1} and lambda_{k+2} (|lambda_n| at the bottom).
    dp.cond_5_11 = true;
    for (int k = 1; k <= n - 2; ++k) {
        const bool ok = k <= m - 2 ? in(q(r4, k), L.low(k + 1), L(k)) : in(q(r4, k), L.low(k + 2), L(k + 1));
        if (!ok) dp.cond_5_11 = false;
    }

    bool c4 = true;
    for (int p = m - 1; p <= mp - 1; ++p)
        if (!(q(r2, p) == L(p + 1) && q(r3, p) == q(r4, p))) c4 = false;
    for (int p = mp + 1; p <= n - 1; ++p)
        if (!(q(r2, p) == L(p) && q(r3, p) == q(r4, p - 1))) c4 = false;
    const HalfInt v = q(r2, mp);
    if (q(r3, mp) != v) c4 = false;
    if (mp >= m) {
        if (!in(v, L.low(mp + 1), q(r4, mp - 1))) c4 = false;
    } else if (!in(v, L.low(m), L(m - 1))) {
        c4 = false;
    }
    dp.cond_5_13_4 = c4;
}

}  // namespace

std::string DistinguishedPattern::str() const {
    std::ostringstream os;
    os << "m'=" << m_prime << " " << Q.str();
    return os.str();
}

DistinguishedPattern make_distinguished(const GTPattern& Q, int m, int m_prime) {
    const int n = Q.n;
    if (m < 2 || m > n) throw ParameterError("distinguished pattern: need 2 <= m <= n");
    if (m_prime < m - 1 || m_prime > n - 1) throw ParameterError("distinguished pattern: m' must lie in [m-1, n-1]");
    DistinguishedPattern dp;
    dp.Q = Q;
    dp.m = m;
    dp.m_prime = m_prime;
    if (is_valid(Q)) evaluate_conditions(dp);
    return dp;
}

std::vector<DistinguishedPattern> enumerate_distinguished(const Weight& lambda, int m) {
    std::vector<DistinguishedPattern> out;
    const int n = static_cast<int>(lambda.size());
    PatternEnumerator en(lambda);
    while (auto Q = en.next()) {
        for (int mp = m - 1; mp <= n - 1; ++mp) {
            auto dp = make_distinguished(*Q, m, mp);
            if (dp.valid()) out.push_back(std::move(dp));
        }
    }
    return out;
}

std::vector<Row> default_lower_rows(const Weight& lambda, int m) {
    const int n = static_cast<int>(lambda.size());
    const Top L{lambda, n};
    std::vector<Row> rows(static_cast<std::size_t>(std::max(0, 2 * n - 4)));
    if (n < 3) return rows;
    Row r4(static_cast<std::size_t>(n - 2));
    for (int k = 1; k <= n - 2; ++k) r4[static_cast<std::size_t>(k - 1)] = k <= m - 2 ? L(k) : L(k + 1);
    rows.back() = r4;
    // Lower rows take their upper interlacing bounds, which are always valid.
    for (int r = 2 * n - 5; r >= 1; --r) {
        const Row& up = rows[static_cast<std::size_t>(r)];
        Row cur(static_cast<std::size_t>(row_width(r)));
        for (std::size_t j = 0; j < cur.size(); ++j) cur[j] = up[j];
        rows[static_cast<std::size_t>(r - 1)] = cur;
    }
    return rows;
}

DistinguishedPattern corner_pattern_with_value(const Weight& lambda, int m, int m_prime, HalfInt v, const std::vector<Row>& lower) {
    const int n = static_cast<int>(lambda.size());
    if (static_cast<int>(lower.size()) != 2 * n - 4) throw StructuralError("corner pattern: need rows q_1 .. q_{2n-4}");
    const Top L{lambda, n};
    GTPattern Q;
    Q.n = n;
    Q.rows = lower;
    Row r3(static_cast<std::size_t>(n - 1)), r2(static_cast<std::size_t>(n - 1));
    auto q4 = [&](int k) { return lower.back()[static_cast<std::size_t>(k - 1)]; };
    for (int p = 1; p <= n - 1; ++p) {
        HalfInt a, b;  // q_{2n-3,p}, q_{2n-2,p}
        if (p <= m - 2) {
            a = b = q4(p);
        } else if (p <= m_prime - 1) {
            a = q4(p);
            b = L(p + 1);
        } else if (p == m_prime) {
            a = b = v;
        } else {
            a = q4(p - 1);
            b = L(p);
        }
        r3[static_cast<std::size_t>(p - 1)] = a;
        r2[static_cast<std::size_t>(p - 1)] = b;
    }
    Q.rows.push_back(r3);
    Q.rows.push_back(r2);
    Q.rows.push_back(lambda);
    auto dp = make_distinguished(Q, m, m_prime);
    if (!is_valid(Q) || !dp.valid()) throw ParameterError("corner pattern: rows do not give a valid distinguished pattern: " + Q.str());
    return dp;
}

DistinguishedPattern corner_pattern(const Weight& lambda, int m, int m_prime, int pm, const std::vector<Row>& lower) {
    const int n = static_cast<int>(lambda.size());
    const Top L{lambda, n};
    HalfInt v;
    if (m_prime >= m) {
        v = pm > 0 ? lower.back()[static_cast<std::size_t>(m_prime - 2)] : L.low(m_prime + 1);
    } else {
        v = pm > 0 ? L(m - 1) : L.low(m);
    }
    return corner_pattern_with_value(lambda, m, m_prime, v, lower);
}

std::string KSets::to_json() const {
    nlohmann::json j;
    j["K1"] = set_json(K1);
    j["K2"] = set_json(K2);
    j["K3"] = set_json(K3);
    j["K4"] = set_json(K4);
    j["K5"] = set_json(K5);
    j["K6"] = set_json(K6);
    j["K7"] = set_json(K7);
    j["J"] = set_json(J);
    j["I1"] = set_json(I1);
    j["I2"] = set_json(I2);
    return j.dump();
}

KSets build_ksets(const DistinguishedPattern& dp) {
    const GTPattern& Q = dp.Q;
    const int n = Q.n, m = dp.m, mp = dp.m_prime;
    KSets ks;
    auto row_valid = [&](int p) { return tau(Q, p, 0).has_value(); };
    auto col_valid = [&](int j) { return tau(Q, 0, j).has_value(); };
    for (int p = 1; p <= mp - 1; ++p) (row_valid(p) ? ks.K1 : ks.K2).insert(p);
    for (int p = -n + 2; p <= -mp; ++p) (row_valid(p) ? ks.K3 : ks.K4).insert(p);
    for (int p : ks.K3) ks.K5.insert(p - 1);
    for (int j = m - 1; j <= mp; ++j)
        if (col_valid(j)) ks.K6.insert(j);
    for (int j = -n + 1; j <= -mp; ++j)
        if (col_valid(j)) ks.K6.insert(j);
    for (int p = m - 1; p <= mp - 1; ++p)
        if (ks.K6.count(p + 1)) ks.K7.insert(p);
    for (int p = -n + 1; p <= -mp - 1; ++p)
        if (ks.K6.count(p)) ks.K7.insert(p);
    for (int p = -n + 1; p <= -mp - 1; ++p) ks.J.insert(p);
    for (int p = m - 1; p <= mp - 1; ++p) ks.J.insert(p);
    ks.I1 = ks.K1;
    ks.I1.insert(ks.K5.begin(), ks.K5.end());
    ks.I1.insert(0);
    ks.I2 = ks.K1;
    ks.I2.insert(ks.K3.begin(), ks.K3.end());
    ks.I2.insert(row_valid(-n + 1) ? -n + 1 : n - 1);
    return ks;
}

HalfInt d_value(const DistinguishedPattern& dp) {
    const GTPattern& Q = dp.Q;
    const int n = Q.n;
    const KSets ks = build_ksets(dp);
    HalfInt d(0);
    for (int p : ks.J) d += l_coord(Q, 2 * n - 2, -p) + l_coord(Q, 2 * n - 3, p);
    d += l_coord(Q, 2 * n - 2, -dp.m_prime);
    return d;
}

std::string ExponentSystem::to_json() const {
    nlohmann::json j;
    j["N1"] = N1;
    j["N2"] = N2;
    nlohmann::json a = nlohmann::json::array(), b = nlohmann::json::array();
    for (auto x : alpha) a.push_back(half_json(x));
    for (auto x : beta) b.push_back(half_json(x));
    j["alphas"] = a;
    j["betas"] = b;
    j["d"] = half_json(d);
    j["sign"] = sign;
    j["ksets"] = nlohmann::json::parse(ks.to_json());
    return j.dump();
}

ExponentSystem make_exponent_system(int N1, const std::vector<HalfInt>& alpha, const std::vector<HalfInt>& beta, int sign) {
    const int N2 = static_cast<int>(alpha.size());
    if (N2 < 2 || N1 < 2 || N1 > N2) throw ParameterError("exponent system: need 2 <= N1 <= N2");
    if (static_cast<int>(beta.size()) != N2 - 2) throw ParameterError("exponent system: need N2-2 betas");
    ExponentSystem es;
    es.N1 = N1;
    es.N2 = N2;
    es.alpha = alpha;
    es.beta = beta;
    es.sign = sign;
    return es;
}

bool ordering_holds(const ExponentSystem& es, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    const HalfInt zero(0);
    if (!(es.a(1) >= es.a(2))) return fail("alpha_1 >= alpha_2");
    for (int p = 3; p <= es.N2; ++p) {
        const std::string ps = std::to_string(p);
        if (p == es.N1 + 1) {
            if (!(es.a(p - 1) > zero)) return fail("alpha_" + std::to_string(p - 1) + " > 0");
            if (!(zero >= es.b(p))) return fail("0 >= beta_" + ps);
        } else if (!(es.a(p - 1) >= es.b(p))) {
            return fail("alpha_" + std::to_string(p - 1) + " >= beta_" + ps);
        }
        if (!(es.b(p) > es.a(p))) return fail("beta_" + ps + " > alpha_" + ps);
        if (es.b(p) - es.a(p) < HalfInt(2)) return fail("beta_" + ps + " - alpha_" + ps + " >= 2");
    }
    if (!(es.a(es.N1) > zero)) return fail("alpha_" + std::to_string(es.N1) + " > 0");
    return true;
}

ExponentSystem exponents(const DistinguishedPattern& dp, const HCParam& L, SignConvention conv, bool enforce_ordering) {
    if (!dp.valid()) throw ParameterError("exponents: pattern is not distinguished at m' = " + std::to_string(dp.m_prime));
    const Chamber c = classify(L);
    if (c.m != dp.m) throw ParameterError("exponents: chamber " + c.str() + " does not match m = " + std::to_string(dp.m));
    if (blattner(L, c).lambda != dp.Q.top()) throw ParameterError("exponents: pattern top row is not the Blattner weight of Lambda");

    const GTPattern& Q = dp.Q;
    const int n = Q.n, m = dp.m, mp = dp.m_prime;
    const int s = conv == SignConvention::UpperIsPlus ? c.sign : -c.sign;
    const HalfInt sLn = L[n] * s, sLn1 = L[n + 1] * s;
    auto l2 = [&](int j) { return l_coord(Q, 2 * n - 2, j); };
    auto l3 = [&](int j) { return l_coord(Q, 2 * n - 3, j); };

    ExponentSystem es;
    es.sign = s;
    es.ks = build_ksets(dp);
    es.d = d_value(dp);
    std::vector<int> js, ks;
    for (int j : es.ks.K6) {
        if (j >= m && j <= mp) js.push_back(j);
        if (j >= -n + 1 && j <= -mp - 1) ks.push_back(j);
    }
    es.N1 = 2 + static_cast<int>(js.size());
    es.N2 = es.N1 + static_cast<int>(ks.size());
    const HalfInt second = l2(m - 1) - 1;
    if (mp >= m) {
        es.alpha.push_back(sLn + sLn1);
        es.alpha.push_back(sLn + second);
    } else {
        es.alpha.push_back(sLn + std::max(sLn1, second));
        es.alpha.push_back(sLn + std::min(sLn1, second));
    }
    for (int j : js) {
        es.alpha.push_back(sLn + l2(j) - 1);
        es.beta.push_back(sLn + l3(j - 1));
    }
    for (int k : ks) {
        es.alpha.push_back(sLn + l2(k) - 1);
        es.beta.push_back(sLn + l3(k));
    }
    std::string why;
    if (enforce_ordering && !ordering_holds(es, &why))
        throw ConsistencyError("exponents: ordering chain fails (" + why + ") for " + dp.str());
    return es;
}

namespace {

UPoly theta_product(const std::vector<HalfInt>& shifts) {
    UPoly p = UPoly::constant(1);
    for (auto h : shifts) p = p * UPoly::linear(h.to_rational());
    return p;
}

}  // namespace

OdeSystem ode_system(const ExponentSystem& es) {
    const EulerOp th1 = EulerOp::theta1(), th2 = EulerOp::theta2();
    OdeSystem sys;
    sys.first = th1 * th1 - th2 * th2 - EulerOp::monomial(2, 0);
    sys.second = theta_product(es.alpha).in_theta2() + EulerOp::monomial(-1, 1) * (th1 - th2) * theta_product(es.beta).in_theta2();
    return sys;
}

EulerOp s1_op(const ExponentSystem& es) {
    std::vector<HalfInt> others;
    for (int p = 1; p <= es.N2; ++p)
        if (p != es.N1) others.push_back(es.a(p));
    const EulerOp first = EulerOp::monomial(-1, -1) * (EulerOp::theta1() + EulerOp::theta2()) * theta_product(others).in_theta2();
    const UPoly P = theta_product(es.beta);
    const Rational root = -es.a(es.N1).to_rational() - 1;
    const UPoly bracket = P - UPoly::constant(P.eval(root));
    return first + bracket.divide_by_root(root).in_theta2();
}

EulerOp s2_op(HalfInt lo, HalfInt hi, int sign, HalfInt Lambda_n, int n, int m_prime) {
    EulerOp op = EulerOp::identity();
    for (HalfInt q = lo; q <= hi; q += 1) op = op * UPoly::linear((Lambda_n * sign - q - n + m_prime).to_rational()).in_theta2();
    return op;
}

EulerOp s2_op(const DistinguishedPattern& dp, const HCParam& L, int sign) {
    const int n = dp.n(), mp = dp.m_prime;
    if (mp < dp.m) throw ParameterError("S_2 needs m' >= m");
    const HalfInt lo = dp.Q.q(2 * n - 4, mp - 1);
    const HalfInt hi = dp.Q.top()[static_cast<std::size_t>(mp - 1)] - 1;
    return s2_op(lo, hi, sign, L[n], n, mp);
}

EulerOp s3_op(const ExponentSystem& es) {
    EulerOp op = EulerOp::identity();
    for (int p = 3; p <= es.N2; ++p)
        for (HalfInt q = es.a(p) + 1; q <= es.b(p) - 1; q += 1)
            op = op * (EulerOp::constant(-q.to_rational()) - EulerOp::theta2());
    return op;
}

Rational check_summation_identity(int which, int k, const std::vector<Rational>& x, const std::vector<Rational>& y, const Rational& z) {
    if (k < 1) throw ParameterError("summation identity: k >= 1");
    if (static_cast<int>(x.size()) != k) throw ParameterError("summation identity: need k values of x");
    const std::size_t ny = which == 1 ? static_cast<std::size_t>(k - 1) : static_cast<std::size_t>(k);
    if (y.size() < ny) throw ParameterError("summation identity: too few values of y");
    for (int i = 0; i < k; ++i)
        for (int i2 = i + 1; i2 < k; ++i2)
            if (x[static_cast<std::size_t>(i)] == x[static_cast<std::size_t>(i2)]) throw ParameterError("summation identity: repeated x");

    Rational lhs = 0, rhs = 1;
    if (which == 1) {
        for (int i = 0; i < k; ++i) {
            Rational num = 1, den = 1;
            for (std::size_t j = 0; j < ny; ++j) num *= x[static_cast<std::size_t>(i)] + y[j];
            for (int i2 = 0; i2 < k; ++i2) {
                if (i2 == i) continue;
                num *= z - x[static_cast<std::size_t>(i2)];
                den *= x[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(i2)];
            }
            lhs += num / den;
        }
        for (std::size_t j = 0; j < ny; ++j) rhs *= z + y[j];
        return lhs - rhs;
    }
    if (which != 2) throw ParameterError("summation identity: which must be 1 or 2");
    Rational pz = 1, py = 1;
    for (int i = 0; i < k; ++i) {
        const Rational& xi = x[static_cast<std::size_t>(i)];
        if (z + xi == 0) throw ParameterError("summation identity: z + x_i = 0");
        Rational num = 1, den = z + xi;
        for (std::size_t j = 0; j < ny; ++j) num *= xi + y[j];
        for (int i2 = 0; i2 < k; ++i2)
            if (i2 != i) den *= xi - x[static_cast<std::size_t>(i2)];
        lhs += num / den;
        pz *= z + xi;
        py *= z - y[static_cast<std::size_t>(i)];
    }
    rhs = 1 - py / pz;
    return lhs - rhs;
}

}  // namespace whittaker
