#include "whittaker/gt_action.hpp"

#include <cmath>

#include "whittaker/errors.hpp"

namespace whittaker {

namespace {

double log_abs_big(const BigInt& x) {
    BigInt a = boost::multiprecision::abs(x);
    if (a == 0) return -std::numeric_limits<double>::infinity();
    std::size_t bits = boost::multiprecision::msb(a);
    if (bits < 1000) return std::log(a.convert_to<double>());
    std::size_t shift = bits - 60;
    BigInt top = a >> shift;
    return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

double log_abs_rational(const Rational& r) {
    return log_abs_big(boost::multiprecision::numerator(r)) - log_abs_big(boost::multiprecision::denominator(r));
}

Rational rat(HalfInt h) { return h.to_rational(); }

// Signed indices 1 <= |k| <= w.
std::vector<int> pm_range(int w) {
    std::vector<int> out;
    for (int k = 1; k <= w; ++k) {
        out.push_back(k);
        out.push_back(-k);
    }
    return out;
}

int epsilon(const GTPattern& q, int row, int j) {
    if (row % 2 == 1 || j != 0) return j > 0 ? 1 : -1;
    const int i = row / 2;
    // Row 0 has no q_{-1,0}; the convention F_{21} Q = i q_{1,1} Q fixes it to 1.
    int s_lower = i == 0 ? 1 : sgn(q.q(2 * i - 1, i));
    return s_lower * sgn(q.q(2 * i + 1, i + 1));
}

}  // namespace

Rational a_radicand(const GTPattern& q, int row, int j) {
    const int n = q.n;
    Rational num = 1, den = 1;
    if (row % 2 == 1) {
        const int i = (row + 1) / 2;
        if (row > 2 * n - 1 || j == 0 || j > i || -j > i) throw StructuralError("a_coeff: index out of range");
        const Rational l = rat(l_coord(q, row, j));
        for (int k : pm_range(i - 1)) num *= l + rat(l_coord(q, row - 1, k));
        for (int k : pm_range(i)) num *= l + rat(l_coord(q, row + 1, k));
        den = 4;
        for (int k : pm_range(i)) {
            if (k == j || k == -j) continue;
            const Rational s = l + rat(l_coord(q, row, k));
            den *= s * (s + 1);
        }
    } else {
        const int i = row / 2;
        if (row < 0 || row > 2 * n - 2 || j > i || -j > i) throw StructuralError("a_coeff: index out of range");
        const Rational l = rat(l_coord(q, row, j));
        if (i > 0)
            for (int k : pm_range(i)) num *= l + rat(l_coord(q, row - 1, k));
        for (int k : pm_range(i + 1)) num *= l + rat(l_coord(q, row + 1, k));
        den = 4 * l * l - 1;
        std::vector<int> ks = pm_range(i);
        ks.push_back(0);
        for (int k : ks) {
            if (k == j || k == -j) continue;
            const Rational lk = rat(l_coord(q, row, k));
            den *= (l + lk) * (l - lk);
        }
    }
    if (num == 0) return Rational(0);
    if (den == 0) throw ConsistencyError("a_coeff: vanishing denominator with nonzero numerator at " + q.str());
    return -num / den;
}

ActionCoefficient a_coeff(const GTPattern& q, int row, int j) {
    ActionCoefficient out;
    const Rational r = a_radicand(q, row, j);
    if (r == 0) return out;
    out.sign = epsilon(q, row, j);
    if (out.sign == 0) throw ConsistencyError("a_coeff: zero sign with nonzero radicand");
    out.imaginary = r < 0;
    out.log_abs = 0.5 * log_abs_rational(r);
    const double mag = std::exp(out.log_abs);
    out.value = out.imaginary ? cplx(0.0, out.sign * mag) : cplx(out.sign * mag, 0.0);
    return out;
}

// Basis --------------------------------------------------------------------

GTBasis::GTBasis(const Weight& lambda) : lambda_(lambda), patterns_(enumerate_patterns(lambda)) {
    for (std::size_t i = 0; i < patterns_.size(); ++i) index_.emplace(patterns_[i], i);
}

long GTBasis::index_of(const GTPattern& p) const {
    auto it = index_.find(p);
    return it == index_.end() ? -1 : static_cast<long>(it->second);
}

CMatrix operator*(const CMatrix& x, const CMatrix& y) {
    CMatrix z(x.n);
    for (std::size_t i = 0; i < x.n; ++i)
        for (std::size_t k = 0; k < x.n; ++k) {
            const cplx xi = x(i, k);
            if (xi == cplx{}) continue;
            for (std::size_t j = 0; j < x.n; ++j) z(i, j) += xi * y(k, j);
        }
    return z;
}

CMatrix operator+(const CMatrix& x, const CMatrix& y) {
    CMatrix z = x;
    for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] += y.a[i];
    return z;
}

CMatrix operator-(const CMatrix& x, const CMatrix& y) {
    CMatrix z = x;
    for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] -= y.a[i];
    return z;
}

std::vector<cplx> apply_generator(const GTBasis& basis, int k, const std::vector<cplx>& v) {
    if (v.size() != basis.size()) throw StructuralError("apply_generator: dimension mismatch");
    const int n = basis.n();
    if (k < 1 || k > 2 * n - 1) throw StructuralError("apply_generator: generator index out of range");
    std::vector<cplx> out(v.size());
    // F_{2i+1,2i} moves row 2i-1, F_{2i+2,2i+1} moves row 2i.
    const int row = k - 1;
    const int i = k % 2 == 0 ? k / 2 : (k - 1) / 2;
    std::vector<int> js = pm_range(i);
    if (row % 2 == 0) js.push_back(0);
    for (std::size_t c = 0; c < v.size(); ++c) {
        if (v[c] == cplx{}) continue;
        const GTPattern& q = basis[c];
        for (int j : js) {
            ActionCoefficient a = a_coeff(q, row, j);
            if (a.is_zero()) continue;
            long t = static_cast<long>(c);
            if (j != 0) {
                auto p = apply_shift(q, row, j);
                if (!p) throw ConsistencyError("nonzero coefficient for an invalid shift at " + q.str());
                t = basis.index_of(*p);
            }
            out[static_cast<std::size_t>(t)] += a.value * v[c];
        }
    }
    return out;
}

namespace {

CMatrix chain_matrix(const GTBasis& basis, int k) {
    CMatrix m(basis.size());
    std::vector<cplx> e(basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c) {
        e.assign(basis.size(), cplx{});
        e[c] = 1.0;
        auto col = apply_generator(basis, k, e);
        for (std::size_t r = 0; r < basis.size(); ++r) m(r, c) = col[r];
    }
    return m;
}

}  // namespace

CMatrix generator_matrix(const GTBasis& basis, int i, int j) {
    if (j < 1 || i <= j || i > 2 * basis.n()) throw StructuralError("generator_matrix: need 1 <= j < i <= 2n");
    CMatrix f = chain_matrix(basis, j);  // F_{j+1,j}
    for (int r = j + 2; r <= i; ++r) {
        CMatrix a = chain_matrix(basis, r - 1);  // F_{r,r-1}
        f = a * f - f * a;                       // F_{r,j} = [F_{r,r-1}, F_{r-1,j}]
    }
    return f;
}

CMatrix casimir_matrix(const GTBasis& basis, int k) {
    CMatrix c(basis.size());
    for (int i = 2; i <= k; ++i)
        for (int j = 1; j < i; ++j) {
            CMatrix f = generator_matrix(basis, i, j);
            c = c + f * f;
        }
    return c;
}

Rational casimir_scalar(const Row& q_prev, int k) {
    if (static_cast<int>(q_prev.size()) != k / 2) throw StructuralError("casimir_scalar: row length must be floor(k/2)");
    Rational s = 0;
    for (int j = 1; j <= k / 2; ++j) {
        const Rational x = rat(q_prev[static_cast<std::size_t>(j - 1)]);
        s += x * x + x * (k - 2 * j);
    }
    return -s;
}

// Projections --------------------------------------------------------------

std::vector<std::pair<GTPattern, cplx>> projection_coeff(const GTPattern& q, TensorSource src, int tensor, int k,
                                                         int sign) {
    const int n = q.n;
    if (k == 0 || k > n || -k > n) throw StructuralError("projection_coeff: need 1 <= |k| <= n");
    if (tensor != 1 && tensor != 2) throw StructuralError("projection_coeff: tensor index is 1 or 2");
    if (sign != 1 && sign != -1) throw StructuralError("projection_coeff: sign is +1 or -1");
    const int top = 2 * n - 1;
    std::vector<std::pair<GTPattern, cplx>> out;

    auto push = [&](const std::vector<std::pair<int, int>>& shifts, cplx c) {
        if (c == cplx{}) return;
        auto p = apply_shifts(q, shifts);
        if (!p) throw ConsistencyError("projection_coeff: nonzero coefficient on an invalid pattern");
        for (auto& [pat, val] : out)
            if (pat == *p) {
                val += c;
                return;
            }
        out.emplace_back(std::move(*p), c);
    };
    auto denom = [&](const Rational& d) {
        if (d == 0) throw ParameterError("projection_coeff: vanishing denominator (weight too close to a wall)");
        return d.convert_to<double>();
    };

    if (src == TensorSource::V2n) {
        push({{top, k}}, a_coeff(q, top, k).value);
    } else if (src == TensorSource::V2n1) {
        std::vector<int> js = pm_range(n - 1);
        js.push_back(0);
        for (int j : js) {
            ActionCoefficient a1 = a_coeff(q, top - 1, j);
            if (a1.is_zero()) continue;
            auto p = j == 0 ? std::optional<GTPattern>(q) : apply_shift(q, top - 1, j);
            ActionCoefficient a2 = a_coeff(*p, top, k);
            if (a2.is_zero()) continue;
            const Rational d = rat(l_coord(q, top - 1, j)) - rat(l_coord(q, top, k));
            push({{top - 1, j}, {top, k}}, a1.value * a2.value / denom(d));
        }
    } else {
        std::vector<int> js = pm_range(n - 1);
        js.push_back(0);
        for (int i : pm_range(n - 1)) {
            ActionCoefficient a1 = a_coeff(q, top - 2, i);
            if (a1.is_zero()) continue;
            auto qi = apply_shift(q, top - 2, i);
            for (int j : js) {
                ActionCoefficient a2 = a_coeff(*qi, top - 1, j);
                if (a2.is_zero()) continue;
                auto qij = j == 0 ? qi : apply_shift(*qi, top - 1, j);
                ActionCoefficient a3 = a_coeff(*qij, top, k);
                if (a3.is_zero()) continue;
                const Rational d1 = rat(l_coord(q, top - 2, i)) - rat(l_coord(q, top - 1, j)) + 1;
                const Rational d2 = rat(l_coord(q, top - 1, j)) - rat(l_coord(q, top, k));
                push({{top - 2, i}, {top - 1, j}, {top, k}}, a1.value * a2.value * a3.value / (denom(d1) * denom(d2)));
            }
        }
    }
    if (tensor == 1) {
        const cplx f(0.0, -sign);  // -+ i
        for (auto& pv : out) pv.second *= f;
    }
    return out;
}

}  // namespace whittaker
