#pragma once

#include <array>
#include <complex>
#include <map>
#include <string>
#include <vector>

#include "whittaker/half_int.hpp"

namespace whittaker {

// Exponent key of one term t1^e1 t2^e2 theta1^p1 theta2^p2 (normal ordered:
// monomial on the left, Euler derivatives theta_i = t_i d/dt_i on the right).
struct OpKey {
    int e1 = 0, e2 = 0, p1 = 0, p2 = 0;
    friend auto operator<=>(const OpKey&, const OpKey&) = default;
};

template <class C>
class BasicEulerOp {
public:
    using Coeff = C;
    using Terms = std::map<OpKey, C>;

    BasicEulerOp() = default;
    static BasicEulerOp constant(const C& c) { return term(c, {}); }
    static BasicEulerOp identity() { return constant(C(1)); }
    static BasicEulerOp term(const C& c, OpKey k) {
        BasicEulerOp op;
        if (c != C(0)) op.terms_[k] = c;
        return op;
    }
    static BasicEulerOp monomial(int e1, int e2, const C& c = C(1)) { return term(c, {e1, e2, 0, 0}); }
    static BasicEulerOp theta1() { return term(C(1), {0, 0, 1, 0}); }
    static BasicEulerOp theta2() { return term(C(1), {0, 0, 0, 1}); }
    // sum_k coeffs[k] theta2^k
    static BasicEulerOp theta2_poly(const std::vector<C>& coeffs) {
        BasicEulerOp op;
        for (std::size_t k = 0; k < coeffs.size(); ++k)
            if (coeffs[k] != C(0)) op.terms_[{0, 0, 0, static_cast<int>(k)}] = coeffs[k];
        return op;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    BasicEulerOp& operator+=(const BasicEulerOp& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    BasicEulerOp& operator-=(const BasicEulerOp& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    BasicEulerOp& operator*=(const C& s) {
        if (s == C(0)) {
            terms_.clear();
            return *this;
        }
        for (auto& kv : terms_) kv.second *= s;
        return *this;
    }
    friend BasicEulerOp operator+(BasicEulerOp a, const BasicEulerOp& b) { return a += b; }
    friend BasicEulerOp operator-(BasicEulerOp a, const BasicEulerOp& b) { return a -= b; }
    friend BasicEulerOp operator*(BasicEulerOp a, const C& s) { return a *= s; }
    friend BasicEulerOp operator*(const C& s, BasicEulerOp a) { return a *= s; }

    // Composition: (A * B) f = A(B f).
    friend BasicEulerOp operator*(const BasicEulerOp& a, const BasicEulerOp& b) {
        BasicEulerOp out;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) {
                // theta_i^p t_i^e = t_i^e (theta_i + e)^p
                auto bin1 = shifted_powers(ka.p1, kb.e1);
                auto bin2 = shifted_powers(ka.p2, kb.e2);
                for (std::size_t r1 = 0; r1 < bin1.size(); ++r1) {
                    if (bin1[r1] == C(0)) continue;
                    for (std::size_t r2 = 0; r2 < bin2.size(); ++r2) {
                        if (bin2[r2] == C(0)) continue;
                        OpKey k{ka.e1 + kb.e1, ka.e2 + kb.e2, static_cast<int>(r1) + kb.p1, static_cast<int>(r2) + kb.p2};
                        out.add_term(k, ca * cb * bin1[r1] * bin2[r2]);
                    }
                }
            }
        return out;
    }

    BasicEulerOp pow(int k) const {
        BasicEulerOp r = identity();
        for (int i = 0; i < k; ++i) r = r * (*this);
        return r;
    }

    // Maximal degree in theta2.
    int theta2_degree() const {
        int d = -1;
        for (const auto& kv : terms_) d = std::max(d, kv.first.p2);
        return d;
    }

    template <class D, class F>
    BasicEulerOp<D> map_coeffs(F f) const {
        BasicEulerOp<D> out;
        for (const auto& [k, c] : terms_) out += BasicEulerOp<D>::term(f(c), k);
        return out;
    }

    friend bool operator==(const BasicEulerOp& a, const BasicEulerOp& b) { return a.terms_ == b.terms_; }

private:
    void add_term(const OpKey& k, const C& c) {
        if (c == C(0)) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second == C(0)) terms_.erase(it);
        }
    }

    // coefficients of (x + e)^p as a polynomial in x
    static std::vector<C> shifted_powers(int p, int e) {
        std::vector<C> c(static_cast<std::size_t>(p + 1), C(0));
        c[0] = C(1);
        for (int step = 0; step < p; ++step) {
            for (int r = step + 1; r >= 1; --r) c[static_cast<std::size_t>(r)] = c[static_cast<std::size_t>(r - 1)] + C(e) * c[static_cast<std::size_t>(r)];
            c[0] = C(e) * c[0];
        }
        return c;
    }

    Terms terms_;
};

using EulerOp = BasicEulerOp<Rational>;
using NumericOp = BasicEulerOp<std::complex<double>>;

NumericOp to_numeric(const EulerOp& op);
std::string to_string(const EulerOp& op);

// Dense univariate polynomial with exact coefficients, lowest degree first.
struct UPoly {
    std::vector<Rational> c;

    static UPoly constant(const Rational& v) { return UPoly{{v}}; }
    // x + a
    static UPoly linear(const Rational& a) { return UPoly{{a, Rational(1)}}; }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    Rational eval(const Rational& x) const;
    UPoly operator*(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    // Exact quotient by (x - root); throws ConsistencyError when not divisible.
    UPoly divide_by_root(const Rational& root) const;
    EulerOp in_theta2() const;
};

}  // namespace whittaker
