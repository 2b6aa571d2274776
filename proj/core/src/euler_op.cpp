#include "whittaker/euler_op.hpp"

#include <sstream>

#include "whittaker/errors.hpp"

namespace whittaker {

NumericOp to_numeric(const EulerOp& op) {
    return op.map_coeffs<std::complex<double>>([](const Rational& r) { return std::complex<double>(r.convert_to<double>(), 0.0); });
}

std::string to_string(const EulerOp& op) {
    if (op.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : op.terms()) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c << ")";
        if (k.e1) os << "*t1^" << k.e1;
        if (k.e2) os << "*t2^" << k.e2;
        if (k.p1) os << "*th1^" << k.p1;
        if (k.p2) os << "*th2^" << k.p2;
    }
    return os.str();
}

Rational UPoly::eval(const Rational& x) const {
    Rational s = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * x + *it;
    return s;
}

UPoly UPoly::operator*(const UPoly& o) const {
    UPoly r;
    r.c.assign(c.size() + o.c.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
    return r;
}

UPoly UPoly::operator-(const UPoly& o) const {
    UPoly r = *this;
    if (r.c.size() < o.c.size()) r.c.resize(o.c.size(), Rational(0));
    for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] -= o.c[i];
    while (r.c.size() > 1 && r.c.back() == 0) r.c.pop_back();
    return r;
}

UPoly UPoly::divide_by_root(const Rational& root) const {
    // synthetic division
    if (c.size() <= 1) {
        if (!c.empty() && c[0] != 0) throw ConsistencyError("UPoly: constant is not divisible by a linear factor");
        return UPoly{{Rational(0)}};
    }
    std::vector<Rational> q(c.size() - 1);
    Rational carry = 0;
    for (std::size_t i = c.size(); i-- > 1;) {
        carry = c[i] + carry * root;
        q[i - 1] = carry;
    }
    Rational rem = c[0] + carry * root;
    if (rem != 0) throw ConsistencyError("UPoly: polynomial does not vanish at the divisor root");
    return UPoly{q};
}

EulerOp UPoly::in_theta2() const { return EulerOp::theta2_poly(c); }

}  // namespace whittaker
