#include "whittaker/params.hpp"

#include <cmath>
#include <sstream>

#include "whittaker/errors.hpp"

namespace whittaker {

namespace {

std::vector<HalfInt> parse_csv(const std::string& s) {
    std::vector<HalfInt> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(HalfInt::parse(tok));
    return out;
}

std::string root_str(const Root& r) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i] == 0) continue;
        os << (r[i] > 0 ? (first ? "" : "+") : "-") << "e" << i + 1;
        first = false;
    }
    return os.str();
}

Root unit(int n, int i, int c) {
    Root r(static_cast<std::size_t>(n + 1), 0);
    r[static_cast<std::size_t>(i - 1)] = c;
    return r;
}

Root add(Root a, const Root& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

}  // namespace

std::string HCParam::str() const {
    std::ostringstream os;
    os << "(";
    for (int i = 1; i <= n; ++i) os << (i > 1 ? "," : "") << (*this)[i];
    os << ";" << (*this)[n + 1] << ")";
    return os.str();
}

std::string Chamber::str() const { return "Xi_{" + std::to_string(m) + (sign > 0 ? ",+}" : ",-}"); }

HCParam make_hc(std::vector<HalfInt> first_n, HalfInt last) {
    if (first_n.size() < 2) throw ParameterError("Harish-Chandra parameter needs n >= 2");
    HCParam L;
    L.n = static_cast<int>(first_n.size());
    L.entries = std::move(first_n);
    L.entries.push_back(last);
    return L;
}

HCParam parse_hc(const std::string& lambda_csv, const std::string& lam_np1) {
    return make_hc(parse_csv(lambda_csv), HalfInt::parse(lam_np1));
}

std::vector<Chamber> all_chambers(int n) {
    std::vector<Chamber> out;
    for (int m = 1; m <= n + 1; ++m) {
        out.push_back({m, +1});
        out.push_back({m, -1});
    }
    return out;
}

std::vector<Root> positive_system(int n, Chamber c) {
    std::vector<Root> roots;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            roots.push_back(add(unit(n, i, 1), unit(n, j, -1)));
            roots.push_back(add(unit(n, i, 1), unit(n, j, 1)));
        }
    const int np1 = n + 1;
    if (c.m <= n) {
        for (int i = 1; i <= c.m - 1; ++i) {
            roots.push_back(add(unit(n, i, 1), unit(n, np1, 1)));
            roots.push_back(add(unit(n, i, 1), unit(n, np1, -1)));
        }
        for (int i = c.m; i <= n; ++i) {
            roots.push_back(add(unit(n, np1, c.sign), unit(n, i, 1)));
            roots.push_back(add(unit(n, np1, c.sign), unit(n, i, -1)));
        }
    } else if (c.sign > 0) {
        for (int i = 1; i <= n; ++i) {
            roots.push_back(add(unit(n, i, 1), unit(n, np1, 1)));
            roots.push_back(add(unit(n, i, 1), unit(n, np1, -1)));
        }
    } else {
        for (int i = 1; i <= n - 1; ++i) {
            roots.push_back(add(unit(n, i, 1), unit(n, np1, 1)));
            roots.push_back(add(unit(n, i, 1), unit(n, np1, -1)));
        }
        roots.push_back(add(unit(n, n, -1), unit(n, np1, 1)));
        roots.push_back(add(unit(n, n, -1), unit(n, np1, -1)));
    }
    return roots;
}

std::int64_t pairing2(const HCParam& L, const Root& beta) {
    std::int64_t s = 0;
    for (int i = 1; i <= L.n + 1; ++i) s += beta[static_cast<std::size_t>(i - 1)] * L[i].doubled();
    return s;
}

void check_regular_dominant(const HCParam& L) {
    const int N = L.n + 1;
    if (static_cast<int>(L.entries.size()) != N) throw StructuralError("HCParam: wrong number of entries");
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j) {
            if (L[i] == L[j] || L[i] == -L[j]) {
                Root r = add(unit(L.n, i, 1), unit(L.n, j, L[i] == L[j] ? -1 : 1));
                throw ParameterError("Lambda is singular: <Lambda, " + root_str(r) + "> = 0");
            }
        }
    for (int i = 1; i < L.n; ++i)
        for (int j = i + 1; j <= L.n; ++j) {
            Root minus = add(unit(L.n, i, 1), unit(L.n, j, -1));
            Root plus = add(unit(L.n, i, 1), unit(L.n, j, 1));
            if (pairing2(L, minus) < 0) throw ParameterError("Lambda is not compact-dominant: <Lambda, " + root_str(minus) + "> < 0");
            if (pairing2(L, plus) < 0) throw ParameterError("Lambda is not compact-dominant: <Lambda, " + root_str(plus) + "> < 0");
        }
}

bool is_integral(const HCParam& L, Chamber c) {
    // rho = half the sum of the positive roots; compare parities of Lambda + rho.
    auto roots = positive_system(L.n, c);
    std::vector<std::int64_t> rho2(static_cast<std::size_t>(L.n + 1), 0);  // 2 rho, scaled once more below
    for (const auto& r : roots)
        for (std::size_t i = 0; i < r.size(); ++i) rho2[i] += r[i];
    // entries of Lambda + rho doubled: Lambda.doubled + rho2 (rho2 = 2 rho)
    std::int64_t first = L[1].doubled() + rho2[0];
    for (int i = 1; i <= L.n + 1; ++i) {
        std::int64_t v = L[i].doubled() + rho2[static_cast<std::size_t>(i - 1)];
        if (((v - first) % 2 + 2) % 2 != 0) return false;
    }
    return true;
}

Chamber classify(const HCParam& L) {
    check_regular_dominant(L);
    const int n = L.n;
    const HalfInt x = L[n + 1];
    Chamber c;
    if (abs(L[n]) > abs(x)) {
        c = {n + 1, L[n] > HalfInt(0) ? +1 : -1};
    } else {
        int m = 1;
        for (int i = 1; i <= n - 1; ++i)
            if (L[i] > abs(x)) ++m;
        c = {m, x > HalfInt(0) ? +1 : -1};
    }
    if (!is_integral(L, c)) throw ParameterError("Lambda + rho is not integral (mixed integer and half-integer entries)");
    return c;
}

bool far_from_walls(const std::vector<HalfInt>& lambda) {
    const std::size_t n = lambda.size();
    for (std::size_t i = 0; i + 2 < n; ++i)
        if (lambda[i] - lambda[i + 1] < HalfInt(2)) return false;
    if (n >= 2 && lambda[n - 2] - abs(lambda[n - 1]) < HalfInt(2)) return false;
    return abs(lambda[n - 1]) >= HalfInt(2);
}

BlattnerWeight blattner(const HCParam& L, Chamber c) {
    const int n = L.n;
    if (c.m == n + 1) throw OutOfScope("Blattner parameter for the chamber m = n+1 is not implemented");
    if (c.m < 1 || c.m > n + 1) throw ParameterError("chamber index out of range");
    BlattnerWeight b;
    b.lambda.resize(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        HalfInt v = L[i] - n + i;
        if (i < c.m) v += 1;
        b.lambda[static_cast<std::size_t>(i - 1)] = v;
    }
    b.lambda_np1 = L[n + 1] + c.sign * (n - c.m + 1);
    b.far_from_walls = far_from_walls(b.lambda);
    return b;
}

BlattnerWeight blattner(const HCParam& L) { return blattner(L, classify(L)); }

HCParam contragredient(const HCParam& L) {
    HCParam d = L;
    if (L.n % 2 == 1) d.entries[static_cast<std::size_t>(L.n - 1)] = -L[L.n];
    d.entries[static_cast<std::size_t>(L.n)] = -L[L.n + 1];
    return d;
}

int gk_dimension(Chamber c, int n) {
    if (c.m == 1) return 2 * n;
    if (c.m == n + 1) return 4 * n - 3;
    return 4 * n - 2;
}

bool has_algebraic_whittaker(Chamber c, int n) { return c.m >= 2 && c.m <= n; }

void check_character(const Character& eta) {
    if (!(eta.eta1 > 0.0) || !std::isfinite(eta.eta1)) throw ParameterError("eta1 must be positive");
    if (eta.eta2 == 0.0 || !std::isfinite(eta.eta2)) throw ParameterError("eta2 must be nonzero");
}

}  // namespace whittaker
