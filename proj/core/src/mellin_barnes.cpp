#include "whittaker/mellin_barnes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "whittaker/errors.hpp"
#include "whittaker/quadrature.hpp"

namespace whittaker {

namespace {

constexpr double kPi = std::numbers::pi;

// Bessel value split as exp(logscale) * mantissa so that large orders on the
// contour legs do not overflow before they meet the decaying gamma ratio.
cplx bessel_k_split(cplx nu, double x, double& logscale) {
    const double anu = std::abs(nu.real());
    const double ustar = std::asinh(anu / x);
    logscale = -x * std::cosh(ustar) + anu * ustar;
    double h = std::min(0.2, 0.6 / std::sqrt(1.0 + std::abs(nu)));
    h = std::min(h, 0.5 / (1.0 + std::abs(nu.imag())));
    auto g = [&](double u) {
        const double base = -x * std::cosh(u) - logscale;
        return 0.5 * (std::exp(base + nu * u) + std::exp(base - nu * u));
    };
    cplx sum = 0.5 * g(0.0);
    for (int k = 1;; ++k) {
        const double u = k * h;
        sum += g(u);
        if (u > ustar && -x * std::cosh(u) + anu * u < logscale - 46.0) break;
        if (k > 2000000) throw ConvergenceError("bessel_k_split: no termination");
    }
    return h * sum;
}

cplx bessel_i_split(cplx nu, double x, double& logscale) {
    if (nu.imag() == 0.0 && nu.real() <= 0 && nu.real() == std::floor(nu.real())) nu = -nu;
    const double y = 0.5 * x;
    const cplx lt0 = nu * std::log(y) - log_gamma(nu + 1.0);
    logscale = lt0.real();
    cplx term(std::cos(lt0.imag()), std::sin(lt0.imag()));
    cplx sum = term;
    const double anu = std::abs(nu);
    for (int k = 0; k < 100000; ++k) {
        term *= y * y / ((k + 1.0) * (nu + (k + 1.0)));
        sum += term;
        if (k > anu + y && std::abs(term) < 1e-17 * std::abs(sum)) return sum;
    }
    throw ConvergenceError("bessel_i_split: series did not converge");
}

double real_bessel(Kernel kind, int dnu, double nu, double x) {
    if (kind == Kernel::K) return dnu ? bessel_k_dnu(nu, x) : bessel_k_real(nu, x);
    return dnu ? bessel_i_dnu(nu, x) : bessel_i_real(nu, x);
}

struct TermKey {
    HalfInt s;
    int log_power, dnu, t1_pow, order_offset;
    friend auto operator<=>(const TermKey&, const TermKey&) = default;
};

TermKey key_of(const MBTerm& t) { return {t.s, t.log_power, t.dnu, t.t1_pow, t.order_offset}; }

MBTerm with_key(const MBTerm& proto, const TermKey& k, cplx c) {
    MBTerm t = proto;
    t.s = k.s;
    t.log_power = k.log_power;
    t.dnu = k.dnu;
    t.t1_pow = k.t1_pow;
    t.order_offset = k.order_offset;
    t.coeff = c;
    return t;
}

std::vector<MBTerm> theta2_on(const std::vector<MBTerm>& in) {
    std::vector<MBTerm> out;
    for (const auto& t : in) {
        MBTerm a = t;
        a.coeff *= t.s.to_double();
        out.push_back(a);
        if (t.log_power > 0) {
            MBTerm b = t;
            b.coeff *= static_cast<double>(t.log_power);
            b.log_power -= 1;
            out.push_back(b);
        }
    }
    return out;
}

std::vector<MBTerm> theta1_on(const std::vector<MBTerm>& in) {
    std::vector<MBTerm> out;
    for (const auto& t : in) {
        const double nu = t.order().to_double();
        MBTerm a = t;
        a.coeff *= (t.t1_pow - nu);
        out.push_back(a);
        MBTerm b = t;  // t1 B_{nu-1}, with sign - for K and + for I
        b.t1_pow += 1;
        b.order_offset -= 1;
        if (t.kind == Kernel::K) b.coeff = -b.coeff;
        out.push_back(b);
        if (t.dnu == 1) {
            MBTerm c = t;
            c.dnu = 0;
            c.coeff = -c.coeff;
            out.push_back(c);
        }
    }
    return out;
}

template <class C>
MBSeries apply_impl(const BasicEulerOp<C>& op, const MBSeries& series, cplx (*conv)(const C&)) {
    std::map<TermKey, std::pair<cplx, double>> acc;
    const MBTerm proto = series.terms.empty() ? MBTerm{} : series.terms.front();
    for (const auto& [k, c] : op.terms()) {
        const cplx cc = conv(c);
        for (const auto& t : series.terms) {
            const double tmag = std::max(t.mag, std::abs(t.coeff));
            std::vector<MBTerm> cur{t};
            for (int i = 0; i < k.p2; ++i) cur = theta2_on(cur);
            for (int i = 0; i < k.p1; ++i) cur = theta1_on(cur);
            for (auto& u : cur) {
                u.t1_pow += k.e1;
                u.s += k.e2;
                u.order_offset += k.e2;
                if (series.t2_sign < 0 && (k.e2 % 2 != 0)) u.coeff = -u.coeff;
                auto& a = acc[key_of(u)];
                a.first += cc * u.coeff;
                // u.coeff / t.coeff is the exact factor picked up from the term
                a.second += std::abs(cc) * (t.coeff != 0.0 ? std::abs(u.coeff / t.coeff) * tmag : 0.0);
            }
        }
    }
    MBSeries out;
    out.kind = series.kind;
    out.t2_sign = series.t2_sign;
    out.cutoff = series.cutoff;
    int lo = 0, hi = 0;
    for (const auto& kv : op.terms()) {
        lo = std::min(lo, kv.first.e2);
        hi = std::max(hi, kv.first.e2);
    }
    out.s_min = series.s_min + lo;
    out.s_max = series.s_max + lo;  // beyond this some sources are missing
    for (const auto& [k, a] : acc) {
        if (a.second == 0.0) continue;
        MBTerm t = with_key(proto, k, a.first);
        t.mag = a.second;
        out.terms.push_back(t);
    }
    return out;
}

cplx rational_to_c(const Rational& r) { return cplx(r.convert_to<double>(), 0.0); }
cplx complex_to_c(const cplx& c) { return c; }

}  // namespace

std::string kernel_name(Kernel k) { return k == Kernel::K ? "K" : "I"; }

MBIntegrand mb_integrand(int j, Kernel kind, const ExponentSystem& es) {
    const int N2 = es.N2;
    if (j < 1 || j > N2) throw ParameterError("mb_integrand: j out of range");
    MBIntegrand ig;
    ig.j = j;
    ig.kind = kind;
    for (int p = j; p <= N2; ++p) {
        ig.factors.push_back({-es.a(p), -1, +1});
        ig.pole_starts.push_back(-es.a(p));
    }
    if (j == 1) {
        for (int p = 3; p <= N2; ++p) ig.factors.push_back({1 - es.b(p), -1, -1});
        ig.t2_sign = kind == Kernel::K ? +1 : -1;
    } else {
        for (int p = 3; p <= j; ++p) ig.factors.push_back({es.b(p), +1, +1});
        for (int p = 1; p <= j - 1; ++p) ig.factors.push_back({1 + es.a(p), +1, -1});
        for (int p = j + 1; p <= N2; ++p) ig.factors.push_back({1 - es.b(p), -1, -1});
        ig.t2_sign = kind == Kernel::K ? -1 : +1;
    }
    ig.crossing = -es.a(j) - HalfInt::parse("1/2");
    return ig;
}

cplx log_gamma_ratio(const MBIntegrand& ig, cplx s) {
    cplx acc = 0;
    for (const auto& f : ig.factors) acc += static_cast<double>(f.power) * log_gamma(f.a.to_double() + static_cast<double>(f.eps) * s);
    return acc;
}

cplx signed_log(int sigma, double t2) {
    const double v = sigma * t2;
    if (v == 0) throw ParameterError("t2 must be nonzero");
    return v > 0 ? cplx(std::log(v), 0) : cplx(std::log(-v), kPi);
}

cplx signed_power(int sigma, double t2, cplx s) { return std::exp(s * signed_log(sigma, t2)); }

cplx MBTerm::value(double t1, double t2) const {
    const double nu = order().to_double();
    const double b = real_bessel(kind, dnu, nu, t1);
    const cplx L = signed_log(t2_sign, t2);
    cplx v = coeff * std::pow(t1, t1_pow) * std::exp(s.to_double() * L) * b;
    for (int r = 0; r < log_power; ++r) v *= L;
    return v;
}

cplx MBSeries::evaluate(double t1, double t2, double* abs_err) const {
    cplx sum = 0;
    double tail = 0, mag = 0;
    const HalfInt tail_from = s_max - 3;
    for (const auto& t : terms) {
        const cplx v = t.value(t1, t2);
        sum += v;
        mag += std::abs(v);
        if (t.s > tail_from) tail += std::abs(v);
    }
    if (abs_err) *abs_err = tail + 4e-16 * mag;
    return sum;
}

MBSeries residue_series(int j, Kernel kind, const ExponentSystem& es, int cutoff) {
    if (j == 1 && es.a(1) == es.a(2)) throw PoleCollision("residue_series: alpha_1 = alpha_2, use contour_quadrature");
    const MBIntegrand ig = mb_integrand(j, kind, es);
    const HalfInt s_lo = -es.a(j), s_hi = s_lo + cutoff;
    std::set<HalfInt> poles;
    for (auto st : ig.pole_starts)
        for (HalfInt s = st; s <= s_hi; s += 1) poles.insert(s);

    MBSeries out;
    out.kind = kind;
    out.t2_sign = ig.t2_sign;
    out.s_min = s_lo;
    out.s_max = s_hi;
    out.cutoff = cutoff;
    MBTerm proto;
    proto.kind = kind;
    proto.t2_sign = ig.t2_sign;

    for (HalfInt s0 : poles) {
        int order = 0, sign = 1;
        double loglead = 0, c1 = 0;
        for (const auto& f : ig.factors) {
            const HalfInt z0 = f.a + s0 * f.eps;
            if (z0.is_integer() && z0 <= HalfInt(0)) {
                const double N = -z0.to_double();
                const double lf = std::lgamma(N + 1.0);
                const int sg = (static_cast<long>(N) % 2 == 0 ? 1 : -1) * f.eps;
                order += f.power;
                loglead += f.power * -lf;
                sign *= sg;
                c1 += f.power * digamma(N + 1.0) * f.eps;
            } else {
                const double z = z0.to_double();
                loglead += f.power * log_abs_gamma(z);
                sign *= sign_gamma(z);
                c1 += f.power * digamma(z) * f.eps;
            }
        }
        if (order <= 0) continue;
        if (order >= 3) throw PoleCollision("residue_series: pole of order " + std::to_string(order) + " at s = " + s0.str());
        if (loglead < -700) continue;  // the residue underflows and is negligible
        const double lead = sign * std::exp(loglead);
        MBTerm t = proto;
        t.s = s0;
        if (order == 1) {
            t.coeff = -lead;
            out.terms.push_back(t);
        } else {
            // d/ds[(sigma t2)^s B_{-s}] = L (sigma t2)^s B_{-s} - (sigma t2)^s (dB)_{-s}
            t.coeff = -lead * c1;
            out.terms.push_back(t);
            MBTerm tl = proto;
            tl.s = s0;
            tl.log_power = 1;
            tl.coeff = -lead;
            out.terms.push_back(tl);
            MBTerm td = proto;
            td.s = s0;
            td.dnu = 1;
            td.coeff = lead;
            out.terms.push_back(td);
        }
    }
    return out;
}

cplx residue_eval(int j, Kernel kind, const ExponentSystem& es, double t1, double t2, double rel_tol, double* abs_err) {
    int cutoff = 24;
    for (int it = 0; it < 12; ++it) {
        const MBSeries ser = residue_series(j, kind, es, cutoff);
        double err = 0;
        const cplx v = ser.evaluate(t1, t2, &err);
        if (err <= rel_tol * std::abs(v) + 1e-300 || it == 11) {
            if (abs_err) *abs_err = err;
            return v;
        }
        cutoff = cutoff * 3 / 2;
    }
    throw ConvergenceError("residue_eval: cutoff limit reached");
}

cplx contour_quadrature(int j, Kernel kind, const ExponentSystem& es, double t1, double t2, const ContourOptions& opt, double* abs_err) {
    if (!(t1 > 0)) throw ParameterError("contour_quadrature: need t1 > 0");
    if (t2 == 0) throw ParameterError("contour_quadrature: need t2 != 0");
    if (!(opt.crossing_offset > 0 && opt.crossing_offset < 1)) throw ParameterError("contour_quadrature: crossing offset must lie in (0,1)");
    const MBIntegrand ig = mb_integrand(j, kind, es);
    const cplx logt = signed_log(ig.t2_sign, t2);
    const double c = -es.a(j).to_double() - opt.crossing_offset;
    const double v = opt.leg_height;
    auto F = [&](cplx s) -> cplx {
        double ls = 0;
        const cplx b = kind == Kernel::K ? bessel_k_split(-s, t1, ls) : bessel_i_split(-s, t1, ls);
        return std::exp(log_gamma_ratio(ig, s) + s * logt + ls) * b;
    };
    double err_total = 0;
    auto vert = integrate_interval([&](double y) { return F(cplx(c, y)); }, -v, v, opt.rel_tol);
    err_total += vert.abs_err;
    cplx legs = 0;
    int quiet = 0;
    const double seg = 2.0;
    for (double x0 = 0; x0 < 600; x0 += seg) {
        auto r = integrate_interval([&](double x) { return F(cplx(c + x, v)) - F(cplx(c + x, -v)); }, x0, x0 + seg, opt.rel_tol);
        legs += r.value;
        err_total += r.abs_err;
        const double scale = std::max(std::abs(legs), std::abs(vert.value));
        if (std::abs(r.value) < 1e-17 * scale) {
            if (++quiet >= 2 && x0 > 6) break;
        } else {
            quiet = 0;
        }
    }
    if (abs_err) *abs_err = err_total / (2 * kPi);
    return (legs + cplx(0, 1) * vert.value) / cplx(0, 2 * kPi);
}

double leading_constant(int j, const ExponentSystem& es) {
    const int N2 = es.N2;
    double lg = 0;
    int sg = 1;
    auto mul = [&](HalfInt z, int power) {
        const double x = z.to_double();
        lg += power * log_abs_gamma(x);
        sg *= sign_gamma(x);
    };
    if (j == 1) {
        for (int p = 2; p <= N2; ++p) mul(es.a(1) - es.a(p), +1);
        for (int p = 3; p <= N2; ++p) mul(es.a(1) - es.b(p) + 1, -1);
    } else {
        const HalfInt aj = es.a(j);
        for (int p = j + 1; p <= N2; ++p) mul(aj - es.a(p), +1);
        for (int p = 3; p <= j; ++p) mul(es.b(p) - aj, +1);
        for (int p = 1; p <= j - 1; ++p) mul(es.a(p) - aj + 1, -1);
        for (int p = j + 1; p <= N2; ++p) mul(aj - es.b(p) + 1, -1);
    }
    return sg * std::exp(lg);
}

MBSeries apply_euler_termwise(const NumericOp& op, const MBSeries& series) { return apply_impl<cplx>(op, series, complex_to_c); }

MBSeries apply_euler_termwise(const EulerOp& op, const MBSeries& series) { return apply_impl<Rational>(op, series, rational_to_c); }

template <class C>
static int min_shift_impl(const BasicEulerOp<C>& op) {
    int lo = 0;
    for (const auto& kv : op.terms()) lo = std::min(lo, kv.first.e2);
    return lo;
}
int min_t2_shift(const NumericOp& op) { return min_shift_impl(op); }
int min_t2_shift(const EulerOp& op) { return min_shift_impl(op); }

ReductionReport reduce_and_check(const MBSeries& series, HalfInt s_limit) {
    struct Acc {
        cplx sum = 0;
        double abs = 0;
    };
    std::map<TermKey, Acc> acc;
    struct Item {
        TermKey k;
        cplx c;
        double mag;
    };
    std::vector<Item> work;
    for (const auto& t : series.terms) work.push_back({key_of(t), t.coeff, std::max(t.mag, std::abs(t.coeff))});
    const bool isK = series.kind == Kernel::K;
    while (!work.empty()) {
        auto [k, c, mag] = work.back();
        work.pop_back();
        const int o = k.order_offset;
        if (o == 0 || o == -1) {
            auto& a = acc[k];
            a.sum += c;
            a.abs += mag;
            continue;
        }
        const double nu = (-k.s + o).to_double();
        // K_{mu+1} = K_{mu-1} + (2mu/x) K_mu,  I_{mu+1} = I_{mu-1} - (2mu/x) I_mu
        const bool up = o >= 1;
        const double mu = up ? nu - 1 : nu + 1;
        const double sgn = (isK ? 1.0 : -1.0) * (up ? 1.0 : -1.0);
        TermKey far = k, near = k;
        far.order_offset = up ? o - 2 : o + 2;
        near.order_offset = up ? o - 1 : o + 1;
        near.t1_pow -= 1;
        work.push_back({far, c, mag});
        work.push_back({near, c * (sgn * 2 * mu), mag * std::abs(2 * mu)});
        if (k.dnu == 1) {
            TermKey extra = near;
            extra.dnu = 0;
            work.push_back({extra, c * (sgn * 2), mag * 2});
        }
    }
    ReductionReport rep;
    for (const auto& [k, a] : acc) {
        if (k.s > s_limit) continue;
        if (a.abs == 0) continue;
        ++rep.keys;
        rep.max_relative = std::max(rep.max_relative, std::abs(a.sum) / a.abs);
        rep.max_abs = std::max(rep.max_abs, std::abs(a.sum));
        rep.scale = std::max(rep.scale, a.abs);
    }
    return rep;
}

double f0_quadrature(double alpha1, double alpha2, double t1, double t2, double rel_tol) {
    if (!(t1 > 0 && t2 > 0)) throw ParameterError("f0_quadrature: need t1, t2 > 0");
    const double mu = 0.5 * (alpha1 + alpha2), nu = alpha1 - alpha2;
    auto f = [&](double u) -> double {
        const double e = -u - t1 * t1 / (4 * u);
        if (e < -740) return 0.0;
        const double y = 2 * t2 * u / t1;
        const double k = bessel_k_real(nu, 2 * std::sqrt(y));
        return std::exp(e - mu * std::log(y)) * k / u;
    };
    return integrate_half_line(f, rel_tol);
}

double s3_f0_quadrature(const ExponentSystem& es, double t1, double t2, double rel_tol) {
    if (!(t1 > 0 && t2 > 0)) throw ParameterError("s3_f0_quadrature: need t1, t2 > 0");
    const double a1 = es.a(1).to_double(), a2 = es.a(2).to_double();
    const double e0 = -(a1 + a2), nu0 = a1 - a2;
    // polynomial coefficients of S_3 in theta2
    const EulerOp S3 = s3_op(es);
    std::vector<double> p(static_cast<std::size_t>(std::max(0, S3.theta2_degree()) + 1), 0.0);
    for (const auto& [k, c] : S3.terms()) p[static_cast<std::size_t>(k.p2)] = c.convert_to<double>();
    // terms c_k (x/2)^{e0+k} K_{nu0-k}(x) with x = 2 sqrt(y); theta_y = theta_x / 2
    std::vector<double> cur{1.0}, total(1, p[0]);
    for (std::size_t deg = 1; deg < p.size(); ++deg) {
        std::vector<double> next(cur.size() + 1, 0.0);
        for (std::size_t k = 0; k < cur.size(); ++k) {
            const double e = e0 + static_cast<double>(k), nu = nu0 - static_cast<double>(k);
            next[k] += 0.5 * (e - nu) * cur[k];
            next[k + 1] -= cur[k];
        }
        cur = next;
        total.resize(cur.size(), 0.0);
        for (std::size_t k = 0; k < cur.size(); ++k) total[k] += p[deg] * cur[k];
    }
    auto f = [&](double u) -> double {
        const double e = -u - t1 * t1 / (4 * u);
        if (e < -740) return 0.0;
        const double y = 2 * t2 * u / t1;
        const double x = 2 * std::sqrt(y);
        double acc = 0;
        for (std::size_t k = 0; k < total.size(); ++k) {
            if (total[k] == 0) continue;
            const double ek = e0 + static_cast<double>(k);
            acc += total[k] * std::exp(e + 0.5 * ek * std::log(y)) * bessel_k_real(nu0 - static_cast<double>(k), x);
        }
        return acc / u;
    };
    return integrate_half_line(f, rel_tol);
}

}  // namespace whittaker
