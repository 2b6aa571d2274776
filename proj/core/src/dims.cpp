#include "whittaker/dims.hpp"

#include <functional>

#include "whittaker/errors.hpp"

namespace whittaker {

std::vector<HalfInt> InterlacingTuple::concat() const {
    std::vector<HalfInt> out = mu;
    out.insert(out.end(), mu_prime.begin(), mu_prime.end());
    return out;
}

BigInt weyl_dim(int rank, RootType type, const std::vector<HalfInt>& mu) {
    if (static_cast<int>(mu.size()) != rank) throw StructuralError("weyl_dim: weight length must equal the rank");
    if (rank == 0) return 1;
    for (auto x : mu)
        if (!same_parity(x, mu.front())) throw ParameterError("weyl_dim: mixed integer and half-integer entries");
    for (int i = 0; i + 1 < rank; ++i)
        if (mu[static_cast<std::size_t>(i)] < mu[static_cast<std::size_t>(i + 1)]) throw ParameterError("weyl_dim: weight is not dominant");
    const HalfInt last = mu.back();
    if (type == RootType::B && last < HalfInt(0)) throw ParameterError("weyl_dim: type B weight needs mu_r >= 0");
    if (type == RootType::D && rank >= 2 && mu[static_cast<std::size_t>(rank - 2)] < abs(last))
        throw ParameterError("weyl_dim: type D weight needs mu_{r-1} >= |mu_r|");

    // Doubled coordinates keep everything integral.
    std::vector<std::int64_t> rho2(static_cast<std::size_t>(rank)), v2(static_cast<std::size_t>(rank));
    for (int i = 0; i < rank; ++i) {
        rho2[static_cast<std::size_t>(i)] = type == RootType::B ? 2 * (rank - i) - 1 : 2 * (rank - i - 1);
        v2[static_cast<std::size_t>(i)] = mu[static_cast<std::size_t>(i)].doubled() + rho2[static_cast<std::size_t>(i)];
    }
    BigInt num = 1, den = 1;
    for (int i = 0; i < rank; ++i) {
        for (int j = i + 1; j < rank; ++j) {
            num *= BigInt(v2[static_cast<std::size_t>(i)] - v2[static_cast<std::size_t>(j)]) * BigInt(v2[static_cast<std::size_t>(i)] + v2[static_cast<std::size_t>(j)]);
            den *= BigInt(rho2[static_cast<std::size_t>(i)] - rho2[static_cast<std::size_t>(j)]) * BigInt(rho2[static_cast<std::size_t>(i)] + rho2[static_cast<std::size_t>(j)]);
        }
        if (type == RootType::B) {
            num *= v2[static_cast<std::size_t>(i)];
            den *= rho2[static_cast<std::size_t>(i)];
        }
    }
    if (num % den != 0) throw ConsistencyError("weyl_dim: non-integral quotient");
    return num / den;
}

std::vector<InterlacingTuple> interlacings(const std::vector<HalfInt>& lambda, int m) {
    const int n = static_cast<int>(lambda.size());
    if (m < 2 || m > n) throw ParameterError("interlacings: need 2 <= m <= n");
    auto L = [&](int i) { return lambda[static_cast<std::size_t>(i - 1)]; };
    // Ranges [lo, hi] for each coordinate; they are independent of each other.
    std::vector<std::pair<HalfInt, HalfInt>> ranges;
    for (int i = 1; i <= m - 2; ++i) ranges.push_back({L(i + 1), L(i)});
    for (int i = 1; i <= n - m; ++i) {
        const int a = m + i - 1;
        HalfInt lo = (a + 1 == n) ? abs(L(n)) : L(a + 1);
        ranges.push_back({lo, L(a)});
    }
    std::vector<InterlacingTuple> out;
    std::vector<HalfInt> cur(ranges.size());
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == ranges.size()) {
            InterlacingTuple t;
            t.mu.assign(cur.begin(), cur.begin() + (m - 2));
            t.mu_prime.assign(cur.begin() + (m - 2), cur.end());
            out.push_back(std::move(t));
            return;
        }
        for (HalfInt x = ranges[k].first; x <= ranges[k].second; x += 1) {
            cur[k] = x;
            rec(k + 1);
        }
    };
    rec(0);
    return out;
}

DimResult algebraic_whittaker_dim(const HCParam& L) {
    DimResult r;
    r.chamber = classify(L);
    if (!has_algebraic_whittaker(r.chamber, L.n)) {
        r.status = "no algebraic Whittaker model for chamber " + r.chamber.str();
        return r;
    }
    r.blattner = blattner(L, r.chamber);
    for (auto& t : interlacings(r.blattner.lambda, r.chamber.m)) {
        auto w = t.concat();
        BigInt d = weyl_dim(L.n - 2, RootType::B, w);  // throws if the concatenation is not dominant
        r.interlacing_sum += d;
        r.per_tuple.emplace_back(std::move(t), d);
    }
    r.total = 4 * r.interlacing_sum;
    r.status = "ok";
    return r;
}

BigInt continuous_whittaker_dim(const HCParam& L, const Character& eta) {
    check_character(eta);
    DimResult r = algebraic_whittaker_dim(L);
    if (r.total == 0) return 0;
    // favorable when -eta2 > 0 for chamber +, eta2 > 0 for chamber -
    const bool favorable = r.chamber.sign > 0 ? eta.eta2 < 0 : eta.eta2 > 0;
    return favorable ? r.interlacing_sum : BigInt(0);
}

}  // namespace whittaker
