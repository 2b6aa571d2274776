#include <cmath>
#include <map>

#include "doctest.h"
#include "test_util.hpp"
#include "whittaker/dims.hpp"
#include "whittaker/errors.hpp"
#include "whittaker/gt_action.hpp"
#include "whittaker/gt_pattern.hpp"

using namespace whittaker;
using testutil::rows;
using testutil::w;

namespace {

// Every dominant so(2n) weight with doubled lambda_1 <= max1.
void dominant(int n, int max1, std::vector<Weight>& out) {
    for (int par = 0; par < 2; ++par) {
        std::vector<int> d(static_cast<std::size_t>(n));
        std::function<void(int, int)> rec = [&](int i, int hi) {
            if (i == n) {
                Weight lam;
                for (int x : d) lam.push_back(HalfInt::from_doubled(x));
                out.push_back(lam);
                return;
            }
            const int lo = (i == n - 1) ? -hi : 0;
            for (int v = lo; v <= hi; ++v) {
                if (((v % 2) + 2) % 2 != par) continue;
                d[static_cast<std::size_t>(i)] = v;
                rec(i + 1, i == n - 1 ? hi : v);
            }
        };
        rec(0, max1);
    }
}

}  // namespace

TEST_CASE("validate_pattern examples") {
    // Row q_2 of an so(4) pattern has a single entry.
    CHECK(validate_pattern(rows({{0}, {1}, {1, 0}}), w({1, 0})));
    CHECK_FALSE(validate_pattern(rows({{0}, {2}, {1, 0}}), w({1, 0})));
    CHECK(validate_pattern(rows({{-1}, {1}, {1, 1}}), w({1, 1})));
    CHECK_FALSE(validate_pattern(rows({{-2}, {1}, {1, 1}}), w({1, 1})));
    // the top row must equal lambda
    CHECK_FALSE(validate_pattern(rows({{0}, {1}, {1, 0}}), w({1, 1})));
}

TEST_CASE("shape mismatch is a structural error, not an invalid pattern") {
    CHECK_THROWS_AS(validate_pattern(rows({{0}, {1, 0}, {1, 0}}), w({1, 0})), StructuralError);
    CHECK_THROWS_AS(validate_pattern(rows({{0}, {1, 0}}), w({1, 0})), StructuralError);
    CHECK_THROWS_AS(validate_pattern(rows({{0}, {1, 0}, {1, 0}}), w({1, 0, 0})), StructuralError);
}

TEST_CASE("pattern counts") {
    CHECK(enumerate_patterns(w({1, 0})).size() == 4);
    CHECK(enumerate_patterns(w({1, 1})).size() == 3);
    CHECK(enumerate_patterns(w({0, 0})).size() == 1);
    CHECK(count_patterns(w({1, 0})) == 4);
    CHECK(count_patterns(w({2, 1, 0})) == weyl_dim(3, RootType::D, w({2, 1, 0})));
}

TEST_CASE("count equals Weyl dimension for small weights") {
    for (int n : {2, 3}) {
        std::vector<Weight> ws;
        dominant(n, 4, ws);
        for (const auto& lam : ws) {
            const auto pats = enumerate_patterns(lam);
            CHECK(BigInt(pats.size()) == weyl_dim(n, RootType::D, lam));
            for (const auto& p : pats) CHECK(is_valid(p));
        }
    }
}

TEST_CASE("enumeration has no duplicates") {
    const auto pats = enumerate_patterns(w({2, 1, 0}));
    std::set<GTPattern> s(pats.begin(), pats.end());
    CHECK(s.size() == pats.size());
}

TEST_CASE("l_coord examples") {
    const auto q = enumerate_patterns(w({2, 0})).front();
    CHECK(l_coord(q, 2, 0) == HalfInt(0));
    CHECK(l_coord(q, 3, 1) == HalfInt(3));
    const auto p = enumerate_patterns(w({1, 0})).front();
    CHECK(l_coord(p, 4, -1) == HalfInt(-3));
    CHECK(l_coord(p, 0, 0) == HalfInt(0));
    CHECK_THROWS_AS(l_coord(p, 3, 0), StructuralError);
    CHECK_THROWS_AS(l_coord(p, 5, 1), StructuralError);
}

TEST_CASE("a-coefficient null points match shift validity") {
    for (const Weight& lam : {w({2, 1}), w({2, 0}), w({1, 1}), w({2, -2})}) {
        for (const auto& q : enumerate_patterns(lam)) {
            const int n = q.n;
            // odd rows below the top
            for (int i = 1; i <= n - 1; ++i) {
                const int r = 2 * i - 1;
                for (int j = -i; j <= i; ++j) {
                    if (j == 0) continue;
                    const bool valid = apply_shift(q, r, j).has_value();
                    CHECK_MESSAGE(a_coeff(q, r, j).is_zero() == !valid, q.str() << " row " << r << " j " << j);
                }
            }
            // even rows
            for (int i = 1; i <= n - 1; ++i) {
                const int r = 2 * i;
                for (int j = -i; j <= i; ++j) {
                    bool expect_zero;
                    if (j != 0) {
                        expect_zero = !apply_shift(q, r, j).has_value();
                    } else {
                        expect_zero = q.q(2 * i - 1, i) == HalfInt(0) || q.q(2 * i + 1, i + 1) == HalfInt(0);
                    }
                    CHECK_MESSAGE(a_coeff(q, r, j).is_zero() == expect_zero, q.str() << " row " << r << " j " << j);
                }
            }
        }
    }
}

TEST_CASE("a_{1,1} on the highest pattern of (1,0) matches the exact radicand") {
    const auto q = enumerate_patterns(w({1, 0})).front();
    const auto a = a_coeff(q, 1, 1);
    const Rational rad = a_radicand(q, 1, 1);
    const double expect = std::sqrt(std::abs(static_cast<double>(rad)));
    CHECK(std::abs(std::abs(a.value) - expect) < 1e-14);
    if (rad == 0) CHECK(a.is_zero());
}

TEST_CASE("antisymmetry of action coefficients") {
    for (const auto& q : enumerate_patterns(w({2, 1, 0}))) {
        for (int r = 1; r <= 2 * q.n - 2; ++r) {
            const int wdt = row_width(r);
            for (int j = -wdt; j <= wdt; ++j) {
                if (j == 0) continue;
                auto s = apply_shift(q, r, j);
                if (!s) continue;
                const cplx lhs = a_coeff(*s, r, -j).value;
                const cplx rhs = a_coeff(q, r, j).value;
                CHECK(std::abs(lhs + rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
            }
        }
    }
}

TEST_CASE("shift followed by its inverse is the identity") {
    for (const auto& q : enumerate_patterns(w({2, 1}))) {
        for (int r = 1; r <= 2; ++r)
            for (int j = -row_width(r); j <= row_width(r); ++j) {
                if (j == 0) continue;
                auto s = apply_shift(q, r, j);
                if (!s) continue;
                auto back = apply_shift(*s, r, -j);
                REQUIRE(back.has_value());
                CHECK(*back == q);
            }
    }
}

TEST_CASE("upward shift of row 2n-2 beyond lambda_1 is empty") {
    int seen = 0;
    for (const auto& q : enumerate_patterns(w({2, 1, 0}))) {
        if (q.q(4, 1) != HalfInt(2)) continue;
        ++seen;
        CHECK_FALSE(apply_shift(q, 4, 1).has_value());
    }
    CHECK(seen > 0);
}

TEST_CASE("top shift case list agrees with validity in GT(lambda + e_k)") {
    const Weight lam = w({2, 1, 0});
    for (const auto& q : enumerate_patterns(lam)) {
        for (int k = -3; k <= 3; ++k) {
            if (k == 0) continue;
            GTPattern shifted = q;
            shifted.q(5, std::abs(k)) += HalfInt(k > 0 ? 1 : -1);
            const bool valid = validate_pattern(shifted.rows, shifted.top());
            CHECK_MESSAGE(top_shift_case_list(q, k) == valid, q.str() << " k " << k);
        }
    }
}

TEST_CASE("casimir_scalar examples") {
    CHECK(casimir_scalar(Row{HalfInt(1)}, 2) == Rational(-1));
    CHECK(casimir_scalar(Row{HalfInt(2)}, 3) == Rational(-6));
}

TEST_CASE("trivial representation acts by zero") {
    GTBasis b(w({0, 0}));
    REQUIRE(b.size() == 1);
    for (int k = 1; k <= 3; ++k) {
        auto v = apply_generator(b, k, {cplx(1.0)});
        CHECK(std::abs(v[0]) == 0.0);
    }
}

TEST_CASE("Casimir matrices are diagonal with the scalar for lambda=(2,1)") {
    GTBasis b(w({2, 1}));
    for (int k = 2; k <= 4; ++k) {
        const CMatrix c = casimir_matrix(b, k);
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) {
                const cplx expect = i == j ? cplx(static_cast<double>(casimir_scalar(b[i].row(k - 1), k))) : cplx(0.0);
                CHECK(std::abs(c(i, j) - expect) < 1e-10);
            }
    }
}

TEST_CASE("chain generators are skew-Hermitian") {
    GTBasis b(w({2, 1, 0}));
    for (int k = 1; k <= 5; ++k) {
        const CMatrix f = generator_matrix(b, k + 1, k);
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) CHECK(std::abs(f(i, j) + std::conj(f(j, i))) < 1e-12);
    }
}

TEST_CASE("pattern JSON round trip") {
    for (const auto& q : enumerate_patterns(testutil::rows2({{5, 3, 1}})[0])) {
        CHECK(pattern_from_json(to_json(q)) == q);
    }
    CHECK_THROWS_AS(pattern_from_json("[[1],[2"), StructuralError);
    CHECK_THROWS_AS(pattern_from_json("[[1.5]]"), StructuralError);
}
