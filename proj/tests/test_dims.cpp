#include "doctest.h"
#include "whittaker/dims.hpp"
#include "whittaker/params.hpp"

using namespace whittaker;

TEST_CASE("Weyl dimension examples") {
    CHECK(weyl_dim(1, RootType::B, {HalfInt(1)}) == 3);
    CHECK(weyl_dim(2, RootType::B, {HalfInt::from_doubled(1), HalfInt::from_doubled(1)}) == 4);
    CHECK(weyl_dim(2, RootType::D, {HalfInt(1), HalfInt(1)}) == 3);
    CHECK(weyl_dim(0, RootType::B, {}) == 1);
    // so(3) spin 1/2 and so(8) vector
    CHECK(weyl_dim(1, RootType::B, {HalfInt::from_doubled(1)}) == 2);
    CHECK(weyl_dim(4, RootType::D, {HalfInt(1), 0, 0, 0}) == 8);
}

TEST_CASE("interlacing ranges") {
    const std::vector<HalfInt> lam{5, 3, 1};
    CHECK(interlacings({HalfInt(4), HalfInt(1)}, 2).size() == 1);
    CHECK(interlacings({HalfInt(4), HalfInt(1)}, 2)[0].concat().empty());

    const auto t2 = interlacings(lam, 2);
    REQUIRE(t2.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(t2[i].mu.empty());
        CHECK(t2[i].mu_prime.size() == 1);
    }
    const auto t3 = interlacings(lam, 3);
    REQUIRE(t3.size() == 3);
    std::set<HalfInt> mus;
    for (const auto& t : t3) mus.insert(t.mu.at(0));
    CHECK(mus == std::set<HalfInt>{3, 4, 5});
}

TEST_CASE("algebraic dimension examples") {
    const auto r = algebraic_whittaker_dim(parse_hc("6,4,1", "5"));
    CHECK(r.chamber == Chamber{2, +1});
    CHECK(r.blattner.lambda == std::vector<HalfInt>{5, 3, 1});
    CHECK(r.interlacing_sum == 15);
    CHECK(r.total == 60);

    const auto r2 = algebraic_whittaker_dim(parse_hc("5,1", "3"));
    CHECK(r2.total == 4);
}

TEST_CASE("continuous dimension depends on the sign of eta_2") {
    const HCParam L = parse_hc("6,4,1", "5");
    CHECK(continuous_whittaker_dim(L, Character{1.0, -1.0}) == 15);
    CHECK(continuous_whittaker_dim(L, Character{1.0, 1.0}) == 0);
}

TEST_CASE("chambers without models report zero") {
    const auto r = algebraic_whittaker_dim(parse_hc("7,5", "1"));
    CHECK(r.total == 0);
    CHECK_FALSE(r.status.empty());
}

TEST_CASE("contragredient gives the same total") {
    for (const char* lam : {"6,4,1", "9,6,2", "7,3,1"}) {
        const HCParam L = parse_hc(lam, "5");
        CHECK(algebraic_whittaker_dim(L).total == algebraic_whittaker_dim(contragredient(L)).total);
    }
}
