#include "doctest.h"
#include "whittaker/errors.hpp"
#include "whittaker/params.hpp"

using namespace whittaker;

TEST_CASE("classify examples") {
    CHECK(classify(parse_hc("5,1", "3")) == Chamber{2, +1});
    CHECK(classify(parse_hc("7,3,1", "5")) == Chamber{2, +1});
    const Chamber c = classify(parse_hc("5,3", "1"));
    CHECK(c.m == 3);
}

TEST_CASE("classify agrees with dominance for the listed positive systems") {
    const HCParam L = parse_hc("7,3,1", "5");
    int dominant = 0;
    for (const Chamber& c : all_chambers(3)) {
        bool ok = true;
        for (const Root& b : positive_system(3, c))
            if (pairing2(L, b) <= 0) ok = false;
        if (ok) {
            ++dominant;
            CHECK(c == classify(L));
        }
    }
    CHECK(dominant == 1);
}

TEST_CASE("irregular or non-dominant parameters throw") {
    CHECK_THROWS_AS(classify(parse_hc("5,3", "3")), ParameterError);
    CHECK_THROWS_AS(classify(parse_hc("3,5", "1")), ParameterError);
    CHECK_THROWS_AS(classify(parse_hc("7,3/2", "1")), ParameterError);
}

TEST_CASE("half-integer input parses") {
    const HCParam L = parse_hc("7/2,3/2", "1/2");
    CHECK(L[1] == HalfInt::from_doubled(7));
    CHECK(L[3] == HalfInt::from_doubled(1));
}

TEST_CASE("Blattner parameter") {
    const auto bw = blattner(parse_hc("7,3,1", "5"));
    CHECK(bw.lambda == std::vector<HalfInt>{6, 2, 1});
    CHECK(bw.lambda_np1 == HalfInt(7));
}

TEST_CASE("Blattner parameter is out of scope for m = n+1") {
    const HCParam L = parse_hc("7,5", "1");
    const Chamber c = classify(L);
    REQUIRE(c.m == 3);
    CHECK_THROWS_AS(blattner(L, c), OutOfScope);
}

TEST_CASE("contragredient") {
    const HCParam L = parse_hc("7,3,1", "5");
    const HCParam Ls = contragredient(L);
    CHECK(Ls == parse_hc("7,3,-1", "-5"));
    CHECK(contragredient(Ls) == L);
    CHECK(classify(Ls) == Chamber{2, -1});
}

TEST_CASE("GK dimension and existence of Whittaker models") {
    CHECK(gk_dimension(Chamber{2, +1}, 2) == 6);
    CHECK(gk_dimension(Chamber{1, +1}, 3) == 6);
    CHECK(gk_dimension(Chamber{4, +1}, 3) == 9);
    CHECK(has_algebraic_whittaker(Chamber{2, +1}, 2));
    CHECK_FALSE(has_algebraic_whittaker(Chamber{1, +1}, 3));
    CHECK_FALSE(has_algebraic_whittaker(Chamber{4, -1}, 3));
}

TEST_CASE("far from walls") {
    CHECK(far_from_walls({HalfInt(7), HalfInt(4), HalfInt(2)}));
    CHECK_FALSE(far_from_walls({HalfInt(6), HalfInt(2), HalfInt(1)}));
}

TEST_CASE("character check") {
    CHECK_NOTHROW(check_character(Character{1.0, -2.0}));
    CHECK_THROWS(check_character(Character{0.0, 1.0}));
}
