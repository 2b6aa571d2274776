#include <random>

#include "doctest.h"
#include "whittaker/errors.hpp"
#include "whittaker/relations.hpp"

using namespace whittaker;

namespace {

RelationContext n2_context() {
    const HCParam L = parse_hc("7,3", "5");
    const Chamber ch = classify(L);
    const auto dp = corner_pattern(blattner(L).lambda, ch.m, 1, -1, {});
    return RelationContext{dp, L, Character{1.0, -1.0}, exponents(dp, L).sign, 1};
}

}  // namespace

TEST_CASE("relation names round trip") {
    for (Relation r : {Relation::R5_14_1, Relation::R5_15_1, Relation::R5_15_2, Relation::R5_19_1, Relation::R5_22,
                       Relation::R5_9_2, Relation::R5_10_2, Relation::R5_10_3})
        CHECK(parse_relation(relation_name(r)) == r);
}

TEST_CASE("zero and random jets") {
    const auto ctx = n2_context();
    std::map<GTPattern, Jet> zero, rnd;
    std::mt19937_64 rng(3);
    std::normal_distribution<double> g;
    const auto terms = relation_terms(Relation::R5_19_1, ctx);
    CHECK_FALSE(terms.empty());
    for (const auto& t : terms)
        for (const auto& [k, c] : t.op.terms()) {
            zero[t.pattern][{k.p1, k.p2}] = 0.0;
            rnd[t.pattern][{k.p1, k.p2}] = cplx(g(rng), g(rng));
        }
    const auto rz = relation_residual(Relation::R5_19_1, ctx, jet_evaluator(zero, 0.8, 1.1));
    CHECK(std::abs(rz.residual) == 0.0);
    const auto rr = relation_residual(Relation::R5_19_1, ctx, jet_evaluator(rnd, 0.8, 1.1));
    CHECK(std::abs(rr.residual) > 1e-3 * rr.scale);
}

TEST_CASE("(5.22) involves the corner and its tau_{0,1} neighbour") {
    const auto ctx = n2_context();
    const auto terms = relation_terms(Relation::R5_22, ctx);
    bool has_q = false;
    for (const auto& t : terms) has_q = has_q || t.pattern == ctx.dp.Q;
    CHECK(has_q);
    CHECK(terms.size() >= 2);
}
