#pragma once

#include <string>
#include <vector>

#include "whittaker/half_int.hpp"
#include "whittaker/params.hpp"

namespace whittaker {

enum class RootType { B, D };

// Weyl dimension formula, exact. Rank 0 gives 1.
BigInt weyl_dim(int rank, RootType type, const std::vector<HalfInt>& mu);

struct InterlacingTuple {
    std::vector<HalfInt> mu;        // m-2 entries
    std::vector<HalfInt> mu_prime;  // n-m entries
    // (mu_1, ..., mu_{m-2}, mu'_1, ..., mu'_{n-m}), a Spin(2n-3) weight
    std::vector<HalfInt> concat() const;
};

// The summation range of the Bernstein-degree formula.
std::vector<InterlacingTuple> interlacings(const std::vector<HalfInt>& lambda, int m);

struct DimResult {
    Chamber chamber;
    BlattnerWeight blattner;
    std::vector<std::pair<InterlacingTuple, BigInt>> per_tuple;
    BigInt interlacing_sum = 0;
    BigInt total = 0;  // 4 * interlacing_sum when models exist
    std::string status;
};

DimResult algebraic_whittaker_dim(const HCParam& L);
// Interlacing sum when -+eta_2 > 0 for the chamber sign, else 0.
BigInt continuous_whittaker_dim(const HCParam& L, const Character& eta);

}  // namespace whittaker
