#pragma once

#include <string>
#include <vector>

#include "whittaker/half_int.hpp"

namespace whittaker {

// Harish-Chandra parameter (Lambda_1, ..., Lambda_n; Lambda_{n+1}) for Spin(2n,2).
struct HCParam {
    int n = 0;
    std::vector<HalfInt> entries;  // n+1 entries

    HalfInt operator[](int i) const { return entries[static_cast<std::size_t>(i - 1)]; }  // 1-based
    friend bool operator==(const HCParam&, const HCParam&) = default;
    std::string str() const;
};

HCParam make_hc(std::vector<HalfInt> first_n, HalfInt last);
// "7,3,1" and "5" (halves as 7/2).
HCParam parse_hc(const std::string& lambda_csv, const std::string& lam_np1);

struct Chamber {
    int m = 0;
    int sign = +1;  // +1 or -1
    friend bool operator==(const Chamber&, const Chamber&) = default;
    std::string str() const;
};

// A root sum_i c_i e_i in R^{n+1} with integer coefficients.
using Root = std::vector<int>;

// The positive system Delta^+_{m,+-}: compact positive roots plus the
// noncompact roots listed for the chamber.
std::vector<Root> positive_system(int n, Chamber c);
std::vector<Chamber> all_chambers(int n);

// Twice the inner product <Lambda, beta>; exact.
std::int64_t pairing2(const HCParam& L, const Root& beta);

// Throws ParameterError naming a violated root when Lambda is not regular
// or not dominant for the compact roots.
void check_regular_dominant(const HCParam& L);
bool is_integral(const HCParam& L, Chamber c);

// Direct rule from the position of |Lambda_{n+1}| among the |Lambda_i|.
Chamber classify(const HCParam& L);

struct BlattnerWeight {
    std::vector<HalfInt> lambda;  // n entries
    HalfInt lambda_np1;
    bool far_from_walls = false;
};

BlattnerWeight blattner(const HCParam& L, Chamber c);
BlattnerWeight blattner(const HCParam& L);
// Consecutive gaps of (lambda_1, ..., lambda_{n-1}, |lambda_n|) at least 2 and |lambda_n| >= 2.
bool far_from_walls(const std::vector<HalfInt>& lambda);

HCParam contragredient(const HCParam& L);
int gk_dimension(Chamber c, int n);
bool has_algebraic_whittaker(Chamber c, int n);

struct Character {
    double eta1 = 1.0;
    double eta2 = -1.0;
};
void check_character(const Character& eta);

}  // namespace whittaker
