#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "whittaker/half_int.hpp"

namespace whittaker {

using Weight = std::vector<HalfInt>;
using Row = std::vector<HalfInt>;

// Number of entries in row r of an so(2n) pattern (rows are 1-based).
constexpr int row_width(int r) { return (r + 1) / 2; }

// A Gelfand-Tsetlin pattern for so(2n): rows q_1 .. q_{2n-1}, q_{2n-1} = lambda.
// Rows and entries are addressed 1-based through q(); rows[] is 0-based storage.
struct GTPattern {
    int n = 0;
    std::vector<Row> rows;

    HalfInt q(int r, int j) const { return rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(j - 1)]; }
    HalfInt& q(int r, int j) { return rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(j - 1)]; }
    const Row& row(int r) const { return rows[static_cast<std::size_t>(r - 1)]; }
    const Row& top() const { return rows.back(); }

    friend bool operator==(const GTPattern&, const GTPattern&) = default;
    friend auto operator<=>(const GTPattern& a, const GTPattern& b) { return a.rows <=> b.rows; }

    std::string str() const;
};

// Returns n, or throws StructuralError when the table is not triangular of
// the so(2n) shape with n >= 2 (or n >= 1 when allow_rank1).
int pattern_rank(const std::vector<Row>& rows, bool allow_rank1 = false);

// lambda_1 >= ... >= lambda_{n-1} >= |lambda_n| with uniform parity.
bool is_dominant_D(const Weight& lambda);
bool uniform_parity(const Weight& w);

// Checks the definition's seven conditions. Shape problems throw.
bool validate_pattern(const std::vector<Row>& rows, const Weight& lambda);
bool is_valid(const GTPattern& q);

// Row-wise depth-first enumeration of GT(lambda). Single consumer.
class PatternEnumerator {
public:
    explicit PatternEnumerator(const Weight& lambda);
    // Next pattern, or nullopt when exhausted.
    std::optional<GTPattern> next();

private:
    bool reset_row(int r);
    bool advance_row(int r);

    GTPattern cur_;
    bool started_ = false;
    bool done_ = false;
};

std::vector<GTPattern> enumerate_patterns(const Weight& lambda);
BigInt count_patterns(const Weight& lambda);

// The embedded row q_{2n} = (lambda_1+1, ..., lambda_{n-1}+1, |lambda_n|+1).
Row embedded_top_row(const Weight& lambda);

// l-coordinates. Rows 0..2n are accepted; row 2n uses the embedded row and
// row 0 is the empty row whose only coordinate is l_{0,0} = 0.
HalfInt l_coord(const GTPattern& q, int row, int j);

// sigma_{a,b}: add sgn(b) to q_{a,|b|}. Empty when the result is invalid.
std::optional<GTPattern> apply_shift(const GTPattern& q, int a, int b);
// Several shifts applied in order, validity checked only on the result.
std::optional<GTPattern> apply_shifts(const GTPattern& q, const std::vector<std::pair<int, int>>& shifts);
// tau_{i,j} = sigma_{2n-3,i} sigma_{2n-2,j}
std::optional<GTPattern> tau(const GTPattern& q, int i, int j);

// The case list for validity of sigma_{2n-1,k}Q inside GT(lambda+e_k).
// Stated for lambda_n != 0; see the notes in the implementation.
bool top_shift_case_list(const GTPattern& q, int k);

// JSON array of rows of doubled integers.
std::string to_json(const GTPattern& q);
GTPattern pattern_from_json(const std::string& text);
std::string weight_to_json(const Weight& w);

}  // namespace whittaker

template <>
struct std::hash<whittaker::GTPattern> {
    std::size_t operator()(const whittaker::GTPattern& p) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (const auto& r : p.rows)
            for (auto x : r) h = (h ^ static_cast<std::size_t>(x.doubled())) * 1099511628211ull;
        return h;
    }
};
