#include "whittaker/gt_pattern.hpp"

#include <sstream>

#include "json.hpp"

#include "whittaker/errors.hpp"

namespace whittaker {

namespace {

struct Bounds {
    HalfInt lo, hi;
};

// Interval allowed for q_{r,j} given the row above it.
Bounds entry_bounds(const Row& upper, int r, int j) {
    const int w = row_width(r);
    auto u = [&](int k) { return upper[static_cast<std::size_t>(k - 1)]; };
    if (r % 2 == 0) {
        // row 2i under row 2i+1 (i+1 entries)
        if (j < w) return {u(j + 1), u(j)};
        return {abs(u(w + 1)), u(w)};
    }
    // row 2i-1 under row 2i (i entries)
    if (j < w) return {u(j + 1), u(j)};
    return {-u(w), u(w)};
}

bool row_fits(const Row& row, const Row& upper, int r) {
    for (int j = 1; j <= row_width(r); ++j) {
        auto b = entry_bounds(upper, r, j);
        HalfInt x = row[static_cast<std::size_t>(j - 1)];
        if (x < b.lo || x > b.hi) return false;
    }
    return true;
}

}  // namespace

std::string GTPattern::str() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r) os << " | ";
        for (std::size_t j = 0; j < rows[r].size(); ++j) os << (j ? "," : "") << rows[r][j];
    }
    return os.str();
}

int pattern_rank(const std::vector<Row>& rows, bool allow_rank1) {
    if (rows.empty() || rows.size() % 2 == 0)
        throw StructuralError("pattern must have 2n-1 rows");
    int n = static_cast<int>(rows.size() + 1) / 2;
    if (n < (allow_rank1 ? 1 : 2)) throw StructuralError("pattern rank must be at least 2");
    for (int r = 1; r <= 2 * n - 1; ++r)
        if (static_cast<int>(rows[static_cast<std::size_t>(r - 1)].size()) != row_width(r))
            throw StructuralError("row " + std::to_string(r) + " must have " +
                                  std::to_string(row_width(r)) + " entries");
    return n;
}

bool uniform_parity(const Weight& w) {
    for (auto x : w)
        if (!same_parity(x, w.front())) return false;
    return true;
}

bool is_dominant_D(const Weight& lambda) {
    if (lambda.empty() || !uniform_parity(lambda)) return false;
    const std::size_t n = lambda.size();
    for (std::size_t i = 0; i + 2 < n; ++i)
        if (lambda[i] < lambda[i + 1]) return false;
    if (n >= 2 && lambda[n - 2] < abs(lambda[n - 1])) return false;
    return true;
}

bool validate_pattern(const std::vector<Row>& rows, const Weight& lambda) {
    const int n = pattern_rank(rows);
    if (static_cast<int>(lambda.size()) != n)
        throw StructuralError("weight length does not match pattern rank");
    if (rows.back() != lambda) return false;
    if (!is_dominant_D(lambda)) return false;
    for (const auto& r : rows)
        for (auto x : r)
            if (!same_parity(x, lambda.front())) return false;
    for (int r = 2 * n - 2; r >= 1; --r)
        if (!row_fits(rows[static_cast<std::size_t>(r - 1)], rows[static_cast<std::size_t>(r)], r)) return false;
    return true;
}

bool is_valid(const GTPattern& q) { return validate_pattern(q.rows, q.top()); }

// Enumeration --------------------------------------------------------------

PatternEnumerator::PatternEnumerator(const Weight& lambda) {
    if (!is_dominant_D(lambda)) throw ParameterError("weight is not dominant for so(2n)");
    cur_.n = static_cast<int>(lambda.size());
    if (cur_.n < 1) throw StructuralError("empty weight");
    cur_.rows.resize(static_cast<std::size_t>(2 * cur_.n - 1));
    for (int r = 1; r <= 2 * cur_.n - 1; ++r) cur_.rows[static_cast<std::size_t>(r - 1)].resize(static_cast<std::size_t>(row_width(r)));
    cur_.rows.back() = lambda;
}

bool PatternEnumerator::reset_row(int r) {
    const Row& upper = cur_.rows[static_cast<std::size_t>(r)];
    Row& row = cur_.rows[static_cast<std::size_t>(r - 1)];
    for (int j = 1; j <= row_width(r); ++j) {
        auto b = entry_bounds(upper, r, j);
        if (b.lo > b.hi) return false;
        row[static_cast<std::size_t>(j - 1)] = b.lo;
    }
    return true;
}

// Odometer step inside the box allowed for row r; the last entry moves fastest.
bool PatternEnumerator::advance_row(int r) {
    const Row& upper = cur_.rows[static_cast<std::size_t>(r)];
    Row& row = cur_.rows[static_cast<std::size_t>(r - 1)];
    for (int j = row_width(r); j >= 1; --j) {
        auto b = entry_bounds(upper, r, j);
        auto& x = row[static_cast<std::size_t>(j - 1)];
        if (x < b.hi) {
            x += 1;
            return true;
        }
        x = b.lo;
    }
    return false;
}

std::optional<GTPattern> PatternEnumerator::next() {
    if (done_) return std::nullopt;
    const int top = 2 * cur_.n - 1;
    if (!started_) {
        started_ = true;
        for (int r = top - 1; r >= 1; --r) reset_row(r);
        return cur_;
    }
    for (int r = 1; r < top; ++r) {
        if (advance_row(r)) {
            for (int s = r - 1; s >= 1; --s) reset_row(s);
            return cur_;
        }
    }
    done_ = true;
    return std::nullopt;
}

std::vector<GTPattern> enumerate_patterns(const Weight& lambda) {
    std::vector<GTPattern> out;
    PatternEnumerator it(lambda);
    while (auto p = it.next()) out.push_back(std::move(*p));
    return out;
}

BigInt count_patterns(const Weight& lambda) {
    BigInt c = 0;
    PatternEnumerator it(lambda);
    while (it.next()) ++c;
    return c;
}

// l-coordinates ------------------------------------------------------------

Row embedded_top_row(const Weight& lambda) {
    Row out(lambda.size());
    for (std::size_t j = 0; j + 1 < lambda.size(); ++j) out[j] = lambda[j] + 1;
    out.back() = abs(lambda.back()) + 1;
    return out;
}

HalfInt l_coord(const GTPattern& q, int row, int j) {
    const int n = q.n;
    if (row < 0 || row > 2 * n) throw StructuralError("l_coord: row out of range");
    const int w = row_width(row);
    if (j > w || -j > w) throw StructuralError("l_coord: index out of range");
    if (row % 2 == 1 && j == 0) throw StructuralError("l_coord: j = 0 only on even rows");
    if (j == 0) return HalfInt(0);
    auto entry = [&](int jj) -> HalfInt {
        if (row == 2 * n) return embedded_top_row(q.top())[static_cast<std::size_t>(jj - 1)];
        return q.q(row, jj);
    };
    const int a = j > 0 ? j : -j;
    if (row % 2 == 1) {
        const int i = (row + 1) / 2;
        HalfInt l = entry(a) + (i - a);
        return j > 0 ? l : -l;
    }
    const int i = row / 2;
    HalfInt l = entry(a) + (i + 1 - a);
    return j > 0 ? l : -l + 1;
}

// Shifts -------------------------------------------------------------------

std::optional<GTPattern> apply_shifts(const GTPattern& q, const std::vector<std::pair<int, int>>& shifts) {
    GTPattern p = q;
    for (auto [a, b] : shifts) {
        if (a < 1 || a > 2 * q.n - 1) throw StructuralError("shift row out of range");
        const int w = row_width(a);
        if (b > w || -b > w) throw StructuralError("shift index out of range");
        if (b == 0) continue;
        p.q(a, b > 0 ? b : -b) += (b > 0 ? 1 : -1);
    }
    if (!is_valid(p)) return std::nullopt;
    return p;
}

std::optional<GTPattern> apply_shift(const GTPattern& q, int a, int b) { return apply_shifts(q, {{a, b}}); }

std::optional<GTPattern> tau(const GTPattern& q, int i, int j) {
    return apply_shifts(q, {{2 * q.n - 2, j}, {2 * q.n - 3, i}});
}

// When lambda_n = 0 the list leaves k = +-n ambiguous (sgn 0); both are then
// treated like the k = sgn(lambda_n) n case, which matches the interlacing
// requirement q_{2n-2,n-1} >= |lambda_n +- 1|.
bool top_shift_case_list(const GTPattern& q, int k) {
    const int n = q.n;
    const auto& lam = q.top();
    auto L = [&](int i) { return lam[static_cast<std::size_t>(i - 1)]; };
    const int s = sgn(L(n));
    if (k == 1) return true;
    if (k >= 2 && k <= n - 1) return q.q(2 * n - 2, k - 1) > L(k);
    if (s != 0 && k == -s * n) return true;
    if (k <= -1 && k >= -n + 1) return q.q(2 * n - 2, -k) < L(-k);
    if (k == n || k == -n) return q.q(2 * n - 2, n - 1) > abs(L(n));
    throw StructuralError("top_shift_case_list: index out of range");
}

// JSON ---------------------------------------------------------------------

std::string to_json(const GTPattern& q) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : q.rows) {
        nlohmann::json jr = nlohmann::json::array();
        for (auto x : r) jr.push_back(x.doubled());
        j.push_back(jr);
    }
    return j.dump();
}

GTPattern pattern_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw StructuralError(std::string("pattern JSON: ") + e.what());
    }
    if (!j.is_array()) throw StructuralError("pattern JSON must be an array of rows");
    GTPattern p;
    for (const auto& jr : j) {
        if (!jr.is_array()) throw StructuralError("pattern JSON rows must be arrays");
        Row r;
        for (const auto& x : jr) {
            if (!x.is_number_integer()) throw StructuralError("pattern entries must be doubled integers");
            r.push_back(HalfInt::from_doubled(x.get<std::int64_t>()));
        }
        p.rows.push_back(std::move(r));
    }
    p.n = pattern_rank(p.rows);
    return p;
}

std::string weight_to_json(const Weight& w) {
    nlohmann::json j = nlohmann::json::array();
    for (auto x : w) {
        if (x.is_integer())
            j.push_back(x.as_int());
        else
            j.push_back(x.to_double());
    }
    return j.dump();
}

}  // namespace whittaker
