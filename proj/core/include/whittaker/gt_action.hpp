#pragma once

#include <complex>
#include <limits>
#include <unordered_map>
#include <utility>
#include <vector>

#include "whittaker/gt_pattern.hpp"

namespace whittaker {

using cplx = std::complex<double>;

// a_{p,q}(Q) = sign * sqrt(radicand). The radicand of the diagonal (j = 0)
// coefficients on even rows is negative, so those values are purely
// imaginary; `imaginary` records that and `value` carries the factor i.
struct ActionCoefficient {
    int sign = 0;
    double log_abs = -std::numeric_limits<double>::infinity();
    bool imaginary = false;
    cplx value{0.0, 0.0};

    bool is_zero() const { return sign == 0; }
};

// The exact quantity under the square root, written -N/D.
// Zero when the numerator vanishes (including 0/0 configurations, which only
// occur for invalid shifts).
Rational a_radicand(const GTPattern& q, int row, int j);
ActionCoefficient a_coeff(const GTPattern& q, int row, int j);

// Basis GT(lambda) with a pattern -> index lookup.
class GTBasis {
public:
    explicit GTBasis(const Weight& lambda);
    const Weight& lambda() const { return lambda_; }
    int n() const { return static_cast<int>(lambda_.size()); }
    std::size_t size() const { return patterns_.size(); }
    const GTPattern& operator[](std::size_t i) const { return patterns_[i]; }
    const std::vector<GTPattern>& patterns() const { return patterns_; }
    // -1 when absent
    long index_of(const GTPattern& p) const;

private:
    Weight lambda_;
    std::vector<GTPattern> patterns_;
    std::unordered_map<GTPattern, std::size_t> index_;
};

// Small dense complex matrix, row-major.
struct CMatrix {
    std::size_t n = 0;
    std::vector<cplx> a;

    explicit CMatrix(std::size_t size = 0) : n(size), a(size * size) {}
    cplx& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
    cplx operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }

    friend CMatrix operator*(const CMatrix& x, const CMatrix& y);
    friend CMatrix operator+(const CMatrix& x, const CMatrix& y);
    friend CMatrix operator-(const CMatrix& x, const CMatrix& y);
};

// tau_lambda(F_{k+1,k}) v for k = 1 .. 2n-1.
std::vector<cplx> apply_generator(const GTBasis& basis, int k, const std::vector<cplx>& v);
// Matrix of F_{i,j}, 1 <= j < i <= 2n; column c holds F applied to basis[c].
CMatrix generator_matrix(const GTBasis& basis, int i, int j);
// C_k = sum_{1 <= j < i <= k} F_{ij}^2 assembled from the represented generators.
CMatrix casimir_matrix(const GTBasis& basis, int k);
// -(|q_{k-1}|^2 + 2 <q_{k-1}, rho_k>) with 2 rho_k = (k-2, k-4, ...).
Rational casimir_scalar(const Row& q_prev, int k);

enum class TensorSource { V2n, V2n1, V2n2 };

// Coefficients of pr_{k,+-}(Q (x) (v^{2n}_src [x] v^2_{tensor})) in the GT basis
// of lambda + e_k. tensor is 1 or 2; sign is +1 or -1 for the Spin(2) shift.
std::vector<std::pair<GTPattern, cplx>> projection_coeff(const GTPattern& q, TensorSource src, int tensor,
                                                         int k, int sign);

}  // namespace whittaker
