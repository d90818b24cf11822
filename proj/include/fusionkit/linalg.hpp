#pragma once

#include <optional>
#include <vector>

#include "fusionkit/scalars.hpp"

namespace fusionkit {

template <class F>
using Matrix = std::vector<std::vector<F>>;

namespace field {
inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const Scalar& x) { return x.is_zero(); }
inline bool is_zero(const BigComplex& x) { return x.abs() <= Precision::tolerance(); }
template <class F>
F one() {
    return F(Rational(1));
}
}  // namespace field

/// In-place reduced row echelon form; returns the pivot column of each
/// nonzero row (row rank = pivots.size()).
template <class F>
std::vector<size_t> rref(Matrix<F>& a) {
    std::vector<size_t> pivots;
    if (a.empty()) return pivots;
    size_t rows = a.size(), cols = a[0].size(), r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && field::is_zero(a[p][c])) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        F inv = field::one<F>() / a[r][c];
        for (size_t j = c; j < cols; ++j) a[r][j] = a[r][j] * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || field::is_zero(a[i][c])) continue;
            F f = a[i][c];
            for (size_t j = c; j < cols; ++j) a[i][j] = a[i][j] - f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class F>
size_t rank(Matrix<F> a) {
    return rref(a).size();
}

/// Basis of the right kernel {x : A x = 0}.
template <class F>
Matrix<F> kernel_basis(Matrix<F> a) {
    if (a.empty()) return {};
    size_t cols = a[0].size();
    auto pivots = rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    Matrix<F> basis;
    for (size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<F> v(cols, F(Rational(0)));
        v[fc] = field::one<F>();
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][fc];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Solve A x = b; nullopt when inconsistent. Underdetermined systems return
/// the solution with free variables set to zero.
template <class F>
std::optional<std::vector<F>> solve(Matrix<F> a, std::vector<F> b) {
    size_t rows = a.size();
    if (rows == 0) return std::vector<F>{};
    size_t cols = a[0].size();
    for (size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
    auto pivots = rref(a);
    std::vector<F> x(cols, F(Rational(0)));
    for (size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == cols) return std::nullopt;  // pivot in augmented column
        x[pivots[r]] = a[r][cols];
    }
    return x;
}

template <class F>
std::vector<F> mat_vec(const Matrix<F>& a, const std::vector<F>& v) {
    std::vector<F> out(a.size(), F(Rational(0)));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) out[i] = out[i] + a[i][j] * v[j];
    return out;
}

}  // namespace fusionkit
