#pragma once

// Field-generic Gauss-Jordan elimination and everything derived from it:
// rank, nullspace, linear solves, inversion. Over exact fields the results
// are exact; over floats pivots are accepted only above the documented
// tolerance threshold (|pivot| > tol * max(1, row max)).

#include <cstddef>
#include <optional>
#include <vector>

#include "ncr/matrix.hpp"

namespace ncr {

/// Reduces m to reduced row echelon form in place. Returns the pivot
/// column indices in order. Eliminated entries are written as exact zeros
/// so downstream canonical-form comparisons stay clean.
template <class F>
std::vector<std::size_t> rref_in_place(Matrix<F>& m) {
    using T = FieldTraits<F>;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t best = row;
        double best_w = T::weight(m(row, col));
        for (std::size_t r = row + 1; r < m.rows(); ++r) {
            const double w = T::weight(m(r, col));
            if (w > best_w) {
                best = r;
                best_w = w;
            }
        }
        if (best_w == 0.0)
            continue;
        if constexpr (!T::exact) {
            double row_scale = 0.0;
            for (std::size_t j = 0; j < m.cols(); ++j)
                row_scale = std::max(row_scale, T::weight(m(best, j)));
            if (T::negligible(m(best, col), row_scale)) {
                for (std::size_t r = row; r < m.rows(); ++r)
                    m(r, col) = F(0);
                continue;
            }
        }
        m.swap_rows(row, best);
        const F inv = F(1) / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j)
            m(row, j) = inv * m(row, j);
        m(row, col) = F(1);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row)
                continue;
            const F factor = m(r, col);
            if (T::is_zero(factor))
                continue;
            for (std::size_t j = col; j < m.cols(); ++j)
                m(r, j) = m(r, j) - factor * m(row, j);
            m(r, col) = F(0);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class F>
std::size_t rank(Matrix<F> m) {
    return rref_in_place(m).size();
}

/// Basis of the right nullspace {x : m x = 0}, one solution per column.
template <class F>
Matrix<F> kernel(Matrix<F> m) {
    const std::size_t n = m.cols();
    const auto pivots = rref_in_place(m);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots)
        is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c])
            free_cols.push_back(c);
    Matrix<F> basis(n, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        basis(free_cols[k], k) = F(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            basis(pivots[r], k) = -m(r, free_cols[k]);
    }
    return basis;
}

/// Solves A X = B for one particular solution (free variables set to 0).
/// Returns nullopt when the system is inconsistent.
template <class F>
std::optional<Matrix<F>> solve(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.rows() != b.rows())
        throw DimensionMismatch("solve: row counts differ");
    Matrix<F> aug = hstack(a, b);
    const auto pivots = rref_in_place(aug);
    for (auto c : pivots)
        if (c >= a.cols())
            return std::nullopt;
    Matrix<F> x(a.cols(), b.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x(pivots[r], j) = aug(r, a.cols() + j);
    return x;
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& a) {
    if (!a.is_square())
        throw DimensionMismatch("inverse: matrix not square");
    Matrix<F> aug = hstack(a, Matrix<F>::identity(a.rows()));
    const auto pivots = rref_in_place(aug);
    // [A | I] always has full row rank; A is invertible iff no pivot
    // spilled into the identity half.
    if (pivots.size() != a.rows() || (!pivots.empty() && pivots.back() >= a.cols()))
        return std::nullopt;
    return aug.block(0, a.rows(), a.rows(), a.rows());
}

template <class F>
bool is_invertible(const Matrix<F>& a) {
    return a.is_square() && rank(a) == a.rows();
}

} // namespace ncr
