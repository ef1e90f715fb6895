#pragma once

// Dense row-major matrices over any FieldTraits scalar. Equality is the
// field's equality (exact, or tolerance-relative for floats), so matrix
// comparison is the right notion for every field.

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <utility>
#include <vector>

#include "ncr/errors.hpp"
#include "ncr/scalar.hpp"

namespace ncr {

template <class F>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, F(0)) {}
    Matrix(std::initializer_list<std::initializer_list<F>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        e_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_)
                throw DimensionMismatch("matrix initializer rows have unequal lengths");
            for (const auto& x : r)
                e_.push_back(x);
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = F(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    F& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b)
            return;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix conj_transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = FieldTraits<F>::conj((*this)(i, j));
        return t;
    }

    Matrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const {
        Matrix b(nrows, ncols);
        for (std::size_t i = 0; i < nrows; ++i)
            for (std::size_t j = 0; j < ncols; ++j)
                b(i, j) = (*this)(row0 + i, col0 + j);
        return b;
    }

    void set_block(std::size_t row0, std::size_t col0, const Matrix& b) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j)
                (*this)(row0 + i, col0 + j) = b(i, j);
    }

    Matrix col(std::size_t j) const { return block(0, j, rows_, 1); }

    /// Rows and columns restricted to the given index lists, in order.
    Matrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
        Matrix s(rows.size(), cols.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j)
                s(i, j) = (*this)(rows[i], cols[j]);
        return s;
    }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!FieldTraits<F>::is_zero(x))
                return false;
        return true;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        require_same_shape(a, b, "+");
        Matrix c(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.e_.size(); ++k)
            c.e_[k] = a.e_[k] + b.e_[k];
        return c;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        require_same_shape(a, b, "-");
        Matrix c(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.e_.size(); ++k)
            c.e_[k] = a.e_[k] - b.e_[k];
        return c;
    }
    friend Matrix operator-(const Matrix& a) {
        Matrix c(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.e_.size(); ++k)
            c.e_[k] = -a.e_[k];
        return c;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw DimensionMismatch("matrix product: inner dimensions differ");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const F& aik = a(i, k);
                if (FieldTraits<F>::exact && FieldTraits<F>::is_zero(aik))
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    c(i, j) += aik * b(k, j);
            }
        return c;
    }
    friend Matrix operator*(const F& s, const Matrix& a) {
        Matrix c(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.e_.size(); ++k)
            c.e_[k] = s * a.e_[k];
        return c;
    }
    friend Matrix operator*(const Matrix& a, const F& s) { return s * a; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            return false;
        for (std::size_t k = 0; k < a.e_.size(); ++k)
            if (!FieldTraits<F>::eq(a.e_[k], b.e_[k]))
                return false;
        return true;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
        os << "[";
        for (std::size_t i = 0; i < m.rows_; ++i) {
            os << (i == 0 ? "[" : " [");
            for (std::size_t j = 0; j < m.cols_; ++j)
                os << (j == 0 ? "" : ", ") << m(i, j);
            os << "]" << (i + 1 == m.rows_ ? "" : "\n");
        }
        return os << "]";
    }

private:
    static void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw DimensionMismatch(std::string("matrix ") + op + ": shapes differ");
    }

    std::size_t rows_;
    std::size_t cols_;
    std::vector<F> e_;
};

template <class F>
Matrix<F> hstack(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.rows() != b.rows())
        throw DimensionMismatch("hstack: row counts differ");
    Matrix<F> c(a.rows(), a.cols() + b.cols());
    c.set_block(0, 0, a);
    c.set_block(0, a.cols(), b);
    return c;
}

template <class F>
Matrix<F> vstack(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.cols() != b.cols())
        throw DimensionMismatch("vstack: column counts differ");
    Matrix<F> c(a.rows() + b.rows(), a.cols());
    c.set_block(0, 0, a);
    c.set_block(a.rows(), 0, b);
    return c;
}

} // namespace ncr
