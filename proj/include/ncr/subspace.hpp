#pragma once

// Subspaces of a fixed finite-dimensional coordinate space, stored through
// a canonical basis: the reduced column echelon form (RREF of the spanning
// vectors laid out as rows, transposed back). The form is unique, so two
// Subspace values are equal exactly when they describe the same subspace.

#include <cstddef>
#include <optional>
#include <vector>

#include "ncr/linalg.hpp"
#include "ncr/matrix.hpp"

namespace ncr {

template <class F>
class Subspace {
public:
    Subspace() : ambient_(0) {}

    /// The span of m's columns, canonicalized.
    static Subspace column_space(const Matrix<F>& m) {
        Matrix<F> rows = m.transposed();
        const auto pivots = rref_in_place(rows);
        Matrix<F> basis(m.rows(), pivots.size());
        for (std::size_t k = 0; k < pivots.size(); ++k)
            for (std::size_t i = 0; i < m.rows(); ++i)
                basis(i, k) = rows(k, i);
        return Subspace(m.rows(), std::move(basis));
    }

    static Subspace zero(std::size_t ambient) { return Subspace(ambient, Matrix<F>(ambient, 0)); }
    static Subspace full(std::size_t ambient) {
        return Subspace(ambient, Matrix<F>::identity(ambient));
    }

    /// Coordinate subspace spanned by the given axes.
    static Subspace coordinate(std::size_t ambient, const std::vector<std::size_t>& axes) {
        Matrix<F> b(ambient, axes.size());
        for (std::size_t k = 0; k < axes.size(); ++k)
            b(axes[k], k) = F(1);
        return column_space(b);
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.cols(); }
    const Matrix<F>& basis() const { return basis_; }

    /// Coordinates of a column vector in the canonical basis, if it lies
    /// in the subspace.
    std::optional<Matrix<F>> coordinates(const Matrix<F>& v) const {
        if (v.rows() != ambient_ || v.cols() != 1)
            throw DimensionMismatch("Subspace::coordinates: expected an ambient column vector");
        return solve(basis_, v);
    }

    bool contains(const Matrix<F>& v) const { return coordinates(v).has_value(); }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    Subspace(std::size_t ambient, Matrix<F> basis) : ambient_(ambient), basis_(std::move(basis)) {}

    std::size_t ambient_;
    Matrix<F> basis_; // ambient x dim, reduced column echelon form
};

template <class F>
void require_same_ambient(const Subspace<F>& a, const Subspace<F>& b, const char* what) {
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionMismatch(std::string(what) + ": ambient dimensions differ");
}

/// a ∩ b, via the nullspace of [B_a | -B_b].
template <class F>
Subspace<F> intersect(const Subspace<F>& a, const Subspace<F>& b) {
    require_same_ambient(a, b, "intersect");
    if (a.dim() == 0 || b.dim() == 0)
        return Subspace<F>::zero(a.ambient_dim());
    const Matrix<F> stacked = hstack(a.basis(), -b.basis());
    const Matrix<F> null_basis = kernel(stacked);
    const Matrix<F> a_part = null_basis.block(0, 0, a.dim(), null_basis.cols());
    return Subspace<F>::column_space(a.basis() * a_part);
}

template <class F>
Subspace<F> sum(const Subspace<F>& a, const Subspace<F>& b) {
    require_same_ambient(a, b, "sum");
    return Subspace<F>::column_space(hstack(a.basis(), b.basis()));
}

/// Image of a subspace under a linear map.
template <class F>
Subspace<F> image(const Matrix<F>& m, const Subspace<F>& s) {
    if (m.cols() != s.ambient_dim())
        throw DimensionMismatch("image: map and subspace ambient dimensions differ");
    return Subspace<F>::column_space(m * s.basis());
}

/// {x : m x = 0} as a canonical subspace.
template <class F>
Subspace<F> kernel_subspace(const Matrix<F>& m) {
    return Subspace<F>::column_space(kernel(m));
}

} // namespace ncr
