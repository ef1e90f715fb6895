#pragma once

// Splittings V ⊕ W of the ambient space, the projector/symmetry
// correspondence (p² = p, s = 2p − Id), and the tangent/normal
// decomposition a = (a − sas)/2 + (a + sas)/2 induced by a symmetry.

#include <cstddef>
#include <utility>

#include "ncr/errors.hpp"
#include "ncr/linalg.hpp"
#include "ncr/matrix.hpp"
#include "ncr/subspace.hpp"

namespace ncr {

template <class F>
bool is_splitting(const Subspace<F>& v, const Subspace<F>& w) {
    require_same_ambient(v, w, "is_splitting");
    return v.dim() + w.dim() == v.ambient_dim() && intersect(v, w).dim() == 0;
}

/// An ordered pair of complementary subspaces. Validated on construction.
template <class F>
class Splitting {
public:
    Splitting(Subspace<F> v, Subspace<F> w) : v_(std::move(v)), w_(std::move(w)) {
        if (!is_splitting(v_, w_))
            throw NotASplitting("subspaces are not complementary");
    }

    const Subspace<F>& v() const { return v_; }
    const Subspace<F>& w() const { return w_; }
    std::size_t ambient_dim() const { return v_.ambient_dim(); }

    friend bool operator==(const Splitting& a, const Splitting& b) {
        return a.v_ == b.v_ && a.w_ == b.w_;
    }
    friend bool operator!=(const Splitting& a, const Splitting& b) { return !(a == b); }

private:
    Subspace<F> v_;
    Subspace<F> w_;
};

template <class F>
bool is_projector(const Matrix<F>& p) {
    return p.is_square() && p * p == p;
}

template <class F>
bool is_symmetry(const Matrix<F>& s) {
    return s.is_square() && s * s == Matrix<F>::identity(s.rows());
}

/// The projector with image v and kernel w, from p·[B_v | B_w] = [B_v | 0].
template <class F>
Matrix<F> projector(const Subspace<F>& v, const Subspace<F>& w) {
    if (!is_splitting(v, w))
        throw NotASplitting("projector: (v, w) is not a splitting");
    const std::size_t n = v.ambient_dim();
    const Matrix<F> both = hstack(v.basis(), w.basis());
    const Matrix<F> target = hstack(v.basis(), Matrix<F>(n, w.dim()));
    return target * inverse(both).value();
}

template <class F>
Matrix<F> projector(const Splitting<F>& s) {
    return projector(s.v(), s.w());
}

template <class F>
Matrix<F> symmetry_of(const Matrix<F>& p) {
    if (!is_projector(p))
        throw NotAProjector("symmetry_of: p² ≠ p");
    return F(2) * p - Matrix<F>::identity(p.rows());
}

/// Pol: the (+1, −1) eigenspace pair (Ker(s − Id), Ker(s + Id)) of a
/// symmetry. Inverse of Splitting → symmetry_of(projector(·)).
template <class F>
Splitting<F> pol(const Matrix<F>& s) {
    if (!is_symmetry(s))
        throw NotASymmetry("pol: s² ≠ Id");
    const Matrix<F> id = Matrix<F>::identity(s.rows());
    return Splitting<F>(kernel_subspace(s - id), kernel_subspace(s + id));
}

template <class F>
Matrix<F> anticommutator(const Matrix<F>& s, const Matrix<F>& u) {
    if (!s.is_square() || !u.is_square() || s.rows() != u.rows())
        throw DimensionMismatch("anticommutator: endomorphism dimensions differ");
    return u * s + s * u;
}

/// Whether s + u is again a symmetry, via su + us + u² = 0.
template <class F>
bool is_symmetry_perturbation(const Matrix<F>& s, const Matrix<F>& u) {
    if (!is_symmetry(s))
        throw NotASymmetry("is_symmetry_perturbation: s² ≠ Id");
    return (s * u + u * s + u * u).is_zero();
}

template <class F>
Matrix<F> pi_tangent(const Matrix<F>& s, const Matrix<F>& a) {
    if (!is_symmetry(s))
        throw NotASymmetry("pi_tangent: s² ≠ Id");
    const F half = F(1) / F(2);
    return half * (a - s * a * s);
}

template <class F>
Matrix<F> pi_normal(const Matrix<F>& s, const Matrix<F>& a) {
    if (!is_symmetry(s))
        throw NotASymmetry("pi_normal: s² ≠ Id");
    const F half = F(1) / F(2);
    return half * (a + s * a * s);
}

/// a anticommutes with s (a in the tangent part).
template <class F>
bool is_tangent(const Matrix<F>& s, const Matrix<F>& a) {
    if (!is_symmetry(s))
        throw NotASymmetry("is_tangent: s² ≠ Id");
    return (a * s + s * a).is_zero();
}

/// a commutes with s (a in the normal part).
template <class F>
bool is_normal(const Matrix<F>& s, const Matrix<F>& a) {
    if (!is_symmetry(s))
        throw NotASymmetry("is_normal: s² ≠ Id");
    return (a * s - s * a).is_zero();
}

} // namespace ncr
