#pragma once

// Truncated model of L²(S¹, ℂ): coordinates indexed by the Fourier modes
// n ∈ {-N..N}, the Dirac polarization E₊ ⊕ E₀ ⊕ E₋, the two realizations
// H₁ = {Σ cₙ = 0} and H₂ = {c₀ = 0} of the quotient by constants, and the
// restricted-algebra block structure with respect to H₊ = E₊ ⊕ E₀,
// H₋ = E₋.

#include <cmath>
#include <cstddef>
#include <vector>

#include "ncr/crossratio.hpp"
#include "ncr/matrix.hpp"
#include "ncr/scalar.hpp"
#include "ncr/splitting.hpp"
#include "ncr/subspace.hpp"

namespace ncr::fourier {

template <class F = GaussianRational>
struct Model {
    int N;

    explicit Model(int truncation) : N(truncation) {
        if (N < 1)
            throw Error("fourier::Model: truncation must be at least 1");
    }

    std::size_t ambient_dim() const { return static_cast<std::size_t>(2 * N + 1); }
    std::size_t index(int n) const { return static_cast<std::size_t>(n + N); }

    std::vector<std::size_t> plus_indices() const { // H₊ = modes n ≥ 0
        std::vector<std::size_t> out;
        for (int n = 0; n <= N; ++n)
            out.push_back(index(n));
        return out;
    }
    std::vector<std::size_t> minus_indices() const { // H₋ = modes n < 0
        std::vector<std::size_t> out;
        for (int n = -N; n < 0; ++n)
            out.push_back(index(n));
        return out;
    }

    Subspace<F> e_plus() const {
        std::vector<std::size_t> axes;
        for (int n = 1; n <= N; ++n)
            axes.push_back(index(n));
        return Subspace<F>::coordinate(ambient_dim(), axes);
    }
    Subspace<F> e_minus() const {
        std::vector<std::size_t> axes;
        for (int n = -N; n < 0; ++n)
            axes.push_back(index(n));
        return Subspace<F>::coordinate(ambient_dim(), axes);
    }
    Subspace<F> e_zero() const { return Subspace<F>::coordinate(ambient_dim(), {index(0)}); }

    Subspace<F> h_plus() const { return Subspace<F>::coordinate(ambient_dim(), plus_indices()); }
    Subspace<F> h_minus() const { return Subspace<F>::coordinate(ambient_dim(), minus_indices()); }

    /// Truncation of {f : f(0) = 0}: evaluation of Σ cₙ zⁿ at the base
    /// point is Σ cₙ, so H₁ = {Σ cₙ = 0}.
    Subspace<F> h1() const {
        Matrix<F> ones(1, ambient_dim());
        for (std::size_t j = 0; j < ambient_dim(); ++j)
            ones(0, j) = F(1);
        return kernel_subspace(ones);
    }

    /// Truncation of {f : ∫ f = 0} = {c₀ = 0} = E₊ ⊕ E₋.
    Subspace<F> h2() const {
        std::vector<std::size_t> axes;
        for (int n = -N; n <= N; ++n)
            if (n != 0)
                axes.push_back(index(n));
        return Subspace<F>::coordinate(ambient_dim(), axes);
    }

    /// The polarization symmetry: +1 on modes n ≥ 0, -1 on modes n < 0,
    /// so that pol(epsilon) = (H₊, H₋).
    Matrix<F> epsilon() const {
        Matrix<F> s(ambient_dim(), ambient_dim());
        for (int n = -N; n <= N; ++n)
            s(index(n), index(n)) = n >= 0 ? F(1) : F(-1);
        return s;
    }
};

/// The admissible couple ((E₀,H₁),(E₀,H₂)).
template <class F>
SplittingPair<F> h1_h2_pair(const Model<F>& m) {
    return SplittingPair<F>{Splitting<F>(m.e_zero(), m.h1()), Splitting<F>(m.e_zero(), m.h2())};
}

/// The cross-ratio of ((E₀,H₁),(E₀,H₂)) on E₀ (a 1×1 identity; the
/// ambient tilde_dv of the same couple is the identity of the whole
/// space, see the tests and the demo driver).
template <class F>
RestrictedMap<F> dv_h1_h2(const Model<F>& m) {
    return dv(h1_h2_pair(m));
}

/// Hilbert-Schmidt (Frobenius) norm; the sum of |entry|² is accumulated
/// exactly for exact fields.
template <class F>
double hs_norm(const Matrix<F>& a) {
    auto total = abs_sq(F(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            total += abs_sq(a(i, j));
    return std::sqrt(to_double(total));
}

/// Largest singular value, estimated by power iteration on a*ᵀa to
/// relative tolerance 1e-8 (exact maximum for diagonal matrices).
template <class F>
double operator_norm_estimate(const Matrix<F>& a) {
    const std::size_t n = a.cols();
    if (n == 0 || a.rows() == 0)
        return 0.0;
    bool diagonal = true;
    for (std::size_t i = 0; i < a.rows() && diagonal; ++i)
        for (std::size_t j = 0; j < a.cols() && diagonal; ++j)
            if (i != j && !FieldTraits<F>::is_zero(a(i, j)))
                diagonal = false;
    if (diagonal) {
        double best = 0.0;
        for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i)
            best = std::max(best, std::sqrt(to_double(abs_sq(a(i, i)))));
        return best;
    }

    // Hermitian Gram matrix aᴴa in double precision, then power
    // iteration for its top eigenvalue = σ_max².
    std::vector<std::vector<Complex>> g(n, std::vector<Complex>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Complex sum = 0.0;
            for (std::size_t k = 0; k < a.rows(); ++k)
                sum += std::conj(to_complex(a(k, i))) * to_complex(a(k, j));
            g[i][j] = sum;
        }
    std::vector<Complex> v(n, Complex(1.0, 0.0));
    double lambda = 0.0;
    for (int iter = 0; iter < 10000; ++iter) {
        std::vector<Complex> w(n, Complex(0.0, 0.0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                w[i] += g[i][j] * v[j];
        double norm = 0.0;
        for (const Complex& x : w)
            norm += std::norm(x);
        norm = std::sqrt(norm);
        if (norm == 0.0)
            return 0.0;
        for (Complex& x : w)
            x /= norm;
        Complex rayleigh = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                rayleigh += std::conj(w[i]) * g[i][j] * w[j];
        const double next = rayleigh.real();
        const bool settled = std::abs(next - lambda) <= 1e-8 * std::max(1.0, std::abs(next));
        lambda = next;
        v = std::move(w);
        if (settled)
            break;
    }
    return std::sqrt(std::max(0.0, lambda));
}

/// The restricted-algebra seminorm ‖a‖_{L(H)} + ‖[ε,a]‖₂ at truncation.
template <class F>
double l_res_seminorm(const Matrix<F>& a, const Model<F>& m) {
    const Matrix<F> eps = m.epsilon();
    const Matrix<F> comm = eps * a - a * eps;
    return operator_norm_estimate(a) + hs_norm(comm);
}

/// Off-diagonal blocks of s with respect to the (H₊, H₋) index split.
template <class F>
Matrix<F> block_minus_plus(const Matrix<F>& a, const Model<F>& m) {
    return a.submatrix(m.minus_indices(), m.plus_indices());
}
template <class F>
Matrix<F> block_plus_minus(const Matrix<F>& a, const Model<F>& m) {
    return a.submatrix(m.plus_indices(), m.minus_indices());
}

/// The block-injectivity criterion for ((H₊,H₋), pol(s)) being admissible:
/// both off-diagonal blocks s₋₊ and s₊₋ have zero kernel. At odd
/// truncation 2N+1 the blocks are never square, so this is strictly
/// stronger than admissibility itself: injective blocks imply an
/// admissible couple, not conversely. The tests pin down the exact
/// relationship.
template <class F>
bool admissible_with_polarization(const Matrix<F>& s, const Model<F>& m) {
    if (!is_symmetry(s))
        throw NotASymmetry("admissible_with_polarization: s² ≠ Id");
    const Matrix<F> s_mp = block_minus_plus(s, m);
    const Matrix<F> s_pm = block_plus_minus(s, m);
    return rank(s_mp) == s_mp.cols() && rank(s_pm) == s_pm.cols();
}

/// Max-entry magnitude of the residual of the four block equations a
/// transport g with (g(H₊), g(H₋)) = pol(s) must satisfy:
///   g₊₊ = s₊₊g₊₊ + s₊₋g₋₊        g₊₋ = −(s₊₊g₊₋ + s₊₋g₋₋)
///   g₋₊ = s₋₊g₊₊ + s₋₋g₋₊        g₋₋ = −(s₋₊g₊₋ + s₋₋g₋₋)
template <class F>
double g_transport_residual(const Matrix<F>& g, const Matrix<F>& s, const Model<F>& m) {
    if (!is_symmetry(s))
        throw NotASymmetry("g_transport_residual: s² ≠ Id");
    const auto P = m.plus_indices();
    const auto Mi = m.minus_indices();
    const Matrix<F> g_pp = g.submatrix(P, P), g_pm = g.submatrix(P, Mi);
    const Matrix<F> g_mp = g.submatrix(Mi, P), g_mm = g.submatrix(Mi, Mi);
    const Matrix<F> s_pp = s.submatrix(P, P), s_pm = s.submatrix(P, Mi);
    const Matrix<F> s_mp = s.submatrix(Mi, P), s_mm = s.submatrix(Mi, Mi);
    const Matrix<F> r1 = g_pp - (s_pp * g_pp + s_pm * g_mp);
    const Matrix<F> r2 = g_pm + (s_pp * g_pm + s_pm * g_mm);
    const Matrix<F> r3 = g_mp - (s_mp * g_pp + s_mm * g_mp);
    const Matrix<F> r4 = g_mm + (s_mp * g_pm + s_mm * g_mm);
    double worst = 0.0;
    for (const Matrix<F>* r : {&r1, &r2, &r3, &r4})
        for (std::size_t i = 0; i < r->rows(); ++i)
            for (std::size_t j = 0; j < r->cols(); ++j)
                worst = std::max(worst, std::sqrt(to_double(abs_sq((*r)(i, j)))));
    return worst;
}

} // namespace ncr::fourier
