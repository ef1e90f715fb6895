#pragma once

// Truncated formal classical pseudo-differential symbols on the circle.
// A homogeneous component of degree k is identified with its values at
// ξ = +1 and ξ = -1, each a truncated Fourier coefficient vector of its
// coefficient function. Only the linear structure is used: the two
// involutions s_kv (degree-graded ξ-reflection) and s_d (multiplication
// by the sign of ξ) generate the four classes odd/even and +/−, and the
// maps Φ inject Laurent series in d/dx into the symbol space.
//
// Representation convention: (d/dx)^k has symbol (iξ)^k, so its value
// pair at ξ = ±1 is (i^k, (−i)^k). The one-sided powers (d/dx)_±^k keep
// only the corresponding slot. This normalization makes Im Φ_{1,1} land
// exactly in the odd class.

#include <cstddef>
#include <vector>

#include "ncr/crossratio.hpp"
#include "ncr/matrix.hpp"
#include "ncr/scalar.hpp"
#include "ncr/splitting.hpp"
#include "ncr/subspace.hpp"

namespace ncr::symbols {

/// Truncation parameters: homogeneity degrees d_min..d_max, Fourier modes
/// -M..M per coefficient function.
struct SymbolSpace {
    int d_min;
    int d_max;
    int M;

    SymbolSpace(int dmin, int dmax, int fourier) : d_min(dmin), d_max(dmax), M(fourier) {
        if (d_min > d_max)
            throw Error("SymbolSpace: d_min exceeds d_max");
        if (M < 0)
            throw Error("SymbolSpace: negative Fourier truncation");
    }

    std::size_t degree_count() const { return static_cast<std::size_t>(d_max - d_min + 1); }
    std::size_t slot_len() const { return static_cast<std::size_t>(2 * M + 1); }
    std::size_t dim() const { return degree_count() * 2 * slot_len(); }

    /// Flat coordinate of Fourier mode m of the ξ=+1 (slot 0) or ξ=-1
    /// (slot 1) value of the degree-k component.
    std::size_t index(int k, int slot, int m) const {
        const std::size_t deg = static_cast<std::size_t>(k - d_min);
        return (deg * 2 + static_cast<std::size_t>(slot)) * slot_len() +
               static_cast<std::size_t>(m + M);
    }

    friend bool operator==(const SymbolSpace& a, const SymbolSpace& b) {
        return a.d_min == b.d_min && a.d_max == b.d_max && a.M == b.M;
    }
};

/// A truncated formal symbol: per degree k the pair (u_k, v_k) of values
/// at ξ = +1 and ξ = -1, flattened into one coordinate vector.
template <class F>
struct FormalSymbol {
    SymbolSpace space;
    Matrix<F> coords; // space.dim() × 1

    explicit FormalSymbol(const SymbolSpace& sp) : space(sp), coords(sp.dim(), 1) {}

    F& u(int k, int m) { return coords(space.index(k, 0, m), 0); }
    F& v(int k, int m) { return coords(space.index(k, 1, m), 0); }
    const F& u(int k, int m) const { return coords(space.index(k, 0, m), 0); }
    const F& v(int k, int m) const { return coords(space.index(k, 1, m), 0); }

    friend bool operator==(const FormalSymbol& a, const FormalSymbol& b) {
        return a.space == b.space && a.coords == b.coords;
    }
};

/// A truncated Laurent series Σ a_k (d/dx)^k over the same degree range.
template <class F>
struct PsiDOElement {
    SymbolSpace space;
    std::vector<F> a; // degree_count × slot_len, degree-major

    explicit PsiDOElement(const SymbolSpace& sp) : space(sp), a(sp.degree_count() * sp.slot_len(), F(0)) {}

    F& at(int k, int m) {
        return a[static_cast<std::size_t>(k - space.d_min) * space.slot_len() +
                 static_cast<std::size_t>(m + space.M)];
    }
    const F& at(int k, int m) const {
        return a[static_cast<std::size_t>(k - space.d_min) * space.slot_len() +
                 static_cast<std::size_t>(m + space.M)];
    }
};

/// s_kv: degree k component (u, v) ↦ (−1)^k (v, u). Involution.
template <class F>
FormalSymbol<F> s_kv(const FormalSymbol<F>& sym) {
    FormalSymbol<F> out(sym.space);
    for (int k = sym.space.d_min; k <= sym.space.d_max; ++k) {
        const F sign = (k % 2 == 0) ? F(1) : F(-1);
        for (int m = -sym.space.M; m <= sym.space.M; ++m) {
            out.u(k, m) = sign * sym.v(k, m);
            out.v(k, m) = sign * sym.u(k, m);
        }
    }
    return out;
}

/// s_d: multiplication by ξ/|ξ|, i.e. (u, v) ↦ (u, −v). Involution.
template <class F>
FormalSymbol<F> s_d(const FormalSymbol<F>& sym) {
    FormalSymbol<F> out(sym.space);
    for (int k = sym.space.d_min; k <= sym.space.d_max; ++k)
        for (int m = -sym.space.M; m <= sym.space.M; ++m) {
            out.u(k, m) = sym.u(k, m);
            out.v(k, m) = -sym.v(k, m);
        }
    return out;
}

template <class F>
Matrix<F> s_kv_matrix(const SymbolSpace& sp) {
    Matrix<F> m(sp.dim(), sp.dim());
    for (int k = sp.d_min; k <= sp.d_max; ++k) {
        const F sign = (k % 2 == 0) ? F(1) : F(-1);
        for (int mm = -sp.M; mm <= sp.M; ++mm) {
            m(sp.index(k, 0, mm), sp.index(k, 1, mm)) = sign;
            m(sp.index(k, 1, mm), sp.index(k, 0, mm)) = sign;
        }
    }
    return m;
}

template <class F>
Matrix<F> s_d_matrix(const SymbolSpace& sp) {
    Matrix<F> m(sp.dim(), sp.dim());
    for (int k = sp.d_min; k <= sp.d_max; ++k)
        for (int mm = -sp.M; mm <= sp.M; ++mm) {
            m(sp.index(k, 0, mm), sp.index(k, 0, mm)) = F(1);
            m(sp.index(k, 1, mm), sp.index(k, 1, mm)) = F(-1);
        }
    return m;
}

// The four classes, as canonical subspaces of the flattened space.
template <class F>
Subspace<F> subspace_odd(const SymbolSpace& sp) { // fixed points of s_kv
    return kernel_subspace(Matrix<F>::identity(sp.dim()) - s_kv_matrix<F>(sp));
}
template <class F>
Subspace<F> subspace_even(const SymbolSpace& sp) { // anti-fixed points of s_kv
    return kernel_subspace(Matrix<F>::identity(sp.dim()) + s_kv_matrix<F>(sp));
}
template <class F>
Subspace<F> subspace_plus(const SymbolSpace& sp) { // symbols supported on ξ > 0
    return kernel_subspace(Matrix<F>::identity(sp.dim()) - s_d_matrix<F>(sp));
}
template <class F>
Subspace<F> subspace_minus(const SymbolSpace& sp) { // symbols supported on ξ < 0
    return kernel_subspace(Matrix<F>::identity(sp.dim()) + s_d_matrix<F>(sp));
}

/// Φ_{λ,μ}: a_k (d/dx)^k ↦ a_k (λ^k (d/dx)_+^k + μ^k (d/dx)_-^k), with
/// the convention 0^k = 0 for every k.
template <class F>
FormalSymbol<F> phi_lambda_mu(const PsiDOElement<F>& p, const F& lambda, const F& mu) {
    if (FieldTraits<F>::is_zero(lambda) && FieldTraits<F>::is_zero(mu))
        throw BothParametersZero("phi_lambda_mu: (λ, μ) = (0, 0)");
    FormalSymbol<F> out(p.space);
    for (int k = p.space.d_min; k <= p.space.d_max; ++k) {
        const F up = power_zero_convention(lambda, k) * imag_unit_pow<F>(k);
        const F vp = power_zero_convention(mu, k) * imag_unit_pow<F>(-k);
        for (int m = -p.space.M; m <= p.space.M; ++m) {
            out.u(k, m) = up * p.at(k, m);
            out.v(k, m) = vp * p.at(k, m);
        }
    }
    return out;
}

/// Φ_{ε(D),λ}: a_k (d/dx)^k ↦ a_k ε(D) (λ d/dx)^k; ε(D) has symbol
/// ξ/|ξ|, so the pair is (λ^k i^k a_k, −λ^k (−i)^k a_k).
template <class F>
FormalSymbol<F> phi_epsilon_lambda(const PsiDOElement<F>& p, const F& lambda) {
    if (FieldTraits<F>::is_zero(lambda))
        throw ZeroParameter("phi_epsilon_lambda: λ = 0");
    FormalSymbol<F> out(p.space);
    for (int k = p.space.d_min; k <= p.space.d_max; ++k) {
        const F lk = power_zero_convention(lambda, k);
        const F up = lk * imag_unit_pow<F>(k);
        const F vp = -lk * imag_unit_pow<F>(-k);
        for (int m = -p.space.M; m <= p.space.M; ++m) {
            out.u(k, m) = up * p.at(k, m);
            out.v(k, m) = vp * p.at(k, m);
        }
    }
    return out;
}

/// Image of Φ_{λ,μ} over the whole truncated Laurent domain, as a
/// canonical subspace.
template <class F>
Subspace<F> image_phi_lambda_mu(const SymbolSpace& sp, const F& lambda, const F& mu) {
    Matrix<F> columns(sp.dim(), sp.degree_count() * sp.slot_len());
    std::size_t c = 0;
    for (int k = sp.d_min; k <= sp.d_max; ++k)
        for (int m = -sp.M; m <= sp.M; ++m, ++c) {
            PsiDOElement<F> e(sp);
            e.at(k, m) = F(1);
            columns.set_block(0, c, phi_lambda_mu(e, lambda, mu).coords);
        }
    return Subspace<F>::column_space(columns);
}

template <class F>
Subspace<F> image_phi_epsilon_lambda(const SymbolSpace& sp, const F& lambda) {
    Matrix<F> columns(sp.dim(), sp.degree_count() * sp.slot_len());
    std::size_t c = 0;
    for (int k = sp.d_min; k <= sp.d_max; ++k)
        for (int m = -sp.M; m <= sp.M; ++m, ++c) {
            PsiDOElement<F> e(sp);
            e.at(k, m) = F(1);
            columns.set_block(0, c, phi_epsilon_lambda(e, lambda).coords);
        }
    return Subspace<F>::column_space(columns);
}

enum class Side { plus, minus };

/// Whether (FCl_±, Im Φ_{λ,μ}) is a splitting of the truncated symbol
/// space. Measures the parameter region computationally instead of
/// asserting a closed-form set.
template <class F>
bool splitting_region_check(const SymbolSpace& sp, const F& lambda, const F& mu, Side side) {
    if (FieldTraits<F>::is_zero(lambda) && FieldTraits<F>::is_zero(mu))
        throw BothParametersZero("splitting_region_check: (λ, μ) = (0, 0)");
    const Subspace<F> image = image_phi_lambda_mu(sp, lambda, mu);
    const Subspace<F> fixed = side == Side::plus ? subspace_plus<F>(sp) : subspace_minus<F>(sp);
    return is_splitting(fixed, image);
}

/// The headline identity at truncation: the couple
/// ((FCl₊, FCl₋), (FCl_odd, FCl_even)) is admissible and its tilde_dv is
/// 2·Id on the whole truncated symbol space. Returns the computed
/// tilde_dv so callers can assert the value.
template <class F>
Matrix<F> cross_ratio_theorem_check(const SymbolSpace& sp) {
    SplittingPair<F> pair{Splitting<F>(subspace_plus<F>(sp), subspace_minus<F>(sp)),
                          Splitting<F>(subspace_odd<F>(sp), subspace_even<F>(sp))};
    require_admissible(pair, "cross_ratio_theorem_check");
    return tilde_dv(pair);
}

} // namespace ncr::symbols
