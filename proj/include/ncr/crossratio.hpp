#pragma once

// The non-commutative cross-ratio of an admissible couple of splittings
// and the maps built from it.
//
// A couple ((V1,W1),(V2,W2)) of splittings is admissible when the crossed
// pairs (V1,W2) and (V2,W1) are splittings too. For such a couple:
//
//   dv        : V1 → V1, project onto V2 along W1 then onto V1 along W2;
//               invertible, with dv(pair)⁻¹ = dv of the W-swapped couple.
//   phi       : the same map widened to the whole space by precomposing
//               with the projection onto V1 along W1; kernel contains W1,
//               image sits inside V1, and phi commutes with the symmetry
//               of (V1,W1).
//   tilde_dv  : phi of the couple plus phi of the component-flipped couple
//               ((W1,V1),(W2,V2)); invertible, preserves both V1 and W1.
//   xi        : tilde_dv of the couple composed with tilde_dv of the
//               W-swapped couple; fixes V1 pointwise and therefore acts on
//               the set of complements of V1 (the relative Grassmannian).

#include <cstddef>
#include <string>
#include <utility>

#include "ncr/errors.hpp"
#include "ncr/linalg.hpp"
#include "ncr/matrix.hpp"
#include "ncr/splitting.hpp"
#include "ncr/subspace.hpp"

namespace ncr {

template <class F>
struct SplittingPair {
    Splitting<F> first;
    Splitting<F> second;

    SplittingPair(Splitting<F> a, Splitting<F> b) : first(std::move(a)), second(std::move(b)) {
        if (first.ambient_dim() != second.ambient_dim())
            throw DimensionMismatch("SplittingPair: ambient dimensions differ");
    }
};

/// Which of the four complementarity conditions hold for the (possibly
/// raw) quadruple (V1,W1,V2,W2).
struct AdmissibilityReport {
    bool v1_w1 = false;
    bool v2_w2 = false;
    bool v1_w2 = false;
    bool v2_w1 = false;

    bool admissible() const { return v1_w1 && v2_w2 && v1_w2 && v2_w1; }

    std::string failing() const {
        std::string out;
        auto add = [&out](bool ok, const char* name) {
            if (ok)
                return;
            if (!out.empty())
                out += ", ";
            out += name;
        };
        add(v1_w1, "V1+W1");
        add(v2_w2, "V2+W2");
        add(v1_w2, "V1+W2");
        add(v2_w1, "V2+W1");
        return out;
    }
};

template <class F>
AdmissibilityReport admissibility_report(const Subspace<F>& v1, const Subspace<F>& w1,
                                         const Subspace<F>& v2, const Subspace<F>& w2) {
    AdmissibilityReport r;
    r.v1_w1 = is_splitting(v1, w1);
    r.v2_w2 = is_splitting(v2, w2);
    r.v1_w2 = is_splitting(v1, w2);
    r.v2_w1 = is_splitting(v2, w1);
    return r;
}

template <class F>
AdmissibilityReport admissibility_report(const SplittingPair<F>& pair) {
    // The couple's own splittings hold by the Splitting invariant.
    AdmissibilityReport r;
    r.v1_w1 = true;
    r.v2_w2 = true;
    r.v1_w2 = is_splitting(pair.first.v(), pair.second.w());
    r.v2_w1 = is_splitting(pair.second.v(), pair.first.w());
    return r;
}

template <class F>
bool is_admissible(const SplittingPair<F>& pair) {
    return admissibility_report(pair).admissible();
}

template <class F>
void require_admissible(const SplittingPair<F>& pair, const char* what) {
    const auto report = admissibility_report(pair);
    if (!report.admissible())
        throw NotAdmissible(std::string(what) + ": couple not admissible, failing condition(s): " +
                            report.failing());
}

// ---------------------------------------------------------------------------
// Involutions on splittings and on admissible couples
// ---------------------------------------------------------------------------

/// (V,W) → (W,V).
template <class F>
Splitting<F> j_minus(const Splitting<F>& s) {
    return Splitting<F>(s.w(), s.v());
}

/// Componentwise (V,W) swap of both splittings of the couple.
template <class F>
SplittingPair<F> j_minus_pair(const SplittingPair<F>& pair) {
    return SplittingPair<F>(j_minus(pair.first), j_minus(pair.second));
}

/// ((V1,W1),(V2,W2)) → ((V1,W2),(V2,W1)). Defined exactly on admissible
/// couples, and lands in admissible couples.
template <class F>
SplittingPair<F> tilde_j(const SplittingPair<F>& pair) {
    require_admissible(pair, "tilde_j");
    return SplittingPair<F>(Splitting<F>(pair.first.v(), pair.second.w()),
                            Splitting<F>(pair.second.v(), pair.first.w()));
}

/// ((V1,W1),(V2,W2)) → ((V2,W2),(V1,W1)).
template <class F>
SplittingPair<F> j_sw(const SplittingPair<F>& pair) {
    return SplittingPair<F>(pair.second, pair.first);
}

// ---------------------------------------------------------------------------
// Restricted maps
// ---------------------------------------------------------------------------

/// A linear map written in the canonical bases of a domain and codomain
/// subspace; mat is (dim codomain) × (dim domain).
template <class F>
struct RestrictedMap {
    Subspace<F> domain;
    Subspace<F> codomain;
    Matrix<F> mat;
};

/// Restriction of an ambient endomorphism to domain → codomain.
/// Fails if the image of the domain does not lie in the codomain.
template <class F>
RestrictedMap<F> restrict_map(const Matrix<F>& a, const Subspace<F>& domain,
                              const Subspace<F>& codomain) {
    const Matrix<F> image = a * domain.basis();
    auto coords = solve(codomain.basis(), image);
    if (!coords)
        throw Error("restrict_map: image does not lie in the codomain");
    return RestrictedMap<F>{domain, codomain, std::move(*coords)};
}

// ---------------------------------------------------------------------------
// The cross-ratio maps
// ---------------------------------------------------------------------------

/// The cross-ratio of the couple: V1 → V2 along W1, then V2 → V1 along
/// W2, as a map of V1 in its canonical basis.
template <class F>
RestrictedMap<F> dv(const SplittingPair<F>& pair) {
    require_admissible(pair, "dv");
    const Matrix<F> onto_v2 = projector(pair.second.v(), pair.first.w());
    const Matrix<F> onto_v1 = projector(pair.first.v(), pair.second.w());
    return restrict_map(onto_v1 * onto_v2, pair.first.v(), pair.first.v());
}

/// dv widened to an ambient endomorphism with kernel ⊇ W1 and image ⊆ V1.
template <class F>
Matrix<F> phi(const SplittingPair<F>& pair) {
    require_admissible(pair, "phi");
    const Matrix<F> onto_v2 = projector(pair.second.v(), pair.first.w());
    const Matrix<F> onto_v1 = projector(pair.first.v(), pair.second.w());
    return onto_v1 * onto_v2 * projector(pair.first);
}

/// The global cross-ratio: phi(couple) + phi(flipped couple). Invertible,
/// block-diagonal with respect to V1 ⊕ W1.
template <class F>
Matrix<F> tilde_dv(const SplittingPair<F>& pair) {
    return phi(pair) + phi(j_minus_pair(pair));
}

/// An ambient endomorphism acting as r on split.v() and as zero on
/// split.w().
template <class F>
Matrix<F> widen_along(const RestrictedMap<F>& r, const Splitting<F>& split) {
    const Matrix<F> coords = solve(split.v().basis(), projector(split)).value();
    return split.v().basis() * r.mat * coords;
}

/// Inverse of tilde_dv, assembled blockwise from the cross-ratio inverse
/// law dv(couple)⁻¹ = dv(W-swapped couple) on V1 and on W1 rather than by
/// matrix inversion.
template <class F>
Matrix<F> tilde_dv_inverse(const SplittingPair<F>& pair) {
    require_admissible(pair, "tilde_dv_inverse");
    const RestrictedMap<F> on_v1 = dv(tilde_j(pair));
    const RestrictedMap<F> on_w1 = dv(tilde_j(j_minus_pair(pair)));
    return widen_along(on_v1, pair.first) + widen_along(on_w1, j_minus(pair.first));
}

/// tilde_dv(couple) ∘ tilde_dv(W-swapped couple); fixes V1 pointwise.
/// Assembled from the four base projectors of the couple (the flipped
/// ones are their complements Id − p), which keeps the evaluation at
/// four linear solves; the tests cross-check against the two-factor
/// tilde_dv route.
template <class F>
Matrix<F> xi(const SplittingPair<F>& pair) {
    require_admissible(pair, "xi");
    const Matrix<F> id = Matrix<F>::identity(pair.first.ambient_dim());
    const Matrix<F> p11 = projector(pair.first);
    const Matrix<F> p22 = projector(pair.second);
    const Matrix<F> p12 = projector(pair.first.v(), pair.second.w());
    const Matrix<F> p21 = projector(pair.second.v(), pair.first.w());
    const Matrix<F> first = p12 * p21 * p11 + (id - p12) * (id - p21) * (id - p11);
    const Matrix<F> second = p11 * p22 * p12 + (id - p11) * (id - p22) * (id - p12);
    return first * second;
}

/// Action of xi on the relative Grassmannian of V1: sends a complement w
/// of V1 to its image subspace, again a complement of V1.
template <class F>
Subspace<F> xi_move(const Subspace<F>& v1, const SplittingPair<F>& pair, const Subspace<F>& w) {
    if (!(pair.first.v() == v1))
        throw Error("xi_move: v1 is not the first splitting's V component");
    require_admissible(pair, "xi_move");
    if (!is_splitting(v1, w))
        throw NotInRelativeGrassmannian("xi_move: w is not a complement of v1");
    return image(xi(pair), w);
}

/// Block criterion for xi: decompose the output in V1 ⊕ W1 and feed in
/// the second complement W2. The V1-row block of xi|_{W2} vanishes
/// exactly when W1 = W2. (Columns are taken over W2, not W1: xi fixes V1
/// pointwise, so on W1-columns the V1-row block vanishes identically and
/// carries no information.)
template <class F>
bool block_offdiag_vanishes(const SplittingPair<F>& pair) {
    require_admissible(pair, "block_offdiag_vanishes");
    const Matrix<F> onto_v1 = projector(pair.first);
    return (onto_v1 * xi(pair) * pair.second.w().basis()).is_zero();
}

} // namespace ncr
