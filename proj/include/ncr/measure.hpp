#pragma once

// Signed measures on a finite ground set: Jordan decomposition into
// nonnegative parts with disjoint supports, μ-partitions (two-block
// partitions of the ground containing the supports of μ⁺ and μ⁻), the
// indicator projectors they induce on function spaces, and the
// admissibility no-go for distinct partitions.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ncr/crossratio.hpp"
#include "ncr/matrix.hpp"
#include "ncr/scalar.hpp"
#include "ncr/splitting.hpp"
#include "ncr/subspace.hpp"

namespace ncr::measures {

struct FiniteGround {
    std::vector<std::string> points;

    explicit FiniteGround(std::vector<std::string> labels) : points(std::move(labels)) {
        for (std::size_t i = 0; i < points.size(); ++i)
            for (std::size_t j = i + 1; j < points.size(); ++j)
                if (points[i] == points[j])
                    throw Error("FiniteGround: duplicate label \"" + points[i] + "\"");
    }

    static FiniteGround numbered(std::size_t n) {
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < n; ++i)
            labels.push_back("x" + std::to_string(i));
        return FiniteGround(std::move(labels));
    }

    std::size_t size() const { return points.size(); }
};

template <class F = Rational>
struct SignedMeasure {
    std::vector<F> weights; // one per ground point

    std::size_t size() const { return weights.size(); }
};

/// A two-block partition of the ground set; in_plus[i] says whether point
/// i belongs to X⁺.
struct MuPartition {
    std::vector<bool> in_plus;

    std::size_t size() const { return in_plus.size(); }

    friend bool operator==(const MuPartition& a, const MuPartition& b) {
        return a.in_plus == b.in_plus;
    }
    friend bool operator!=(const MuPartition& a, const MuPartition& b) { return !(a == b); }
};

/// μ = μ⁺ − μ⁻ with both parts nonnegative and supports disjoint.
template <class F>
std::pair<SignedMeasure<F>, SignedMeasure<F>> jordan(const SignedMeasure<F>& mu) {
    SignedMeasure<F> plus, minus;
    plus.weights.reserve(mu.size());
    minus.weights.reserve(mu.size());
    for (const F& w : mu.weights) {
        const bool positive = w > F(0);
        plus.weights.push_back(positive ? w : F(0));
        minus.weights.push_back(positive || FieldTraits<F>::is_zero(w) ? F(0) : -w);
    }
    return {std::move(plus), std::move(minus)};
}

template <class F>
bool is_mu_partition(const SignedMeasure<F>& mu, const MuPartition& part) {
    if (mu.size() != part.size())
        throw DimensionMismatch("is_mu_partition: ground sizes differ");
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (mu.weights[i] > F(0) && !part.in_plus[i])
            return false;
        if (mu.weights[i] < F(0) && part.in_plus[i])
            return false;
    }
    return true;
}

/// All μ-partitions: one choice per zero-weight point, 2^(#zeros) total,
/// in a deterministic order (first zero point toggles fastest).
template <class F>
std::vector<MuPartition> valid_partitions(const SignedMeasure<F>& mu) {
    std::vector<std::size_t> zeros;
    for (std::size_t i = 0; i < mu.size(); ++i)
        if (FieldTraits<F>::is_zero(mu.weights[i]))
            zeros.push_back(i);
    std::vector<MuPartition> out;
    const std::size_t count = std::size_t(1) << zeros.size();
    for (std::size_t mask = 0; mask < count; ++mask) {
        MuPartition p;
        p.in_plus.resize(mu.size());
        for (std::size_t i = 0; i < mu.size(); ++i)
            p.in_plus[i] = mu.weights[i] > F(0);
        for (std::size_t z = 0; z < zeros.size(); ++z)
            p.in_plus[zeros[z]] = (mask >> z) & 1;
        out.push_back(std::move(p));
    }
    return out;
}

/// All 2^n two-block partitions of an n-point ground.
inline std::vector<MuPartition> all_partitions(std::size_t n) {
    std::vector<MuPartition> out;
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
        MuPartition p;
        p.in_plus.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            p.in_plus[i] = (mask >> i) & 1;
        out.push_back(std::move(p));
    }
    return out;
}

/// The indicator projector p_{X⁺} on V^X with dim V = m: functions are
/// coordinate vectors of length m·n, point-major, and the projector
/// keeps the coordinates over X⁺.
template <class F>
Matrix<F> indicator_projector(const MuPartition& part, std::size_t m) {
    if (m < 1)
        throw Error("indicator_projector: value-space dimension must be at least 1");
    const std::size_t n = part.size();
    Matrix<F> p(m * n, m * n);
    for (std::size_t i = 0; i < n; ++i)
        if (part.in_plus[i])
            for (std::size_t c = 0; c < m; ++c)
                p(i * m + c, i * m + c) = F(1);
    return p;
}

/// s_{(X⁺,X⁻)} = 2 p_{X⁺} − Id.
template <class F>
Matrix<F> indicator_symmetry(const MuPartition& part, std::size_t m) {
    return symmetry_of(indicator_projector<F>(part, m));
}

/// The splitting (Im p_{X⁺}, Im p_{X⁻}) of the function space.
template <class F>
Splitting<F> partition_splitting(const MuPartition& part, std::size_t m) {
    const std::size_t n = part.size();
    std::vector<std::size_t> plus_axes, minus_axes;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = 0; c < m; ++c)
            (part.in_plus[i] ? plus_axes : minus_axes).push_back(i * m + c);
    return Splitting<F>(Subspace<F>::coordinate(m * n, plus_axes),
                        Subspace<F>::coordinate(m * n, minus_axes));
}

/// μ(f) = |μ|(s_{(X⁺,X⁻)} f) for scalar-valued f (m = 1).
template <class F>
bool pairing_identity_check(const SignedMeasure<F>& mu, const MuPartition& part,
                            const std::vector<F>& f) {
    if (!is_mu_partition(mu, part))
        throw NotAMuPartition("pairing_identity_check: partition does not contain the supports");
    if (f.size() != mu.size())
        throw DimensionMismatch("pairing_identity_check: function length differs from ground size");
    F lhs(0), rhs(0);
    for (std::size_t i = 0; i < mu.size(); ++i) {
        lhs += mu.weights[i] * f[i];
        const F abs_w = mu.weights[i] < F(0) ? -mu.weights[i] : mu.weights[i];
        const F sf = part.in_plus[i] ? f[i] : -f[i];
        rhs += abs_w * sf;
    }
    return FieldTraits<F>::eq(lhs, rhs);
}

/// Admissibility of the couple of splittings induced by two partitions.
/// True exactly when the partitions are equal (distinct partitions leave
/// a Dirac function in one of the crossed intersections).
template <class F>
bool no_go_check(const MuPartition& part1, const MuPartition& part2, std::size_t m) {
    if (part1.size() != part2.size())
        throw DimensionMismatch("no_go_check: ground sizes differ");
    SplittingPair<F> pair{partition_splitting<F>(part1, m), partition_splitting<F>(part2, m)};
    return is_admissible(pair);
}

} // namespace ncr::measures
