#pragma once

// Deterministic random generation of matrices, splittings and admissible
// couples: sample an invertible change of basis with small integer
// entries, push a coordinate template forward, and reject until the
// couple is admissible. Everything is driven by a seeded mt19937_64 with
// hand-rolled integer draws so the streams are identical across
// platforms.

#include <cstdint>
#include <random>
#include <type_traits>

#include "ncr/crossratio.hpp"
#include "ncr/linalg.hpp"
#include "ncr/matrix.hpp"
#include "ncr/splitting.hpp"
#include "ncr/subspace.hpp"

namespace ncr {

struct PairOptions {
    bool force_v_equal = false; // V2 = V1
    bool force_w_equal = false; // W2 = W1
};

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : eng_(seed) {}

    /// Uniform integer in [lo, hi].
    long uniform(long lo, long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(eng_() % span);
    }

    template <class F>
    F small_scalar(long magnitude = 3) {
        if constexpr (std::is_same_v<F, GaussianRational>)
            return GaussianRational(Rational(uniform(-magnitude, magnitude)),
                                    Rational(uniform(-magnitude, magnitude)));
        else
            return F(static_cast<int>(uniform(-magnitude, magnitude)));
    }

    template <class F>
    Matrix<F> matrix(std::size_t rows, std::size_t cols, long magnitude = 3) {
        Matrix<F> m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                m(i, j) = small_scalar<F>(magnitude);
        return m;
    }

    template <class F>
    Matrix<F> invertible(std::size_t n, long magnitude = 3) {
        for (;;) {
            Matrix<F> g = matrix<F>(n, n, magnitude);
            if (is_invertible(g))
                return g;
        }
    }

    /// A symmetry conjugate to diag(+1 x k, -1 x (n-k)).
    template <class F>
    Matrix<F> symmetry(std::size_t n, std::size_t k) {
        const Matrix<F> g = invertible<F>(n);
        Matrix<F> d(n, n);
        for (std::size_t i = 0; i < n; ++i)
            d(i, i) = i < k ? F(1) : F(-1);
        return g * d * inverse(g).value();
    }

    template <class F>
    Splitting<F> splitting(std::size_t n, std::size_t k) {
        const Matrix<F> g = invertible<F>(n);
        std::vector<std::size_t> head, tail;
        for (std::size_t i = 0; i < n; ++i)
            (i < k ? head : tail).push_back(i);
        return Splitting<F>(image(g, Subspace<F>::coordinate(n, head)),
                            image(g, Subspace<F>::coordinate(n, tail)));
    }

    /// Rejection-samples an admissible couple with dim V = k in ambient
    /// dimension n.
    template <class F>
    SplittingPair<F> admissible_pair(std::size_t n, std::size_t k, PairOptions opt = {}) {
        for (;;) {
            Splitting<F> first = splitting<F>(n, k);
            Splitting<F> draw = splitting<F>(n, k);
            const Subspace<F>& v2 = opt.force_v_equal ? first.v() : draw.v();
            const Subspace<F>& w2 = opt.force_w_equal ? first.w() : draw.w();
            if (!is_splitting(v2, w2))
                continue;
            SplittingPair<F> pair{first, Splitting<F>(v2, w2)};
            if (is_admissible(pair))
                return pair;
        }
    }

private:
    std::mt19937_64 eng_;
};

} // namespace ncr
