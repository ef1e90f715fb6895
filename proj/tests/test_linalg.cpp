#include <catch2/catch_amalgamated.hpp>

#include "ncr/linalg.hpp"
#include "ncr/sampling.hpp"

#include "oracles.hpp"

using namespace ncr;
using M = Matrix<Rational>;

TEST_CASE("rref basics") {
    M m{{Rational(0), Rational(2)}, {Rational(1), Rational(1)}};
    const auto pivots = rref_in_place(m);
    CHECK(pivots == std::vector<std::size_t>{0, 1});
    CHECK(m == M::identity(2));
}

TEST_CASE("rank agrees with independent row echelon oracle") {
    Sampler sampler(101);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t rows = static_cast<std::size_t>(sampler.uniform(1, 6));
        const std::size_t cols = static_cast<std::size_t>(sampler.uniform(1, 6));
        const M m = sampler.matrix<Rational>(rows, cols, 2);
        CHECK(rank(m) == oracle::row_echelon_rank(m));
    }
}

TEST_CASE("kernel columns are genuine nullspace solutions") {
    Sampler sampler(102);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t rows = static_cast<std::size_t>(sampler.uniform(1, 5));
        const std::size_t cols = static_cast<std::size_t>(sampler.uniform(1, 6));
        const M m = sampler.matrix<Rational>(rows, cols, 2);
        const M k = kernel(m);
        CHECK(k.cols() == cols - oracle::row_echelon_rank(m));
        CHECK((m * k).is_zero());
        if (k.cols() > 0)
            CHECK(rank(k) == k.cols());
    }
}

TEST_CASE("solve finds particular solutions and flags inconsistency") {
    const M a{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
    const M consistent{{Rational(3)}, {Rational(6)}};
    const M inconsistent{{Rational(3)}, {Rational(7)}};
    auto x = solve(a, consistent);
    REQUIRE(x.has_value());
    CHECK(a * *x == consistent);
    CHECK_FALSE(solve(a, inconsistent).has_value());

    Sampler sampler(103);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = static_cast<std::size_t>(sampler.uniform(1, 5));
        const M g = sampler.matrix<Rational>(n, n + 1, 2);
        const M rhs = g * sampler.matrix<Rational>(n + 1, 2, 2);
        auto sol = solve(g, rhs);
        REQUIRE(sol.has_value());
        CHECK(g * *sol == rhs);
    }
}

TEST_CASE("inverse against the independent oracle") {
    Sampler sampler(104);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = static_cast<std::size_t>(sampler.uniform(1, 5));
        const M g = sampler.invertible<Rational>(n, 3);
        const auto inv = inverse(g);
        REQUIRE(inv.has_value());
        CHECK(g * *inv == M::identity(n));
        CHECK(*inv == oracle::invert(g).value());
    }
    // singular matrices are refused
    const M s{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
    CHECK_FALSE(inverse(s).has_value());
    CHECK_FALSE(is_invertible(s));
}

TEST_CASE("float elimination respects the pivot tolerance") {
    const double saved = float_tolerance();
    float_tolerance() = 1e-9;
    Matrix<Complex> m{{Complex(1.0), Complex(2.0)}, {Complex(2.0), Complex(4.0 + 1e-13)}};
    CHECK(rank(m) == 1); // the residual pivot is below tolerance
    m = Matrix<Complex>{{Complex(1.0), Complex(2.0)}, {Complex(2.0), Complex(4.0 + 1e-3)}};
    CHECK(rank(m) == 2);
    float_tolerance() = saved;
}
