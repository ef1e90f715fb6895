#include <catch2/catch_amalgamated.hpp>

#include "ncr/problem_file.hpp"
#include "ncr/sampling.hpp"

using namespace ncr;
using namespace ncr::cli;

namespace {

const char* theta_file = R"({
  "field": "rational",
  "ambient_dim": 2,
  "subspaces": {
    "V1": [["1", "0"]],
    "W1": [["0", "1"]],
    "V2": [["1", "1"]],
    "W2": [["-1", "1"]]
  },
  "pairs": {
    "theta45": ["V1", "W1", "V2", "W2"]
  }
})";

} // namespace

TEST_CASE("problem file parsing") {
    const ProblemFile file = parse_problem(theta_file);
    CHECK(file.field == "rational");
    const auto& problem = std::get<Problem<Rational>>(file.data);
    CHECK(problem.ambient_dim == 2);
    CHECK(problem.subspaces.size() == 4);
    CHECK(problem.subspace("V1").dim() == 1);
    CHECK(problem.pair("theta45")[3] == "W2");
    CHECK_THROWS_AS(problem.subspace("nope"), UnknownName);
    CHECK_THROWS_AS(problem.pair("nope"), UnknownName);
}

TEST_CASE("problem file errors") {
    SECTION("invalid JSON") {
        CHECK_THROWS_AS(parse_problem("{"), ParseError);
    }
    SECTION("malformed fraction 1/0") {
        const char* bad = R"({"field":"rational","ambient_dim":1,"subspaces":{"V":[["1/0"]]}})";
        CHECK_THROWS_AS(parse_problem(bad), ParseError);
        CHECK_THROWS_WITH(parse_problem(bad),
                          Catch::Matchers::ContainsSubstring("zero denominator"));
    }
    SECTION("vector length mismatch points at the offender") {
        const char* bad = R"({"field":"rational","ambient_dim":2,"subspaces":{"V":[["1"]]}})";
        CHECK_THROWS_AS(parse_problem(bad), DimensionMismatch);
        CHECK_THROWS_WITH(parse_problem(bad), Catch::Matchers::ContainsSubstring("subspaces.V[0]"));
    }
    SECTION("unknown field tag and unknown references") {
        CHECK_THROWS_AS(parse_problem(R"({"field":"octonion","ambient_dim":1,"subspaces":{}})"),
                        ParseError);
        const char* bad =
            R"({"field":"rational","ambient_dim":1,"subspaces":{},"pairs":{"p":["A","B","C","D"]}})";
        CHECK_THROWS_AS(parse_problem(bad), UnknownName);
    }
}

TEST_CASE("matrix round trips are bit exact for rationals") {
    Sampler sampler(801);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix<Rational> m(3, 4);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                m(i, j) = sampler.small_scalar<Rational>(5) /
                          (Rational(1) + abs_sq(sampler.small_scalar<Rational>(4)));
        const Json encoded = encode_matrix(m);
        const auto decoded = decode_matrix<Rational>(encoded, "roundtrip");
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                CHECK(decoded(i, j) == m(i, j)); // exact, not just approx
        // serialized text is stable
        CHECK(Json::parse(encoded.dump()).dump() == encoded.dump());
    }
}

TEST_CASE("complex float round trips preserve doubles") {
    Matrix<Complex> m{{Complex(0.1, -2.5), Complex(1e-17, 3.0)}};
    const Json encoded = encode_matrix(m);
    const auto decoded = decode_matrix<Complex>(encoded, "roundtrip");
    CHECK(decoded(0, 0).real() == 0.1);
    CHECK(decoded(0, 0).imag() == -2.5);
    CHECK(decoded(0, 1).real() == 1e-17);
    CHECK(decoded(0, 1).imag() == 3.0);
}

TEST_CASE("complex problem files parse") {
    const char* text = R"({
      "field": "complex-float",
      "ambient_dim": 2,
      "subspaces": {
        "V": [[[1.0, 0.5], [0.0, 0.0]]],
        "W": [[[0.0, 0.0], [1.0, 0.0]]]
      },
      "pairs": {"p": ["V", "W", "V", "W"]}
    })";
    const ProblemFile file = parse_problem(text);
    CHECK(file.field == "complex-float");
    const auto& problem = std::get<Problem<Complex>>(file.data);
    CHECK(problem.subspace("V").dim() == 1);
    CHECK(is_splitting(problem.subspace("V"), problem.subspace("W")));
}
