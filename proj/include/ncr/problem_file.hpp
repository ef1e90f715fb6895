#pragma once

// Problem files: a single JSON document naming subspaces (lists of basis
// vectors) over an exact rational or complex floating field, plus named
// quadruples (V1, W1, V2, W2) to analyze. Rationals travel as "p/q"
// strings so values round-trip bit-exactly; complex entries travel as
// [re, im] pairs.

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ncr/errors.hpp"
#include "ncr/matrix.hpp"
#include "ncr/scalar.hpp"
#include "ncr/subspace.hpp"

namespace ncr::cli {

using Json = nlohmann::json;

inline Json encode_scalar(const Rational& x) { return format_rational(x); }
inline Json encode_scalar(const Complex& z) { return Json::array({z.real(), z.imag()}); }
inline Json encode_scalar(const GaussianRational& z) {
    return Json::array({format_rational(z.re), format_rational(z.im)});
}

inline void decode_scalar(const Json& j, const std::string& where, Rational& out) {
    if (j.is_string()) {
        try {
            out = parse_rational(j.get<std::string>());
        } catch (const ParseError& e) {
            throw ParseError(where + ": " + e.what());
        }
        return;
    }
    if (j.is_number_integer()) {
        out = Rational(j.get<long long>());
        return;
    }
    throw ParseError(where + ": expected a rational as \"p/q\" string or integer");
}

inline void decode_scalar(const Json& j, const std::string& where, Complex& out) {
    if (j.is_number()) {
        out = Complex(j.get<double>(), 0.0);
        return;
    }
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        out = Complex(j[0].get<double>(), j[1].get<double>());
        return;
    }
    throw ParseError(where + ": expected a complex entry as [re, im] or a plain number");
}

template <class F>
Json encode_matrix(const Matrix<F>& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(encode_scalar(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class F>
Matrix<F> decode_matrix(const Json& j, const std::string& where) {
    if (!j.is_array() || j.empty())
        throw ParseError(where + ": expected a non-empty array of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
    Matrix<F> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const Json& row = j[i];
        if (!row.is_array() || row.size() != cols)
            throw DimensionMismatch(where + "[" + std::to_string(i) + "]: row length differs");
        for (std::size_t c = 0; c < cols; ++c)
            decode_scalar(row[c], where + "[" + std::to_string(i) + "][" + std::to_string(c) + "]",
                          m(i, c));
    }
    return m;
}

template <class F>
struct Problem {
    std::size_t ambient_dim = 0;
    std::map<std::string, Subspace<F>> subspaces;
    std::map<std::string, std::array<std::string, 4>> pairs;

    const Subspace<F>& subspace(const std::string& name) const {
        auto it = subspaces.find(name);
        if (it == subspaces.end())
            throw UnknownName("unknown subspace \"" + name + "\"");
        return it->second;
    }

    const std::array<std::string, 4>& pair(const std::string& name) const {
        auto it = pairs.find(name);
        if (it == pairs.end())
            throw UnknownName("unknown pair \"" + name + "\"");
        return it->second;
    }
};

struct ProblemFile {
    std::string field; // "rational" | "complex-float"
    std::variant<Problem<Rational>, Problem<Complex>> data;
};

template <class F>
Problem<F> parse_problem_body(const Json& doc) {
    Problem<F> p;
    if (!doc.contains("ambient_dim") || !doc["ambient_dim"].is_number_unsigned())
        throw ParseError("ambient_dim: expected a positive integer");
    p.ambient_dim = doc["ambient_dim"].get<std::size_t>();

    if (!doc.contains("subspaces") || !doc["subspaces"].is_object())
        throw ParseError("subspaces: expected an object of named basis lists");
    for (const auto& [name, vectors] : doc["subspaces"].items()) {
        const std::string where = "subspaces." + name;
        if (!vectors.is_array())
            throw ParseError(where + ": expected an array of basis vectors");
        Matrix<F> basis(p.ambient_dim, vectors.size());
        for (std::size_t k = 0; k < vectors.size(); ++k) {
            const Json& vec = vectors[k];
            if (!vec.is_array() || vec.size() != p.ambient_dim)
                throw DimensionMismatch(where + "[" + std::to_string(k) +
                                        "]: vector length differs from ambient_dim");
            for (std::size_t i = 0; i < p.ambient_dim; ++i)
                decode_scalar(vec[i], where + "[" + std::to_string(k) + "][" + std::to_string(i) + "]",
                              basis(i, k));
        }
        p.subspaces.emplace(name, Subspace<F>::column_space(basis));
    }

    if (doc.contains("pairs")) {
        if (!doc["pairs"].is_object())
            throw ParseError("pairs: expected an object of name → [V1, W1, V2, W2]");
        for (const auto& [name, refs] : doc["pairs"].items()) {
            if (!refs.is_array() || refs.size() != 4)
                throw ParseError("pairs." + name + ": expected exactly four subspace names");
            std::array<std::string, 4> quad;
            for (std::size_t i = 0; i < 4; ++i) {
                if (!refs[i].is_string())
                    throw ParseError("pairs." + name + "[" + std::to_string(i) +
                                     "]: expected a subspace name");
                quad[i] = refs[i].template get<std::string>();
                if (!p.subspaces.count(quad[i]))
                    throw UnknownName("pairs." + name + " references unknown subspace \"" +
                                      quad[i] + "\"");
            }
            p.pairs.emplace(name, quad);
        }
    }
    return p;
}

inline ProblemFile parse_problem(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    ProblemFile file;
    if (!doc.contains("field") || !doc["field"].is_string())
        throw ParseError("field: expected \"rational\" or \"complex-float\"");
    file.field = doc["field"].get<std::string>();
    if (file.field == "rational")
        file.data = parse_problem_body<Rational>(doc);
    else if (file.field == "complex-float")
        file.data = parse_problem_body<Complex>(doc);
    else
        throw ParseError("field: unknown field tag \"" + file.field + "\"");
    return file;
}

} // namespace ncr::cli
