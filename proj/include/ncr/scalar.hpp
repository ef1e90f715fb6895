#pragma once

// Scalar fields the whole library is generic over: exact rationals,
// Gaussian rationals (exact complex), and tolerance-compared complex
// doubles. FieldTraits centralizes the zero/equality/pivot policy so the
// elimination routines never special-case a field.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <complex>
#include <cstdlib>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "ncr/errors.hpp"

namespace ncr {

using Rational = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

/// Module-wide comparison tolerance for floating-point fields. Rank
/// decisions keep a pivot only if |pivot| > tolerance * max(1, row max);
/// scalar equality is relative against the same floor.
inline double& float_tolerance() {
    static double tol = 1e-9;
    return tol;
}

inline double to_double(const Rational& x) {
    return x.convert_to<double>();
}

/// Parses "p" or "p/q" (optionally signed). Rejects zero denominators and
/// trailing junk with a ParseError naming the offending token.
inline Rational parse_rational(std::string_view text) {
    const std::string s(text);
    if (s.empty())
        throw ParseError("empty rational literal");
    const auto bad = s.find_first_not_of("-+0123456789/");
    if (bad != std::string::npos)
        throw ParseError("malformed rational \"" + s + "\": unexpected character '" + s[bad] + "'");
    const auto slash = s.find('/');
    if (slash != std::string::npos && s.substr(slash + 1).find_first_not_of("0") == std::string::npos)
        throw ParseError("malformed rational \"" + s + "\": zero denominator");
    try {
        return Rational(s);
    } catch (const std::exception& e) {
        throw ParseError("malformed rational \"" + s + "\": " + e.what());
    }
}

inline std::string format_rational(const Rational& x) {
    if (denominator(x) == 1)
        return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

/// Exact complex scalar: a + b*i with rational a, b.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(int n) : re(n) {}
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational unit_i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        const Rational n = b.re * b.re + b.im * b.im;
        if (n.is_zero())
            throw Error("GaussianRational: division by zero");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    GaussianRational& operator+=(const GaussianRational& b) { return *this = *this + b; }
    GaussianRational& operator-=(const GaussianRational& b) { return *this = *this - b; }
    GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }
    GaussianRational& operator/=(const GaussianRational& b) { return *this = *this / b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
        os << format_rational(z.re);
        if (!z.im.is_zero())
            os << (z.im > 0 ? "+" : "") << format_rational(z.im) << "i";
        return os;
    }
};

inline GaussianRational conj(const GaussianRational& z) { return {z.re, -z.im}; }

// |x|^2, in the field's own real arithmetic for exact fields.
inline Rational abs_sq(const Rational& x) { return x * x; }
inline Rational abs_sq(const GaussianRational& z) { return z.re * z.re + z.im * z.im; }
inline double abs_sq(const Complex& z) { return std::norm(z); }

inline double to_double(double x) { return x; }

inline Complex to_complex(const Rational& x) { return {to_double(x), 0.0}; }
inline Complex to_complex(const GaussianRational& z) { return {to_double(z.re), to_double(z.im)}; }
inline Complex to_complex(const Complex& z) { return z; }

template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
    static constexpr bool exact = true;
    static bool is_zero(const Rational& x) { return x.is_zero(); }
    static bool eq(const Rational& a, const Rational& b) { return a == b; }
    // Pivot preference: any nonzero entry is as good as any other.
    static double weight(const Rational& x) { return x.is_zero() ? 0.0 : 1.0; }
    static bool negligible(const Rational& x, double) { return x.is_zero(); }
    static Rational conj(const Rational& x) { return x; }
};

template <>
struct FieldTraits<GaussianRational> {
    static constexpr bool exact = true;
    static bool is_zero(const GaussianRational& x) { return x.is_zero(); }
    static bool eq(const GaussianRational& a, const GaussianRational& b) { return a == b; }
    static double weight(const GaussianRational& x) { return x.is_zero() ? 0.0 : 1.0; }
    static bool negligible(const GaussianRational& x, double) { return x.is_zero(); }
    static GaussianRational conj(const GaussianRational& x) { return ncr::conj(x); }
    static GaussianRational unit_i() { return GaussianRational::unit_i(); }
};

template <>
struct FieldTraits<Complex> {
    static constexpr bool exact = false;
    static bool is_zero(const Complex& x) { return std::abs(x) <= float_tolerance(); }
    static bool eq(const Complex& a, const Complex& b) {
        const double scale = std::max({1.0, std::abs(a), std::abs(b)});
        return std::abs(a - b) <= float_tolerance() * scale;
    }
    static double weight(const Complex& x) { return std::abs(x); }
    static bool negligible(const Complex& x, double scale) {
        return std::abs(x) <= float_tolerance() * std::max(1.0, scale);
    }
    static Complex conj(const Complex& x) { return std::conj(x); }
    static Complex unit_i() { return Complex(0.0, 1.0); }
};

/// i^k for any integer k (period 4, exact in both complex fields).
template <class F>
F imag_unit_pow(long k) {
    const long r = ((k % 4) + 4) % 4;
    const F i = FieldTraits<F>::unit_i();
    switch (r) {
        case 0: return F(1);
        case 1: return i;
        case 2: return F(-1);
        default: return -i;
    }
}

/// x^k with the convention 0^k = 0 for every k, including k <= 0.
template <class F>
F power_zero_convention(const F& x, long k) {
    if (FieldTraits<F>::is_zero(x))
        return F(0);
    F acc(1);
    const long n = k < 0 ? -k : k;
    for (long j = 0; j < n; ++j)
        acc *= x;
    return k < 0 ? F(1) / acc : acc;
}

} // namespace ncr
