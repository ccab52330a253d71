#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace qfano {

/// Arbitrary-precision integer.
using Int = boost::multiprecision::cpp_int;

/// Exact rational number, always kept in lowest terms with positive
/// denominator. Every quantity in this library is a Rational or an
/// integer; there is no floating point anywhere.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den = 1) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(Int(num), Int(den));
}

inline Int num(const Rational& x) { return boost::multiprecision::numerator(x); }
inline Int den(const Rational& x) { return boost::multiprecision::denominator(x); }

inline bool is_integer(const Rational& x) { return den(x) == 1; }

/// Serializes as `p/q` in lowest terms, `p` when q = 1, leading `-` on the
/// numerator for negative values.
std::string to_string(const Rational& x);

/// Inverse of to_string. Accepts `p` and `p/q` with an optional leading `-`
/// and normalizes to lowest terms. Throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

/// Largest integer <= x.
Int rational_floor(const Rational& x);

/// Smallest integer >= x.
Int rational_ceil(const Rational& x);

}  // namespace qfano
