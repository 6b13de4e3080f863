#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace lgcy {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer den(const Rational& q) { return boost::multiprecision::denominator(q); }

// Largest integer n with n <= q.
inline Integer floor_int(const Rational& q) {
    Integer n = num(q), d = den(q);
    Integer f = n / d;
    if (n < 0 && f * d != n) f -= 1;
    return f;
}

inline Integer ceil_int(const Rational& q) { return -floor_int(-q); }

inline Rational frac_part(const Rational& q) { return q - Rational(floor_int(q)); }

inline bool is_integer(const Rational& q) { return den(q) == 1; }

std::string rational_to_string(const Rational& q);

// Parses "3", "-5/4" and exact decimals like "0.25". Nullopt on malformed input.
std::optional<Rational> parse_rational(const std::string& s);

} // namespace lgcy
