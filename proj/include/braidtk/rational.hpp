#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace braidtk {

/// Exact rational arithmetic for every bound computation. The 5/3 case of
/// the crossing ratio must never round, so no floating point is allowed
/// anywhere downstream of these values.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer rational_floor(const Rational& r) {
    Integer n = numerator(r), d = denominator(r);  // d > 0 in canonical form
    Integer q = n / d;
    if (n < 0 && q * d != n) --q;
    return q;
}

inline long long to_long(const Integer& i) { return static_cast<long long>(i); }

inline std::string rational_to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

}  // namespace braidtk
