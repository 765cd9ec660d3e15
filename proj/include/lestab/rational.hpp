#pragma once

// Exact rational scalars for the symbolic layer.
//
// Everything downstream of this header that claims to *prove* an identity
// does so over Q, so the scalar type has to be exact and canonical:
// normalized sign, gcd-reduced, comparable.  boost::multiprecision's
// cpp_rational already guarantees all of that (denominator > 0, lowest
// terms), so we use it directly and only add the few helpers the rest of
// the library needs: integer powers, falling factorials, exact conversion
// from IEEE doubles, and deterministic printing.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace lestab {

using BigInt   = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// numerator(q) / denominator(q) come with the type (ADL free functions).

inline Rational rat(long long num, long long den = 1) {
    if (den == 0) throw std::domain_error("rat: zero denominator");
    if (den < 0) { num = -num; den = -den; }  // cpp_rational insists den > 0
    return Rational(num, den);
}

// base^e with e any integer; 0^negative is a domain error.
inline Rational pow_int(const Rational& base, long e) {
    if (e < 0) {
        if (base == 0) throw std::domain_error("pow_int: 0 to a negative power");
        return 1 / pow_int(base, -e);
    }
    Rational acc = 1, b = base;
    for (unsigned long u = static_cast<unsigned long>(e); u != 0; u >>= 1) {
        if (u & 1) acc *= b;
        b *= b;
    }
    return acc;
}

// x (x-1) ... (x-i+1); the empty product for i = 0.
inline Rational falling_factorial(const Rational& x, int i) {
    Rational acc = 1;
    for (int t = 0; t < i; ++t) acc *= (x - t);
    return acc;
}

// Every finite double is a dyadic rational; this conversion is exact.
inline Rational rational_from_double(double x) {
    if (!std::isfinite(x))
        throw std::domain_error("rational_from_double: non-finite input");
    return Rational(x);
}

inline double to_double(const Rational& q) {
    return q.convert_to<double>();
}

// "a/b", or just "a" for integers.  Used by the polynomial printers.
inline std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace lestab
