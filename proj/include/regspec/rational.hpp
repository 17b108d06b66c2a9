#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace regspec {

// Exact arithmetic backbone. All moment values in the engine are held as
// arbitrary-precision rationals; doubles appear only on the simulation side.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Formats as "p/q", or just "p" when the denominator is 1.
inline std::string rational_str(const Rational& r) {
    if (denominator(r) == 1) {
        return numerator(r).str();
    }
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Parses "p", "p/q", or a plain decimal like "0.25" into an exact rational.
Rational parse_rational(std::string_view text);

inline double to_double(const Rational& r) {
    return r.convert_to<double>();
}

BigInt binomial(unsigned n, unsigned k);

/// (k-1)!! for even k >= 0 (1, 1, 3, 15, ...); used for Gaussian moments.
BigInt odd_double_factorial(unsigned k);

BigInt integer_pow(const BigInt& base, unsigned exponent);

inline Rational rational_pow(const Rational& base, unsigned exponent) {
    Rational out(1);
    for (unsigned i = 0; i < exponent; ++i) {
        out *= base;
    }
    return out;
}

}  // namespace regspec
