#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "gyro/errors.hpp"

namespace gyro {

// All chromatic values, measures and densities in this library are exact.
// cpp_rational keeps fractions in lowest terms with positive denominator,
// which is exactly the canonical form the certificate formats require.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Rational make_rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw input_error("rational with zero denominator");
    return Rational(BigInt(num), BigInt(den));
}

/// Render as "p/q", or just "p" when the value is integral.
inline std::string rat_str(const Rational& r) {
    std::string s = rat_num(r).str();
    if (rat_den(r) != 1) s += "/" + rat_den(r).str();
    return s;
}

inline std::int64_t to_int64(const BigInt& v) {
    if (v < std::numeric_limits<std::int64_t>::min() || v > std::numeric_limits<std::int64_t>::max())
        throw input_error("integer out of 64-bit range: " + v.str());
    return v.convert_to<std::int64_t>();
}

inline Rational rat_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

/// Ceiling of an exact rational.
inline BigInt rat_ceil(const Rational& r) {
    BigInt q = rat_num(r) / rat_den(r);
    if (rat_num(r) > 0 && rat_num(r) % rat_den(r) != 0) ++q;
    return q;
}

} // namespace gyro
