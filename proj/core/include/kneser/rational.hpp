#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace kneser {

using BigInt = mpz_class;
using Rational = mpq_class;

// Reduced rational num/den; den must be nonzero.
Rational make_rational(long num, long den = 1);

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& r);

// Accepts "p", "p/q", decimals "0.8" and "-1.25/3". Exact; throws InvalidArgument.
Rational parse_rational(std::string_view text);

BigInt floor_of(const Rational& r);

// Representative of r mod 1 in [0,1).
Rational frac(const Rational& r);

inline Rational rational_zero() { return Rational(0); }
inline Rational rational_one() { return Rational(1); }

}  // namespace kneser
