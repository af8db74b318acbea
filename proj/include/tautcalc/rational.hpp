#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tautcalc {

using BigInt = mpz_class;

// Exact rational in lowest terms with positive denominator. GMP keeps
// results of arithmetic canonical; construct through make_rational when
// the numerator/denominator pair is not already reduced.
using Rational = mpq_class;

Rational make_rational(const BigInt& num, const BigInt& den);

// "p/q" with q > 0, always including the denominator ("3/1").
std::string to_string(const Rational& q);

// Human form: "3", "-1/6".
std::string to_pretty(const Rational& q);

// Accepts "p/q" or "p". Throws std::invalid_argument on malformed input
// or zero denominator.
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace tautcalc
