#pragma once

// Exact number types shared by every module.
//
// Integers are arbitrary precision and rationals are always kept in
// canonical form: gcd(numerator, denominator) == 1 and denominator > 0.
// GMP's arithmetic operators canonicalize their results; values built from
// a raw numerator/denominator pair must go through make_rational().
//
// Note: gmpxx uses expression templates, so `auto x = a + b;` captures an
// unevaluated expression. Spell out Integer/Rational for locals.

#include <gmpxx.h>

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pytri {

using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms. Throws Errc::invalid_argument when den == 0.
Rational make_rational(const Integer& num, const Integer& den = 1);

/// Parses "7", "-3", "1/2", "-10/4" (result canonical).
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

/// Decimal text; rationals print as "p/q", or "p" when integral.
std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

bool is_integral(const Rational& value);
/// Throws Errc::invalid_argument if `value` is not an integer.
Integer to_integer(const Rational& value);

Integer gcd(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b, const Integer& c);
Integer abs(const Integer& value);
Rational abs(const Rational& value);
int sign(const Integer& value);
int sign(const Rational& value);

std::optional<Integer> exact_sqrt(const Integer& value);
std::optional<Rational> exact_sqrt(const Rational& value);

/// A square root kept exact: the square is always stored, the value only
/// when the square is the square of a rational.
struct RationalSqrt {
  Rational square;
  std::optional<Rational> value;

  static RationalSqrt of(const Rational& square);
  double approx() const;
};

struct PrimePower {
  Integer prime;
  unsigned long exponent = 0;
};

/// Trial-division factorization of n >= 1, primes ascending.
std::vector<PrimePower> factorize(Integer n);
/// All positive divisors, ascending.
std::vector<Integer> divisors(const Integer& n);

bool operator==(const PrimePower& a, const PrimePower& b);

}  // namespace pytri
