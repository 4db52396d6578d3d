#ifndef BLOCKSORT_RATIONAL_HPP
#define BLOCKSORT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace blocksort {

// All counts, coefficients and probabilities in this library are exact.
// BigInt/Rational are GMP's canonical types: Rational is always kept in
// lowest terms with a positive denominator.
using BigInt = mpz_class;
using Rational = mpq_class;

BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);

// a / b, throwing invariant_violation unless b | a. Divisions in this library
// are consequences of identities; a remainder means the identity is false.
BigInt exact_div(const BigInt& a, const BigInt& b);

// num/den reduced to lowest terms, denominator made positive. Throws
// std::invalid_argument on a zero denominator.
Rational make_rational(const BigInt& num, const BigInt& den);

inline Rational make_rational(long num, long den) {
  return make_rational(BigInt(num), BigInt(den));
}

// Canonical "numerator/denominator" form, e.g. "7/18", "2/1", "-1/3".
std::string fraction_string(const Rational& r);

// Fixed-notation decimal with the given number of significant digits,
// rounded half away from zero. Used only for human-readable output.
std::string decimal_string(const Rational& r, int significant_digits);

}  // namespace blocksort

#endif  // BLOCKSORT_RATIONAL_HPP
