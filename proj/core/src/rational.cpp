#include "blocksort/rational.hpp"

#include <stdexcept>

#include "blocksort/errors.hpp"

namespace blocksort {

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt exact_div(const BigInt& a, const BigInt& b) {
  if (b == 0) throw invariant_violation("exact_div: zero divisor");
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
    throw invariant_violation("exact_div: " + b.get_str() +
                              " does not divide " + a.get_str());
  }
  BigInt q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string decimal_string(const Rational& r, int significant_digits) {
  if (significant_digits < 1)
    throw std::invalid_argument("need at least one significant digit");
  const int sig = significant_digits;
  BigInt num = r.get_num();
  const BigInt den = r.get_den();
  const bool negative = num < 0;
  if (negative) num = -num;
  if (num == 0) return "0";

  // Smallest e with num/den < 10^e, so the leading digit sits at 10^(e-1).
  BigInt pow10 = 1;
  int e = 0;
  while (num >= den * pow10) {
    pow10 *= 10;
    ++e;
  }
  while (num * 10 < den * pow10) {
    pow10 = exact_div(pow10, BigInt(10));
    --e;
  }

  // scaled = round(num * 10^(sig-e) / den), half away from zero.
  BigInt t = num;
  int shift = sig - e;
  for (int s = 0; s < shift; ++s) t *= 10;
  for (int s = 0; s < -shift; ++s) t = t / 10;  // only when the value is huge
  BigInt scaled = (2 * t + den) / (2 * den);

  std::string digits = scaled.get_str();
  if (static_cast<int>(digits.size()) > sig) {
    // rounding carried into an extra digit (e.g. 0.999.. -> 1.00..)
    digits.pop_back();
    ++e;
  }

  std::string out;
  if (e <= 0) {
    out = "0." + std::string(static_cast<size_t>(-e), '0') + digits;
  } else if (e >= sig) {
    out = digits + std::string(static_cast<size_t>(e - sig), '0');
  } else {
    out = digits.substr(0, static_cast<size_t>(e)) + "." +
          digits.substr(static_cast<size_t>(e));
  }
  return negative ? "-" + out : out;
}

}  // namespace blocksort
