#ifndef BLOCKSORT_POLYNOMIAL_HPP
#define BLOCKSORT_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "blocksort/rational.hpp"

namespace blocksort {

// Dense univariate polynomial with exact integer coefficients,
// coeffs()[e] being the coefficient of q^e. The top coefficient is nonzero
// unless the polynomial is zero (empty coefficient vector).
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  static IntPolynomial monomial(const BigInt& c, int exponent);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  const BigInt& coeff(int exponent) const;  // 0 above the degree

  void add_term(const BigInt& c, int exponent);

  BigInt operator()(const BigInt& x) const;
  Rational operator()(const Rational& x) const;

  IntPolynomial derivative() const;
  IntPolynomial scaled(const BigInt& factor) const;
  // Substitutes q -> q^k (k >= 1), spreading exponents.
  IntPolynomial stretched(int k) const;
  // Multiplies by q^k.
  IntPolynomial shifted_up(int k) const;

  bool operator==(const IntPolynomial&) const = default;

  std::string to_string() const;  // e.g. "6*q^3 + 6*q"

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

}  // namespace blocksort

#endif  // BLOCKSORT_POLYNOMIAL_HPP
