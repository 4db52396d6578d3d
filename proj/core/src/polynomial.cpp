#include "blocksort/polynomial.hpp"

#include <stdexcept>

namespace blocksort {

namespace {
const BigInt kZero = 0;
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
}

IntPolynomial IntPolynomial::monomial(const BigInt& c, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  IntPolynomial p;
  p.add_term(c, exponent);
  return p;
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& IntPolynomial::coeff(int exponent) const {
  if (exponent < 0 || exponent >= static_cast<int>(coeffs_.size()))
    return kZero;
  return coeffs_[static_cast<size_t>(exponent)];
}

void IntPolynomial::add_term(const BigInt& c, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  if (exponent >= static_cast<int>(coeffs_.size()))
    coeffs_.resize(static_cast<size_t>(exponent) + 1, BigInt(0));
  coeffs_[static_cast<size_t>(exponent)] += c;
  trim();
}

BigInt IntPolynomial::operator()(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

Rational IntPolynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + Rational(*it);
  return acc;
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return IntPolynomial();
  std::vector<BigInt> d(coeffs_.size() - 1);
  for (size_t e = 1; e < coeffs_.size(); ++e)
    d[e - 1] = coeffs_[e] * BigInt(static_cast<long>(e));
  return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::scaled(const BigInt& factor) const {
  std::vector<BigInt> s(coeffs_.size());
  for (size_t e = 0; e < coeffs_.size(); ++e) s[e] = coeffs_[e] * factor;
  return IntPolynomial(std::move(s));
}

IntPolynomial IntPolynomial::stretched(int k) const {
  if (k < 1) throw std::invalid_argument("stretch factor must be >= 1");
  if (coeffs_.empty()) return IntPolynomial();
  std::vector<BigInt> s((coeffs_.size() - 1) * static_cast<size_t>(k) + 1,
                        BigInt(0));
  for (size_t e = 0; e < coeffs_.size(); ++e)
    s[e * static_cast<size_t>(k)] = coeffs_[e];
  return IntPolynomial(std::move(s));
}

IntPolynomial IntPolynomial::shifted_up(int k) const {
  if (k < 0) throw std::invalid_argument("negative shift");
  if (coeffs_.empty()) return IntPolynomial();
  std::vector<BigInt> s(coeffs_.size() + static_cast<size_t>(k), BigInt(0));
  for (size_t e = 0; e < coeffs_.size(); ++e)
    s[e + static_cast<size_t>(k)] = coeffs_[e];
  return IntPolynomial(std::move(s));
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int e = degree(); e >= 0; --e) {
    const BigInt& c = coeffs_[static_cast<size_t>(e)];
    if (c == 0) continue;
    if (!out.empty()) out += c > 0 ? " + " : " - ";
    else if (c < 0) out += "-";
    const BigInt a = abs(c);
    if (a != 1 || e == 0) out += a.get_str();
    if (e > 0) {
      if (a != 1) out += "*";
      out += "q";
      if (e > 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

}  // namespace blocksort
