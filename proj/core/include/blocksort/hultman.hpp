#ifndef BLOCKSORT_HULTMAN_HPP
#define BLOCKSORT_HULTMAN_HPP

#include <string>
#include <utility>
#include <vector>

#include "blocksort/polynomial.hpp"
#include "blocksort/rational.hpp"

namespace blocksort {

/// Unsigned Stirling number of the first kind c(n,k): the number of
/// n-permutations with exactly k cycles. Exact for any n.
BigInt stirling_first_unsigned(int n, int k);

/// Row [c(n,0), c(n,1), ..., c(n,n)].
std::vector<BigInt> stirling_first_row(int n);

/// How a Hultman table was produced. `direct` histograms c(G(p)) over all
/// n! permutations; `product` counts (n+1)-cycles q by the cycle count of
/// (1 2 .. n+1) composed with q; `formula` evaluates the closed form
/// c(n+2,k) / C(n+2,2). All three must agree.
enum class HultmanMethod { direct, product, formula };

const char* to_string(HultmanMethod m);

/// S_H(n, k) for k = 1..n+1: the number of n-permutations whose graph has
/// exactly k alternating cycles. Zero whenever n and k share parity.
struct HultmanTable {
  int n = 0;
  std::vector<BigInt> counts;  // index k, size n+2; counts[0] unused
  HultmanMethod method = HultmanMethod::formula;

  const BigInt& at(int k) const;
  BigInt total() const;  // always n!
};

/// True when the two tables hold identical counts (provenance ignored).
bool same_counts(const HultmanTable& a, const HultmanTable& b);

HultmanTable hultman_direct(int n);   // 1 <= n <= 8
HultmanTable hultman_product(int n);  // 1 <= n <= 9
BigInt hultman_formula(int n, int k);
HultmanTable hultman_formula_table(int n);

/// Generating polynomial of cycle counts over products of the canonical
/// n-cycle with each full n-cycle, from the Stirling closed form: the
/// returned polynomial has coefficient c(n+1, n-2i) at exponent n-2i and the
/// divisor is C(n+1, 2). Dividing yields exact integer coefficients, the
/// Hultman numbers S_H(n-1, k).
std::pair<IntPolynomial, BigInt> cycle_poly_stirling(int n);

/// The same polynomial by enumerating the (n-1)! products (2 <= n <= 9);
/// divisor is 1. cycle_poly_brute(n).first * C(n+1,2) must equal
/// cycle_poly_stirling(n).first coefficientwise.
std::pair<IntPolynomial, BigInt> cycle_poly_brute(int n);

/// Parity-compressed companion polynomial whose coefficients are exactly the
/// nonzero Hultman numbers S_H(n-1, k): exponent k/2 for even n, (k+1)/2 for
/// odd n. It has ceil(n/2) nonzero coefficients.
IntPolynomial hultman_poly(int n);

/// coeffs[i]^2 >= coeffs[i-1]*coeffs[i+1] on the nonzero support, which must
/// be contiguous (throws std::invalid_argument on internal gaps).
bool is_log_concave(const std::vector<BigInt>& coeffs);

/// Weakly rises then weakly falls (leading/trailing zeros ignored).
bool is_unimodal(const std::vector<BigInt>& coeffs);

}  // namespace blocksort

#endif  // BLOCKSORT_HULTMAN_HPP
