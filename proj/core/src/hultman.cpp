#include "blocksort/hultman.hpp"

#include <stdexcept>

#include "blocksort/cycle_graph.hpp"
#include "blocksort/errors.hpp"
#include "blocksort/perm.hpp"

namespace blocksort {

std::vector<BigInt> stirling_first_row(int n) {
  if (n < 0) throw std::invalid_argument("negative row");
  // c(m,k) = c(m-1,k-1) + (m-1) c(m-1,k), updated in place from the top.
  std::vector<BigInt> row(static_cast<size_t>(n) + 1, BigInt(0));
  row[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int k = m; k >= 1; --k)
      row[static_cast<size_t>(k)] = row[static_cast<size_t>(k) - 1] +
                                    BigInt(m - 1) * row[static_cast<size_t>(k)];
    row[0] = 0;
  }
  return row;
}

BigInt stirling_first_unsigned(int n, int k) {
  if (n < 0 || k < 0 || k > n)
    throw std::invalid_argument("stirling_first_unsigned needs 0 <= k <= n");
  return stirling_first_row(n)[static_cast<size_t>(k)];
}

const char* to_string(HultmanMethod m) {
  switch (m) {
    case HultmanMethod::direct: return "direct";
    case HultmanMethod::product: return "product";
    case HultmanMethod::formula: return "formula";
  }
  return "?";
}

const BigInt& HultmanTable::at(int k) const {
  if (k < 1 || k > n + 1)
    throw std::invalid_argument("Hultman index k must be in 1..n+1");
  return counts[static_cast<size_t>(k)];
}

BigInt HultmanTable::total() const {
  BigInt t = 0;
  for (int k = 1; k <= n + 1; ++k) t += counts[static_cast<size_t>(k)];
  return t;
}

bool same_counts(const HultmanTable& a, const HultmanTable& b) {
  return a.n == b.n && a.counts == b.counts;
}

HultmanTable hultman_direct(int n) {
  if (n < 1 || n > 8)
    throw std::invalid_argument("hultman_direct supports 1 <= n <= 8");
  HultmanTable t{n, std::vector<BigInt>(static_cast<size_t>(n) + 2, BigInt(0)),
                 HultmanMethod::direct};
  for_each_permutation(n, [&](const Permutation& p) {
    t.counts[static_cast<size_t>(alternating_cycle_count(p))] += 1;
  });
  return t;
}

HultmanTable hultman_product(int n) {
  if (n < 1 || n > 9)
    throw std::invalid_argument("hultman_product supports 1 <= n <= 9");
  HultmanTable t{n, std::vector<BigInt>(static_cast<size_t>(n) + 2, BigInt(0)),
                 HultmanMethod::product};
  const Permutation base = canonical_cycle(n + 1);
  for_each_full_cycle(n + 1, [&](const Permutation& q) {
    t.counts[static_cast<size_t>(cycle_count(compose(base, q)))] += 1;
  });
  return t;
}

BigInt hultman_formula(int n, int k) {
  if (n < 1 || k < 1 || k > n + 1)
    throw std::invalid_argument("hultman_formula needs n >= 1, 1 <= k <= n+1");
  if ((n - k) % 2 == 0) return 0;
  return exact_div(stirling_first_unsigned(n + 2, k),
                   binomial(static_cast<unsigned long>(n) + 2, 2));
}

HultmanTable hultman_formula_table(int n) {
  if (n < 1) throw std::invalid_argument("hultman table needs n >= 1");
  HultmanTable t{n, std::vector<BigInt>(static_cast<size_t>(n) + 2, BigInt(0)),
                 HultmanMethod::formula};
  const auto row = stirling_first_row(n + 2);
  const BigInt div = binomial(static_cast<unsigned long>(n) + 2, 2);
  for (int k = 1; k <= n + 1; ++k) {
    if ((n - k) % 2 == 0) continue;
    t.counts[static_cast<size_t>(k)] = exact_div(row[static_cast<size_t>(k)], div);
  }
  return t;
}

std::pair<IntPolynomial, BigInt> cycle_poly_stirling(int n) {
  if (n < 1) throw std::invalid_argument("cycle_poly_stirling needs n >= 1");
  const auto row = stirling_first_row(n + 1);
  IntPolynomial poly;
  for (int i = 0; i <= (n - 1) / 2; ++i) {
    const int e = n - 2 * i;
    poly.add_term(row[static_cast<size_t>(e)], e);
  }
  return {poly, binomial(static_cast<unsigned long>(n) + 1, 2)};
}

std::pair<IntPolynomial, BigInt> cycle_poly_brute(int n) {
  if (n < 2 || n > 9)
    throw std::invalid_argument("cycle_poly_brute supports 2 <= n <= 9");
  const Permutation base = canonical_cycle(n);
  IntPolynomial poly;
  for_each_full_cycle(n, [&](const Permutation& z) {
    poly.add_term(1, cycle_count(compose(base, z)));
  });
  return {poly, BigInt(1)};
}

IntPolynomial hultman_poly(int n) {
  if (n < 1) throw std::invalid_argument("hultman_poly needs n >= 1");
  auto [poly, div] = cycle_poly_stirling(n);
  IntPolynomial q;
  for (int k = 0; k <= poly.degree(); ++k) {
    if (poly.coeff(k) == 0) continue;
    const int e = n % 2 == 0 ? k / 2 : (k + 1) / 2;
    q.add_term(exact_div(poly.coeff(k), div), e);
  }
  return q;
}

bool is_log_concave(const std::vector<BigInt>& coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("empty coefficient list");
  size_t lo = 0, hi = coeffs.size();
  while (lo < hi && coeffs[lo] == 0) ++lo;
  while (hi > lo && coeffs[hi - 1] == 0) --hi;
  if (lo == hi) return true;  // all zero
  for (size_t x = lo; x < hi; ++x)
    if (coeffs[x] == 0)
      throw std::invalid_argument(
          "nonzero support has an internal gap; log-concavity undefined");
  for (size_t x = lo + 1; x + 1 < hi; ++x)
    if (coeffs[x] * coeffs[x] < coeffs[x - 1] * coeffs[x + 1]) return false;
  return true;
}

bool is_unimodal(const std::vector<BigInt>& coeffs) {
  size_t lo = 0, hi = coeffs.size();
  while (lo < hi && coeffs[lo] == 0) ++lo;
  while (hi > lo && coeffs[hi - 1] == 0) --hi;
  bool falling = false;
  for (size_t x = lo + 1; x < hi; ++x) {
    if (coeffs[x] < coeffs[x - 1]) falling = true;
    else if (coeffs[x] > coeffs[x - 1] && falling) return false;
  }
  return true;
}

}  // namespace blocksort
