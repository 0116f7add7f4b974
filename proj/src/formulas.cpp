// Copyright (c) 2026 the subsum authors
// SPDX-License-Identifier: Apache-2.0

#include "subsum/formulas.hpp"

#include "subsum/error.hpp"
#include "subsum/subspace_enum.hpp"

namespace subsum {
namespace formulas {

namespace {

void check_nq(std::uint32_t n, std::uint32_t q) {
  if (n < 2) throw Error(Errc::RangeError, "n must be >= 2");
  if (q < 2) throw Error(Errc::RangeError, "q must be >= 2");
}

BigRat rat(const BigInt& v) { return BigRat(v); }

}  // namespace

BigInt order(std::uint32_t n, std::uint32_t q) {
  check_nq(n, q);
  return galois_number(n, q) - 2;
}

BigInt clique_chromatic(std::uint32_t n, std::uint32_t q) {
  check_nq(n, q);
  BigInt qq = q, total = 0;
  for (std::uint32_t i = 0; i < n; ++i) total += pow_bigint(qq, i);
  return total;
}

std::uint32_t domination(std::uint32_t n) {
  if (n < 2) throw Error(Errc::RangeError, "n must be >= 2");
  return n;
}

BigInt min_degree(std::uint32_t n, std::uint32_t q) {
  check_nq(n, q);
  return pow_bigint(BigInt(q), n - 1);
}

BigInt edge_connectivity(std::uint32_t n, std::uint32_t q) { return min_degree(n, q); }

FormulaEval degree_as_published(std::uint32_t n, std::uint32_t k, std::uint32_t q) {
  check_nq(n, q);
  if (k < 1 || k > n - 1) throw Error(Errc::RangeError, "k must satisfy 1 <= k <= n-1");
  BigInt qq = q;
  FormulaEval out;
  bool all_integral = true;
  BigInt total = 0;
  for (std::uint32_t r = 0; r < k; ++r) {
    BigRat num = 1;
    for (std::uint32_t i = 0; i < r; ++i)
      num *= rat(pow_bigint(qq, k) - pow_bigint(qq, i));
    for (std::uint32_t i = k; i < n; ++i)
      num *= rat(pow_bigint(qq, n) - pow_bigint(qq, i));
    BigRat den = 1;
    const std::uint32_t d = n - k + r;
    for (std::uint32_t i = 0; i < d; ++i)
      den *= rat(pow_bigint(qq, d) - pow_bigint(qq, i));
    BigRat term = num / den;
    bool integral = boost::multiprecision::denominator(term) == 1;
    out.terms.push_back(FormulaTerm{r, term, integral});
    if (integral)
      total += boost::multiprecision::numerator(term);
    else
      all_integral = false;
  }
  if (all_integral) out.value = total;
  return out;
}

FormulaEval max_degree_as_published(std::uint32_t n, std::uint32_t q) {
  check_nq(n, q);
  BigInt qq = q;
  FormulaEval out;
  bool all_integral = true;
  BigInt total = 0;
  for (std::uint32_t r = 0; r + 2 <= n; ++r) {
    BigRat geom = 0;
    for (std::uint32_t i = 0; i <= r; ++i) geom += rat(pow_bigint(qq, i));
    BigRat term = rat(gaussian_binomial(n - 1, r, q)) * rat(pow_bigint(qq, n - r - 1)) / geom;
    bool integral = boost::multiprecision::denominator(term) == 1;
    out.terms.push_back(FormulaTerm{r, term, integral});
    if (integral)
      total += boost::multiprecision::numerator(term);
    else
      all_integral = false;
  }
  if (all_integral) out.value = total;
  return out;
}

BigInt degree_repaired(std::uint32_t n, std::uint32_t k, std::uint32_t q) {
  check_nq(n, q);
  if (k < 1 || k > n - 1) throw Error(Errc::RangeError, "k must satisfy 1 <= k <= n-1");
  BigInt qq = q, total = 0;
  for (std::uint32_t r = 0; r < k; ++r) {
    BigInt num = 1;
    for (std::uint32_t i = 0; i < r; ++i)
      num *= pow_bigint(qq, k) - pow_bigint(qq, i);
    for (std::uint32_t i = k; i < n; ++i)
      num *= pow_bigint(qq, n) - pow_bigint(qq, i);
    const std::uint32_t d = n - k + r;
    BigInt den = 1;
    for (std::uint32_t i = 0; i < r; ++i)
      den *= pow_bigint(qq, r) - pow_bigint(qq, i);
    for (std::uint32_t i = r; i < d; ++i)
      den *= pow_bigint(qq, d) - pow_bigint(qq, i);
    if (num % den != 0)
      throw Error(Errc::NonIntegerTerm, "repaired degree term is not integral");
    total += num / den;
  }
  return total;
}

bool eulerian(std::uint32_t q) {
  if (q < 2) throw Error(Errc::RangeError, "q must be >= 2");
  return q % 2 == 0;
}

bool perfect(std::uint32_t n) {
  if (n < 2) throw Error(Errc::RangeError, "n must be >= 2");
  return n == 3;
}

std::uint32_t diameter(std::uint32_t n) {
  if (n < 2) throw Error(Errc::RangeError, "n must be >= 2");
  return n == 2 ? 1 : 2;
}

bool complete(std::uint32_t n) {
  if (n < 2) throw Error(Errc::RangeError, "n must be >= 2");
  return n == 2;
}

}  // namespace formulas
}  // namespace subsum
