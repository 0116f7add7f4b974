// Copyright (c) 2026 the subsum authors
// SPDX-License-Identifier: Apache-2.0

#include "subsum/subspace_enum.hpp"

#include <cassert>

namespace subsum {

BigInt gaussian_binomial(std::uint32_t n, std::uint32_t k, std::uint32_t q) {
  if (q < 2) throw Error(Errc::RangeError, "q must be >= 2");
  if (k > n) throw Error(Errc::RangeError, "k > n");
  BigInt qq = q;
  BigInt num = 1, den = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    num *= pow_bigint(qq, n) - pow_bigint(qq, i);
    den *= pow_bigint(qq, k) - pow_bigint(qq, i);
  }
  assert(num % den == 0);
  return num / den;
}

BigInt galois_number(std::uint32_t n, std::uint32_t q) {
  if (q < 2) throw Error(Errc::RangeError, "q must be >= 2");
  BigInt total = 0;
  for (std::uint32_t k = 0; k <= n; ++k) total += gaussian_binomial(n, k, q);
  return total;
}

namespace {

// Free cells of the RREF shape for a pivot-column set: positions (i, j) with
// j > pivot[i] and j not a pivot column, in row-major order.
std::vector<std::pair<std::uint32_t, std::uint32_t>> free_cells(
    const std::vector<std::uint32_t>& pivots, std::uint32_t n) {
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> cells;
  for (std::uint32_t i = 0; i < pivots.size(); ++i)
    for (std::uint32_t j = pivots[i] + 1; j < n; ++j)
      if (!is_pivot[j]) cells.emplace_back(i, j);
  return cells;
}

}  // namespace

std::vector<Subspace> enumerate_subspaces(const Field& f, std::uint32_t n, std::uint32_t k,
                                          std::uint64_t max_count) {
  if (k > n) throw Error(Errc::RangeError, "k > n");
  BigInt expected = gaussian_binomial(n, k, f.q());
  if (expected > max_count)
    throw Error(Errc::TooLarge,
                "subspace count " + expected.str() + " exceeds cap " + std::to_string(max_count));

  std::vector<Subspace> out;
  out.reserve(static_cast<std::size_t>(expected));

  if (k == 0) {
    out.push_back(Subspace::zero(f, n));
    return out;
  }

  // First pivot-column combination in lexicographic order.
  std::vector<std::uint32_t> pivots(k);
  for (std::uint32_t i = 0; i < k; ++i) pivots[i] = i;

  const std::uint32_t q = f.q();
  while (true) {
    auto cells = free_cells(pivots, n);
    std::vector<Scalar> fill(cells.size(), 0);
    while (true) {
      Matrix m(f, k, n);
      for (std::uint32_t i = 0; i < k; ++i) m.set(i, pivots[i], 1);
      for (std::size_t c = 0; c < cells.size(); ++c) m.set(cells[c].first, cells[c].second, fill[c]);
      out.push_back(Subspace::from_generators(m));
      // Ascending base-q counter, first cell most significant.
      bool carry = true;
      for (std::size_t pos = cells.size(); carry && pos > 0;) {
        --pos;
        if (++fill[pos] < q)
          carry = false;
        else
          fill[pos] = 0;
      }
      if (carry) break;
    }
    // Next k-combination of {0..n-1} in lexicographic order.
    std::int64_t i = static_cast<std::int64_t>(k) - 1;
    while (i >= 0 && pivots[static_cast<std::size_t>(i)] ==
                         n - k + static_cast<std::uint32_t>(i))
      --i;
    if (i < 0) break;
    ++pivots[static_cast<std::size_t>(i)];
    for (std::size_t j = static_cast<std::size_t>(i) + 1; j < k; ++j)
      pivots[j] = pivots[j - 1] + 1;
  }

  assert(BigInt(out.size()) == expected);
  return out;
}

std::vector<Subspace> enumerate_proper_nontrivial(const Field& f, std::uint32_t n,
                                                  std::uint64_t max_count) {
  if (n < 2) throw Error(Errc::DimensionTooSmall, "graph needs ambient dimension >= 2");
  BigInt expected = galois_number(n, f.q()) - 2;
  if (expected > max_count)
    throw Error(Errc::TooLarge,
                "vertex count " + expected.str() + " exceeds cap " + std::to_string(max_count));
  std::vector<Subspace> out;
  out.reserve(static_cast<std::size_t>(expected));
  for (std::uint32_t k = 1; k < n; ++k) {
    auto layer = enumerate_subspaces(f, n, k, max_count);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace subsum
