// Copyright (c) 2026 the subsum authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SUBSUM_SUBSPACE_ENUM_HPP
#define SUBSUM_SUBSPACE_ENUM_HPP

#include <cstdint>
#include <vector>

#include "subsum/bigint.hpp"
#include "subsum/linalg.hpp"

namespace subsum {

inline constexpr std::uint64_t kDefaultMaxVertices = 20000;

/// Number of k-dimensional subspaces of F_q^n (the q-binomial coefficient).
/// q only needs q >= 2 here, not primality.
BigInt gaussian_binomial(std::uint32_t n, std::uint32_t k, std::uint32_t q);

/// Total number of subspaces of F_q^n: sum of gaussian_binomial over k.
BigInt galois_number(std::uint32_t n, std::uint32_t q);

/// All k-dimensional subspaces of F_q^n, each exactly once, in a fixed
/// deterministic order: pivot-column sets ascend lexicographically and the
/// free entries of the RREF shape ascend as a base-q counter (row-major
/// first free cell most significant). Generating through RREF shapes means
/// no canonicalization pass and no duplicates by construction.
std::vector<Subspace> enumerate_subspaces(const Field& f, std::uint32_t n, std::uint32_t k,
                                          std::uint64_t max_count = kDefaultMaxVertices);

/// Nontrivial proper subspaces, ascending dimension; the vertex set of the
/// subspace sum graph. Throws DimensionTooSmall for n < 2.
std::vector<Subspace> enumerate_proper_nontrivial(const Field& f, std::uint32_t n,
                                                  std::uint64_t max_count = kDefaultMaxVertices);

}  // namespace subsum

#endif
