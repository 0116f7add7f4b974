// Copyright (c) 2026 the subsum authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SUBSUM_BIGINT_HPP
#define SUBSUM_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace subsum {

// Subspace counts (Galois numbers) overflow 64 bits quickly, so every count
// and closed-form value is exact arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt pow_bigint(const BigInt& base, unsigned exp) {
  BigInt acc = 1;
  for (unsigned i = 0; i < exp; ++i) acc *= base;
  return acc;
}

}  // namespace subsum

#endif
