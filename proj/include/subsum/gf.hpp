// Copyright (c) 2026 the subsum authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SUBSUM_GF_HPP
#define SUBSUM_GF_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "subsum/error.hpp"

namespace subsum {

/// A field element, encoded as its index in [0, q). The index is the base-p
/// evaluation of the element's coefficient vector: value = sum c_i * p^i.
using Scalar = std::uint32_t;

inline constexpr std::uint32_t kDefaultMaxFieldOrder = 1u << 16;

/// GF(p^r) with a deterministic modulus polynomial.
///
/// The modulus is the lexicographically smallest monic irreducible of degree
/// r over GF(p), coefficients compared low-degree-first, so a field built
/// from (p, r) is identical across runs and machines. Handles are cheap to
/// copy and safe to share across threads; all arithmetic is pure.
class Field {
 public:
  /// Builds GF(p^r). Throws NotPrime, DegreeOutOfRange or OrderTooLarge.
  static Field make(std::uint32_t p, std::uint32_t r,
                    std::uint32_t max_order = kDefaultMaxFieldOrder);

  /// Parses a prime-power order q into (p, r) and builds the field.
  /// Throws InvalidArgument if q is not a prime power.
  static Field from_order(std::uint32_t q,
                          std::uint32_t max_order = kDefaultMaxFieldOrder);

  std::uint32_t p() const noexcept;
  std::uint32_t r() const noexcept;
  std::uint32_t q() const noexcept;

  /// Modulus coefficients, low degree first, length r + 1, monic.
  /// For r = 1 this is x, i.e. {0, 1}.
  const std::vector<std::uint32_t>& modulus() const noexcept;

  Scalar add(Scalar a, Scalar b) const;
  Scalar sub(Scalar a, Scalar b) const;
  Scalar neg(Scalar a) const;
  Scalar mul(Scalar a, Scalar b) const;
  Scalar inv(Scalar a) const;  ///< Throws DivisionByZero for a = 0.
  Scalar pow(Scalar a, std::uint64_t e) const;

  /// Multiplication by direct polynomial reduction, bypassing the log/exp
  /// tables. Must agree with mul() everywhere; the test suite checks this
  /// exhaustively.
  Scalar mul_direct(Scalar a, Scalar b) const;

  bool has_tables() const noexcept;

  /// Base-p coefficient vector of an element, length r, low degree first.
  std::vector<std::uint32_t> coeffs(Scalar a) const;
  Scalar from_coeffs(const std::vector<std::uint32_t>& c) const;

  bool operator==(const Field& other) const noexcept;
  bool operator!=(const Field& other) const noexcept { return !(*this == other); }

 private:
  struct Data;
  explicit Field(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;
};

}  // namespace subsum

#endif
