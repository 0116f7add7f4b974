// Copyright (c) 2026 the subsum authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SUBSUM_LINALG_HPP
#define SUBSUM_LINALG_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "subsum/gf.hpp"

namespace subsum {

/// Dense row-major matrix of field elements. Immutable value semantics in
/// practice: operations return fresh matrices.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, 0) {
    if (cols == 0) throw Error(Errc::InvalidArgument, "matrix needs at least one column");
  }

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Scalar v) { a_[i * cols_ + j] = v; }

  const std::vector<Scalar>& entries() const noexcept { return a_; }

  /// Row i as a vector of element indices.
  std::vector<Scalar> row(std::size_t i) const;

  bool operator==(const Matrix& other) const noexcept {
    return field_ == other.field_ && rows_ == other.rows_ && cols_ == other.cols_ &&
           a_ == other.a_;
  }
  bool operator!=(const Matrix& other) const noexcept { return !(*this == other); }

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> a_;
};

struct RrefResult {
  Matrix matrix;                    ///< Same shape; zero rows trail.
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;  ///< Strictly increasing.
};

/// Reduced row echelon form. Deterministic: leftmost pivot column, topmost
/// eligible row. Dispatches to the GF(2) bit-packed path when possible.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Rows of a on top of rows of b. Throws AmbientMismatch on field/column
/// disagreement.
Matrix stack(const Matrix& a, const Matrix& b);

namespace detail {
/// Generic elimination over any GF(q); always available.
RrefResult rref_generic(const Matrix& m);
/// Word-packed XOR elimination; requires q = 2 and cols <= 64. Bit-exact
/// equivalent to rref_generic (cross-checked exhaustively in tests).
RrefResult rref_gf2(const Matrix& m);
bool gf2_path_applies(const Matrix& m);
}  // namespace detail

/// A subspace of F_q^n in canonical form: the unique RREF basis with zero
/// rows dropped. Canonicity makes equality a plain value compare, which is
/// what gives graph vertices a well-defined identity.
class Subspace {
 public:
  /// Canonicalizes the row space of the generator matrix.
  static Subspace from_generators(const Matrix& generators);
  static Subspace zero(const Field& f, std::size_t ambient);
  static Subspace full(const Field& f, std::size_t ambient);
  /// Span of a single vector.
  static Subspace span_of(const Field& f, const std::vector<Scalar>& v);

  const Field& field() const noexcept { return basis_.field(); }
  std::size_t ambient() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }

  /// Canonical basis: dim rows, ambient cols, RREF with no zero rows.
  const Matrix& basis() const noexcept { return basis_; }

  bool is_zero() const noexcept { return dim() == 0; }
  bool is_full() const noexcept { return dim() == ambient(); }

  /// Membership test for a single vector.
  bool contains(const std::vector<Scalar>& v) const;
  /// Subspace containment: other <= this.
  bool contains(const Subspace& other) const;

  /// Rows as digit strings (element indices), joined by '|'; the zero
  /// subspace prints as "0". Used for DOT labels, CSV and JSON.
  std::string label() const;

  bool operator==(const Subspace& other) const noexcept { return basis_ == other.basis_; }
  bool operator!=(const Subspace& other) const noexcept { return !(*this == other); }
  bool operator<(const Subspace& other) const noexcept;

 private:
  explicit Subspace(Matrix basis) : basis_(std::move(basis)) {}
  Matrix basis_;
};

/// Canonical sum of two subspaces of the same ambient space.
Subspace subspace_sum(const Subspace& a, const Subspace& b);

/// Canonical intersection, via the Zassenhaus block elimination scheme.
Subspace subspace_intersection(const Subspace& a, const Subspace& b);

/// Standard basis vectors e_j for the non-pivot columns j of w's RREF; the
/// returned rows stacked on w's basis always have full rank. Throws
/// AlreadyFull when dim(w) = ambient.
Matrix extend_to_basis(const Subspace& w);

}  // namespace subsum

#endif
