// Copyright (c) 2026 the subsum authors
// SPDX-License-Identifier: Apache-2.0

#include "subsum/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace subsum {

std::vector<Scalar> Matrix::row(std::size_t i) const {
  return std::vector<Scalar>(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                             a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Matrix stack(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field() || a.cols() != b.cols())
    throw Error(Errc::AmbientMismatch, "stack of incompatible matrices");
  Matrix out(a.field(), a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, a.at(i, j));
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out.set(a.rows() + i, j, b.at(i, j));
  return out;
}

namespace detail {

RrefResult rref_generic(const Matrix& m) {
  const Field& f = m.field();
  Matrix w = m;
  std::vector<std::size_t> pivots;
  std::size_t cur = 0;
  for (std::size_t col = 0; col < w.cols() && cur < w.rows(); ++col) {
    std::size_t sel = cur;
    while (sel < w.rows() && w.at(sel, col) == 0) ++sel;
    if (sel == w.rows()) continue;
    if (sel != cur)
      for (std::size_t j = 0; j < w.cols(); ++j) {
        Scalar t = w.at(cur, j);
        w.set(cur, j, w.at(sel, j));
        w.set(sel, j, t);
      }
    Scalar piv_inv = f.inv(w.at(cur, col));
    if (piv_inv != 1)
      for (std::size_t j = col; j < w.cols(); ++j) w.set(cur, j, f.mul(w.at(cur, j), piv_inv));
    for (std::size_t i = 0; i < w.rows(); ++i) {
      if (i == cur) continue;
      Scalar factor = w.at(i, col);
      if (factor == 0) continue;
      for (std::size_t j = col; j < w.cols(); ++j)
        w.set(i, j, f.sub(w.at(i, j), f.mul(factor, w.at(cur, j))));
    }
    pivots.push_back(col);
    ++cur;
  }
  return RrefResult{std::move(w), pivots.size(), std::move(pivots)};
}

bool gf2_path_applies(const Matrix& m) { return m.field().q() == 2 && m.cols() <= 64; }

RrefResult rref_gf2(const Matrix& m) {
  assert(gf2_path_applies(m));
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::uint64_t> w(rows, 0);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (m.at(i, j)) w[i] |= std::uint64_t{1} << j;

  std::vector<std::size_t> pivots;
  std::size_t cur = 0;
  for (std::size_t col = 0; col < cols && cur < rows; ++col) {
    const std::uint64_t bit = std::uint64_t{1} << col;
    std::size_t sel = cur;
    while (sel < rows && !(w[sel] & bit)) ++sel;
    if (sel == rows) continue;
    std::swap(w[cur], w[sel]);
    for (std::size_t i = 0; i < rows; ++i)
      if (i != cur && (w[i] & bit)) w[i] ^= w[cur];
    pivots.push_back(col);
    ++cur;
  }

  Matrix out(m.field(), rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out.set(i, j, (w[i] >> j) & 1u);
  return RrefResult{std::move(out), pivots.size(), std::move(pivots)};
}

}  // namespace detail

RrefResult rref(const Matrix& m) {
  return detail::gf2_path_applies(m) ? detail::rref_gf2(m) : detail::rref_generic(m);
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Subspace Subspace::from_generators(const Matrix& generators) {
  RrefResult r = rref(generators);
  Matrix basis(generators.field(), r.rank, generators.cols());
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t j = 0; j < generators.cols(); ++j) basis.set(i, j, r.matrix.at(i, j));
  return Subspace(std::move(basis));
}

Subspace Subspace::zero(const Field& f, std::size_t ambient) {
  return Subspace(Matrix(f, 0, ambient));
}

Subspace Subspace::full(const Field& f, std::size_t ambient) {
  Matrix id(f, ambient, ambient);
  for (std::size_t i = 0; i < ambient; ++i) id.set(i, i, 1);
  return Subspace(std::move(id));
}

Subspace Subspace::span_of(const Field& f, const std::vector<Scalar>& v) {
  Matrix m(f, 1, v.size());
  for (std::size_t j = 0; j < v.size(); ++j) m.set(0, j, v[j]);
  return from_generators(m);
}

bool Subspace::contains(const std::vector<Scalar>& v) const {
  if (v.size() != ambient()) throw Error(Errc::AmbientMismatch, "vector length != ambient");
  Matrix m(field(), dim() + 1, ambient());
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < ambient(); ++j) m.set(i, j, basis_.at(i, j));
  for (std::size_t j = 0; j < ambient(); ++j) m.set(dim(), j, v[j]);
  return rank(m) == dim();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient() != ambient() || other.field() != field())
    throw Error(Errc::AmbientMismatch, "containment across ambient spaces");
  if (other.dim() > dim()) return false;
  return rank(stack(basis_, other.basis_)) == dim();
}

std::string Subspace::label() const {
  if (dim() == 0) return "0";
  std::string out;
  const bool wide = field().q() > 10;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (i) out += '|';
    for (std::size_t j = 0; j < ambient(); ++j) {
      if (wide && j) out += ',';
      Scalar v = basis_.at(i, j);
      if (wide)
        out += std::to_string(v);
      else
        out += static_cast<char>(v < 10 ? '0' + v : 'a' + (v - 10));
    }
  }
  return out;
}

bool Subspace::operator<(const Subspace& other) const noexcept {
  if (ambient() != other.ambient()) return ambient() < other.ambient();
  if (dim() != other.dim()) return dim() < other.dim();
  return basis_.entries() < other.basis_.entries();
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.field() != b.field() || a.ambient() != b.ambient())
    throw Error(Errc::AmbientMismatch, "sum across ambient spaces");
  return Subspace::from_generators(stack(a.basis(), b.basis()));
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
  if (a.field() != b.field() || a.ambient() != b.ambient())
    throw Error(Errc::AmbientMismatch, "intersection across ambient spaces");
  const Field& f = a.field();
  const std::size_t n = a.ambient();
  // Zassenhaus: reduce [A | A; B | 0]; rows whose left block vanished carry
  // an intersection basis in the right block.
  Matrix block(f, a.dim() + b.dim(), 2 * n);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      block.set(i, j, a.basis().at(i, j));
      block.set(i, n + j, a.basis().at(i, j));
    }
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) block.set(a.dim() + i, j, b.basis().at(i, j));

  RrefResult r = detail::gf2_path_applies(block) && 2 * n <= 64
                     ? detail::rref_gf2(block)
                     : detail::rref_generic(block);
  Matrix gens(f, r.rank, n);
  std::size_t count = 0;
  for (std::size_t i = 0; i < r.rank; ++i) {
    bool left_zero = true;
    for (std::size_t j = 0; j < n && left_zero; ++j)
      if (r.matrix.at(i, j) != 0) left_zero = false;
    if (!left_zero) continue;
    for (std::size_t j = 0; j < n; ++j) gens.set(count, j, r.matrix.at(i, n + j));
    ++count;
  }
  Matrix trimmed(f, count, n);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < n; ++j) trimmed.set(i, j, gens.at(i, j));
  return Subspace::from_generators(trimmed);
}

Matrix extend_to_basis(const Subspace& w) {
  if (w.dim() >= w.ambient()) throw Error(Errc::AlreadyFull, "subspace already spans the ambient space");
  const std::size_t n = w.ambient();
  std::vector<bool> is_pivot(n, false);
  {
    // Canonical basis is RREF, so pivot columns are the leading columns.
    std::size_t col = 0;
    for (std::size_t i = 0; i < w.dim(); ++i) {
      while (col < n && w.basis().at(i, col) == 0) ++col;
      assert(col < n);
      is_pivot[col] = true;
    }
  }
  Matrix out(w.field(), n - w.dim(), n);
  std::size_t rowi = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    out.set(rowi, j, 1);
    ++rowi;
  }
  return out;
}

}  // namespace subsum
