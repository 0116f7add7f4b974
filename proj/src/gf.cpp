// Copyright (c) 2026 the subsum authors
// SPDX-License-Identifier: Apache-2.0

#include "subsum/gf.hpp"

#include <algorithm>
#include <cassert>

namespace subsum {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NotPrime: return "NotPrime";
    case Errc::DegreeOutOfRange: return "DegreeOutOfRange";
    case Errc::OrderTooLarge: return "OrderTooLarge";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::AmbientMismatch: return "AmbientMismatch";
    case Errc::AlreadyFull: return "AlreadyFull";
    case Errc::RangeError: return "RangeError";
    case Errc::TooLarge: return "TooLarge";
    case Errc::DimensionTooSmall: return "DimensionTooSmall";
    case Errc::Disconnected: return "Disconnected";
    case Errc::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case Errc::ParityError: return "ParityError";
    case Errc::ZeroAnchor: return "ZeroAnchor";
    case Errc::AlreadyAdjacent: return "AlreadyAdjacent";
    case Errc::NonIntegerTerm: return "NonIntegerTerm";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Polynomials over GF(p): coefficient vectors, low degree first, no
// guaranteed trimming.
using Poly = std::vector<std::uint32_t>;

int poly_degree(const Poly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[static_cast<std::size_t>(i)] != 0) return i;
  return -1;
}

// Remainder of f by monic g.
Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
  int dg = poly_degree(g);
  assert(dg >= 0 && g[static_cast<std::size_t>(dg)] == 1);
  int df = poly_degree(f);
  while (df >= dg) {
    std::uint32_t lead = f[static_cast<std::size_t>(df)];
    int shift = df - dg;
    for (int i = 0; i <= dg; ++i) {
      std::uint64_t sub = static_cast<std::uint64_t>(lead) * g[static_cast<std::size_t>(i)] % p;
      std::uint32_t& c = f[static_cast<std::size_t>(i + shift)];
      c = static_cast<std::uint32_t>((c + p - sub) % p);
    }
    df = poly_degree(f);
  }
  return f;
}

bool poly_is_irreducible(const Poly& f, std::uint32_t p) {
  int r = poly_degree(f);
  if (r < 1) return false;
  if (r == 1) return true;
  // Exhaustive trial division by every monic polynomial of degree 1..r/2;
  // fine at desk scale (q <= 2^16).
  for (int d = 1; 2 * d <= r; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly g(static_cast<std::size_t>(d) + 1, 0);
      std::uint64_t v = idx;
      for (int i = 0; i < d; ++i) {
        g[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      g[static_cast<std::size_t>(d)] = 1;
      if (poly_degree(poly_mod(f, g, p)) < 0) return false;
    }
  }
  return true;
}

// Smallest monic irreducible of degree r over GF(p), coefficients compared
// low-degree-first.
Poly smallest_irreducible(std::uint32_t p, std::uint32_t r) {
  if (r == 1) return Poly{0, 1};  // x
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < r; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Poly f(r + 1, 0);
    // idx digits with c0 as the most significant digit, so ascending idx is
    // lexicographic ascent on (c0, c1, ..., c_{r-1}).
    std::uint64_t v = idx;
    for (std::uint32_t i = 0; i < r; ++i) {
      std::uint32_t pos = r - 1 - i;
      f[pos] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    f[r] = 1;
    if (poly_is_irreducible(f, p)) return f;
  }
  throw Error(Errc::Internal, "no irreducible polynomial found");
}

constexpr std::uint32_t kTableLimit = 1u << 12;

}  // namespace

struct Field::Data {
  std::uint32_t p = 0;
  std::uint32_t r = 0;
  std::uint32_t q = 0;
  Poly modulus;
  // log/antilog tables for q <= 2^12: exp_table[i] = g^i for a fixed
  // primitive g, log_table[exp_table[i]] = i.
  std::vector<Scalar> exp_table;
  std::vector<std::uint32_t> log_table;

  std::vector<std::uint32_t> decode(Scalar a) const {
    std::vector<std::uint32_t> c(r);
    for (std::uint32_t i = 0; i < r; ++i) {
      c[i] = a % p;
      a /= p;
    }
    return c;
  }

  Scalar encode(const std::vector<std::uint32_t>& c) const {
    Scalar v = 0;
    for (std::uint32_t i = r; i-- > 0;) v = v * p + (i < c.size() ? c[i] % p : 0);
    return v;
  }

  Scalar add(Scalar a, Scalar b) const {
    if (r == 1) return (a + b) % p;
    if (p == 2) return a ^ b;
    Scalar out = 0, mult = 1;
    for (std::uint32_t i = 0; i < r; ++i) {
      out += (a % p + b % p) % p * mult;
      a /= p;
      b /= p;
      mult *= p;
    }
    return out;
  }

  Scalar neg(Scalar a) const {
    if (r == 1) return (p - a) % p;
    if (p == 2) return a;
    Scalar out = 0, mult = 1;
    for (std::uint32_t i = 0; i < r; ++i) {
      out += (p - a % p) % p * mult;
      a /= p;
      mult *= p;
    }
    return out;
  }

  Scalar mul_direct(Scalar a, Scalar b) const {
    if (r == 1) return static_cast<Scalar>(static_cast<std::uint64_t>(a) * b % p);
    auto ca = decode(a), cb = decode(b);
    Poly prod(2 * r - 1, 0);
    for (std::uint32_t i = 0; i < r; ++i) {
      if (ca[i] == 0) continue;
      for (std::uint32_t j = 0; j < r; ++j)
        prod[i + j] = static_cast<std::uint32_t>(
            (prod[i + j] + static_cast<std::uint64_t>(ca[i]) * cb[j]) % p);
    }
    Poly rem = poly_mod(std::move(prod), modulus, p);
    rem.resize(r);
    return encode(rem);
  }

  Scalar mul(Scalar a, Scalar b) const {
    if (!exp_table.empty()) {
      if (a == 0 || b == 0) return 0;
      std::uint32_t s = log_table[a] + log_table[b];
      if (s >= q - 1) s -= q - 1;
      return exp_table[s];
    }
    return mul_direct(a, b);
  }

  Scalar pow(Scalar a, std::uint64_t e) const {
    Scalar acc = 1, base = a;
    while (e > 0) {
      if (e & 1) acc = mul(acc, base);
      base = mul(base, base);
      e >>= 1;
    }
    return acc;
  }

  Scalar inv(Scalar a) const {
    if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
    if (!exp_table.empty()) {
      std::uint32_t l = log_table[a];
      return exp_table[l == 0 ? 0 : q - 1 - l];
    }
    return pow(a, q - 2);
  }

  void build_tables() {
    if (q <= 2 || q > kTableLimit) return;
    // Smallest primitive element by index.
    for (Scalar g = 2; g < q; ++g) {
      Scalar x = 1;
      std::uint32_t ord = 0;
      do {
        x = mul_direct(x, g);
        ++ord;
      } while (x != 1);
      if (ord == q - 1) {
        exp_table.assign(q - 1, 0);
        log_table.assign(q, 0);
        Scalar v = 1;
        for (std::uint32_t i = 0; i < q - 1; ++i) {
          exp_table[i] = v;
          log_table[v] = i;
          v = mul_direct(v, g);
        }
        return;
      }
    }
    throw Error(Errc::Internal, "no primitive element found");
  }
};

Field Field::make(std::uint32_t p, std::uint32_t r, std::uint32_t max_order) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, "p = " + std::to_string(p));
  if (r < 1 || r > 32) throw Error(Errc::DegreeOutOfRange, "r = " + std::to_string(r));
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < r; ++i) {
    q *= p;
    if (q > max_order)
      throw Error(Errc::OrderTooLarge, "q = p^r exceeds limit " + std::to_string(max_order));
  }
  auto d = std::make_shared<Data>();
  d->p = p;
  d->r = r;
  d->q = static_cast<std::uint32_t>(q);
  d->modulus = smallest_irreducible(p, r);
  d->build_tables();
  return Field(std::move(d));
}

Field Field::from_order(std::uint32_t q, std::uint32_t max_order) {
  if (q < 2) throw Error(Errc::InvalidArgument, "q = " + std::to_string(q) + " is not a prime power");
  std::uint32_t p = q;
  for (std::uint32_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  std::uint32_t r = 0, v = q;
  while (v % p == 0) {
    v /= p;
    ++r;
  }
  if (v != 1)
    throw Error(Errc::InvalidArgument, "q = " + std::to_string(q) + " is not a prime power");
  return make(p, r, max_order);
}

std::uint32_t Field::p() const noexcept { return data_->p; }
std::uint32_t Field::r() const noexcept { return data_->r; }
std::uint32_t Field::q() const noexcept { return data_->q; }
const std::vector<std::uint32_t>& Field::modulus() const noexcept { return data_->modulus; }

Scalar Field::add(Scalar a, Scalar b) const {
  assert(a < data_->q && b < data_->q);
  return data_->add(a, b);
}

Scalar Field::sub(Scalar a, Scalar b) const { return data_->add(a, data_->neg(b)); }
Scalar Field::neg(Scalar a) const { return data_->neg(a); }

Scalar Field::mul(Scalar a, Scalar b) const {
  assert(a < data_->q && b < data_->q);
  return data_->mul(a, b);
}

Scalar Field::inv(Scalar a) const { return data_->inv(a); }
Scalar Field::pow(Scalar a, std::uint64_t e) const { return data_->pow(a, e); }
Scalar Field::mul_direct(Scalar a, Scalar b) const { return data_->mul_direct(a, b); }
bool Field::has_tables() const noexcept { return !data_->exp_table.empty(); }

std::vector<std::uint32_t> Field::coeffs(Scalar a) const { return data_->decode(a); }
Scalar Field::from_coeffs(const std::vector<std::uint32_t>& c) const { return data_->encode(c); }

bool Field::operator==(const Field& other) const noexcept {
  return data_ == other.data_ ||
         (data_->p == other.data_->p && data_->r == other.data_->r);
}

}  // namespace subsum
