// Copyright (c) 2026 the subsum authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "subsum/gf.hpp"

using subsum::Errc;
using subsum::Error;
using subsum::Field;
using subsum::Scalar;

TEST_CASE("prime fields construct with the x modulus") {
  Field f2 = Field::make(2, 1);
  CHECK(f2.p() == 2);
  CHECK(f2.r() == 1);
  CHECK(f2.q() == 2);
  CHECK(f2.modulus() == std::vector<std::uint32_t>{0, 1});

  Field f5 = Field::make(5, 1);
  CHECK(f5.q() == 5);
}

TEST_CASE("GF(4) selects x^2+x+1, the only monic irreducible quadratic") {
  Field f4 = Field::make(2, 2);
  CHECK(f4.q() == 4);
  CHECK(f4.modulus() == std::vector<std::uint32_t>{1, 1, 1});
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(Field::make(4, 1), Error);
  CHECK_THROWS_AS(Field::make(1, 1), Error);
  CHECK_THROWS_AS(Field::make(2, 0), Error);
  CHECK_THROWS_AS(Field::make(2, 17), Error);  // 2^17 > default bound
  try {
    Field::make(6, 1);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotPrime);
  }
}

TEST_CASE("from_order factors prime powers and rejects others") {
  Field f9 = Field::from_order(9);
  CHECK(f9.p() == 3);
  CHECK(f9.r() == 2);
  CHECK_THROWS_AS(Field::from_order(6), Error);
  CHECK_THROWS_AS(Field::from_order(12), Error);
  CHECK_THROWS_AS(Field::from_order(1), Error);
}

TEST_CASE("addition examples") {
  Field f2 = Field::make(2, 1);
  CHECK(f2.add(1, 1) == 0);

  Field f5 = Field::make(5, 1);
  CHECK(f5.add(3, 4) == 2);

  // GF(4): x + (x+1) = 1. Encoding: x = 2, x+1 = 3.
  Field f4 = Field::make(2, 2);
  CHECK(f4.add(2, 3) == 1);
}

TEST_CASE("multiplication and inverse examples") {
  Field f5 = Field::make(5, 1);
  CHECK(f5.inv(2) == 3);

  // GF(4): x * x reduces to x+1 by x^2+x+1.
  Field f4 = Field::make(2, 2);
  CHECK(f4.mul(2, 2) == 3);

  Field f2 = Field::make(2, 1);
  for (std::uint64_t k = 0; k < 10; ++k) CHECK(f2.pow(1, k) == 1);

  CHECK_THROWS_AS(f5.inv(0), Error);
}

TEST_CASE("field axioms hold exhaustively for q <= 64") {
  for (auto [p, r] : {std::pair<std::uint32_t, std::uint32_t>{2, 1}, {3, 1}, {2, 2}, {5, 1},
                      {7, 1}, {2, 3}, {3, 2}, {2, 4}, {5, 2}, {3, 3}, {2, 5}, {7, 2}, {2, 6}}) {
    Field f = Field::make(p, r);
    const Scalar q = f.q();
    for (Scalar a = 0; a < q; ++a) {
      CHECK(f.add(a, 0) == a);
      CHECK(f.mul(a, 1) == a);
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a != 0) {
        CHECK(f.mul(a, f.inv(a)) == 1);
        CHECK(f.pow(a, q - 1) == 1);
      }
      for (Scalar b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
      }
    }
    std::uint64_t violations = 0;
    for (Scalar a = 0; a < q; ++a)
      for (Scalar b = 0; b < q; ++b)
        for (Scalar c = 0; c < q; ++c) {
          if (f.add(f.add(a, b), c) != f.add(a, f.add(b, c))) ++violations;
          if (f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c))) ++violations;
          if (f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c))) ++violations;
        }
    CHECK(violations == 0);
  }
}

TEST_CASE("log/antilog tables agree with direct reduction exhaustively") {
  for (std::uint32_t q : {4u, 8u, 9u, 16u, 27u, 64u, 81u, 256u, 729u, 2048u, 4096u}) {
    Field f = Field::from_order(q);
    CHECK(f.has_tables());
    std::uint64_t mismatches = 0;
    for (Scalar a = 0; a < q; ++a)
      for (Scalar b = 0; b < q; ++b)
        if (f.mul(a, b) != f.mul_direct(a, b)) ++mismatches;
    CHECK(mismatches == 0);
  }
  // Above the table limit multiplication still works via direct reduction.
  Field big = Field::from_order(8192);
  CHECK(!big.has_tables());
  CHECK(big.mul(1, 7) == 7);
  CHECK(big.mul(big.inv(1234), 1234) == 1);
}

TEST_CASE("scalar coefficient round trip") {
  Field f27 = Field::from_order(27);
  for (Scalar a = 0; a < 27; ++a) CHECK(f27.from_coeffs(f27.coeffs(a)) == a);
  CHECK(f27.coeffs(5) == std::vector<std::uint32_t>{2, 1, 0});
}
