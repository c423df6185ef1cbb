// Copyright 2026 The agsum Authors.
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include <gtest/gtest.h>

#include "agsum/scalar.hpp"

using namespace agsum;

namespace {

Scalar q(long n, long d) { return Field::rationals().from_mpq(mpq_class(n, d)); }

}  // namespace

TEST(Scalar, RationalSum) {
  EXPECT_EQ(q(1, 2) + q(1, 3), q(5, 6));
}

TEST(Scalar, PrimeProduct) {
  Field f7 = Field::prime(7);
  EXPECT_EQ(f7.from_int(3) * f7.from_int(5), f7.one());
}

TEST(Scalar, ReducesOnConstruction) {
  Scalar a = Field::rationals().from_mpq(mpq_class(2, 4));
  EXPECT_EQ(a.rational().get_num(), 1);
  EXPECT_EQ(a.rational().get_den(), 2);
  EXPECT_EQ(a.to_string(), "1/2");
}

TEST(Scalar, NegativeDenominatorNormalizes) {
  Scalar a = Field::rationals().from_mpq(mpq_class(3, -6));
  EXPECT_EQ(a.to_string(), "-1/2");
}

TEST(Scalar, DivisionByZeroThrows) {
  Field f = Field::rationals();
  EXPECT_THROW(f.one() / f.zero(), FieldError);
  Field f5 = Field::prime(5);
  EXPECT_THROW(f5.zero().inverse(), FieldError);
}

TEST(Scalar, ModulusMismatchThrows) {
  EXPECT_THROW(Field::prime(5).one() + Field::prime(7).one(), FieldError);
  EXPECT_THROW(Field::prime(5).one() * Field::rationals().one(), FieldError);
}

TEST(Scalar, CompositeModulusRejected) {
  EXPECT_THROW(Field::prime(9), FieldError);
  EXPECT_THROW(Field::prime(1), FieldError);
}

TEST(Scalar, FieldAxiomsRandom) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> dist(-50, 50);
  for (Field f : {Field::rationals(), Field::prime(101), Field::prime(2)}) {
    for (int trial = 0; trial < 200; ++trial) {
      auto draw = [&] {
        long d = dist(rng);
        if (d == 0) d = 1;
        return f.is_rational() ? f.from_mpq(mpq_class(dist(rng), d)) : f.from_int(dist(rng));
      };
      Scalar a = draw(), b = draw(), c = draw();
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a - a, f.zero());
      if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), f.one());
    }
  }
}

TEST(Scalar, ReductionIdempotent) {
  Scalar a = q(12, 18);
  Scalar b = Field::rationals().from_mpq(a.rational());
  EXPECT_EQ(a.to_string(), b.to_string());
  EXPECT_EQ(a.to_string(), "2/3");
}

TEST(Scalar, PrimeFieldFromFraction) {
  Field f7 = Field::prime(7);
  Scalar half = f7.from_mpq(mpq_class(1, 2));
  EXPECT_EQ(half * f7.from_int(2), f7.one());
  EXPECT_THROW(f7.from_mpq(mpq_class(1, 7)), FieldError);
}

TEST(Scalar, SquareRoots) {
  EXPECT_EQ(*q(9, 4).sqrt(), q(3, 2));
  EXPECT_FALSE(q(-3, 1).sqrt().has_value());
  EXPECT_FALSE(q(2, 1).sqrt().has_value());
  Field f7 = Field::prime(7);
  auto r = f7.from_int(2).sqrt();  // 3^2 = 9 = 2
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(*r * *r, f7.from_int(2));
  EXPECT_FALSE(f7.from_int(3).sqrt().has_value());
}
