// Copyright 2026 The powsum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <sstream>

#include "powsum/exact.hpp"
#include "support/generators.hpp"

namespace powsum {
namespace {

TEST(Rational, ReducesOnConstruction) {
  const Rational r(2, 4);
  EXPECT_EQ(r.numerator(), 1);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(r, Rational(1, 2));
}

TEST(Rational, DenominatorSignMovesToNumerator) {
  const Rational r(1, -2);
  EXPECT_EQ(r.numerator(), -1);
  EXPECT_EQ(r.denominator(), 2);
}

TEST(Rational, ZeroIsCanonical) {
  const Rational r(0, -7);
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(r.denominator(), 1);
  EXPECT_EQ(r.str(), "0");
}

TEST(Rational, ZeroDenominatorThrows) {
  EXPECT_THROW(Rational(1, 0), DivisionByZero);
  EXPECT_THROW(Rational(1) / Rational(0), DivisionByZero);
  EXPECT_THROW(Rational(0).reciprocal(), DivisionByZero);
}

TEST(Rational, FromCanonicalGate) {
  EXPECT_EQ(Rational::from_canonical(-1, 5), Rational(-1, 5));
  EXPECT_THROW(Rational::from_canonical(2, 4), std::invalid_argument);
  EXPECT_THROW(Rational::from_canonical(1, -2), std::invalid_argument);
  EXPECT_THROW(Rational::from_canonical(1, 0), std::invalid_argument);
  EXPECT_THROW(Rational::from_canonical(0, 2), std::invalid_argument);
  EXPECT_EQ(Rational::from_canonical(0, 1), Rational(0));
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("3/6"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("-7"), Rational(-7));
  EXPECT_EQ(Rational::parse("-691/455"), Rational(-691, 455));
  EXPECT_THROW(Rational::parse(""), std::invalid_argument);
  EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1/2/3"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1/0"), DivisionByZero);
}

TEST(Rational, StringForms) {
  EXPECT_EQ(Rational(-1, 5).str(), "-1/5");
  EXPECT_EQ(Rational(3).str(), "3");
  std::ostringstream os;
  os << Rational(96, 13);
  EXPECT_EQ(os.str(), "96/13");
}

TEST(Rational, Ordering) {
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
  EXPECT_EQ(Rational(2, 6) <=> Rational(1, 3), std::strong_ordering::equal);
}

TEST(Rational, ApplyMatchesOperators) {
  const Rational a(3, 4), b(-5, 6);
  EXPECT_EQ(apply(ArithOp::add, a, b), Rational(-1, 12));
  EXPECT_EQ(apply(ArithOp::sub, a, b), Rational(19, 12));
  EXPECT_EQ(apply(ArithOp::mul, a, b), Rational(-5, 8));
  EXPECT_EQ(apply(ArithOp::div, a, b), Rational(-9, 10));
  EXPECT_THROW(apply(ArithOp::div, a, Rational(0)), DivisionByZero);
}

TEST(Rational, HugeValuesStayExact) {
  const Integer big = pow(Integer(2), 200);
  const Rational r(big + 1, big);
  EXPECT_EQ((r - Rational(1)) * Rational(big), Rational(1));
  EXPECT_EQ(parse_integer(big.get_str()), big);
}

TEST(Integer, ParseRejectsJunk) {
  EXPECT_EQ(parse_integer("-42"), -42);
  EXPECT_THROW(parse_integer("-"), std::invalid_argument);
  EXPECT_THROW(parse_integer("4 2"), std::invalid_argument);
  EXPECT_THROW(parse_integer("+3"), std::invalid_argument);
}

TEST(RationalProperty, FieldAxioms) {
  auto rng = testing::make_rng(1);
  for (int i = 0; i < 500; ++i) {
    const Rational a = testing::random_rational(rng);
    const Rational b = testing::random_rational(rng);
    const Rational c = testing::random_rational(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, Rational(0));
    EXPECT_EQ(a + (-a), Rational(0));
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.reciprocal(), Rational(1));
      EXPECT_EQ((b / a) * a, b);
    }
  }
}

TEST(RationalProperty, AlwaysCanonical) {
  auto rng = testing::make_rng(2);
  for (int i = 0; i < 500; ++i) {
    const Rational r = testing::random_rational(rng, 1000) * testing::random_rational(rng, 1000);
    EXPECT_GT(r.denominator(), 0);
    Integer g;
    mpz_gcd(g.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
    EXPECT_EQ(g, 1);
    EXPECT_EQ(Rational::parse(r.str()), r);
  }
}

}  // namespace
}  // namespace powsum
