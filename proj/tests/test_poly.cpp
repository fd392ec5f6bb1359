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

#include <functional>
#include <type_traits>

#include "powsum/poly.hpp"
#include "support/generators.hpp"

namespace powsum {
namespace {

static_assert(!std::is_invocable_v<std::plus<>, PolyN, PolyT>);
static_assert(!std::is_invocable_v<std::multiplies<>, PolyT, PolyN>);
static_assert(!std::is_invocable_v<std::equal_to<>, PolyN, PolyT>);
static_assert(std::is_invocable_v<std::plus<>, PolyN, PolyN>);

const PolyN n_ = PolyN::identity();

TEST(Polynomial, TrimsTrailingZeros) {
  const PolyN p{1, 2, 0, 0};
  EXPECT_EQ(p.degree(), 1);
  EXPECT_EQ(p, (PolyN{1, 2}));
  EXPECT_EQ(PolyN{}.degree(), -1);
  EXPECT_TRUE((PolyN{0, 0}).is_zero());
  EXPECT_THROW(PolyN{}.leading(), std::logic_error);
}

TEST(Polynomial, CoefficientBeyondDegreeIsZero) {
  const PolyT p{3, 4};
  EXPECT_EQ(p.coefficient(7), Rational(0));
  EXPECT_EQ(p.leading(), Rational(4));
}

TEST(Polynomial, HornerEvaluation) {
  const PolyN s2{0, Rational(1, 6), Rational(1, 2), Rational(1, 3)};
  EXPECT_EQ(s2(Rational(10)), Rational(385));
  EXPECT_EQ(s2(Rational(0)), Rational(0));
  EXPECT_EQ(s2(Rational(-1)), Rational(0));
}

TEST(Polynomial, Arithmetic) {
  const PolyN a{1, 1};
  const PolyN b{-1, 1};
  EXPECT_EQ(a * b, (PolyN{-1, 0, 1}));
  EXPECT_EQ(a + b, (PolyN{0, 2}));
  EXPECT_EQ(a - a, PolyN{});
  EXPECT_EQ(a * Rational(1, 2), (PolyN{Rational(1, 2), Rational(1, 2)}));
  EXPECT_EQ(a / Rational(2), a * Rational(1, 2));
  EXPECT_EQ(-a, (PolyN{-1, -1}));
  EXPECT_EQ(a * PolyN{}, PolyN{});
}

TEST(Polynomial, ExactDivision) {
  const auto [q, r] = divide(PolyN{-1, 0, 0, 1}, PolyN{-1, 1});
  EXPECT_EQ(q, (PolyN{1, 1, 1}));
  EXPECT_TRUE(r.is_zero());
}

TEST(Polynomial, DivisionWithRemainder) {
  const auto [q, r] = divide(PolyN{1, 0, 1}, PolyN{0, 1});
  EXPECT_EQ(q, (PolyN{0, 1}));
  EXPECT_EQ(r, (PolyN{1}));
  const auto [q2, r2] = divide(PolyN{1, 2}, PolyN{0, 0, 1});
  EXPECT_TRUE(q2.is_zero());
  EXPECT_EQ(r2, (PolyN{1, 2}));
}

TEST(Polynomial, DivisionByZeroPolynomialThrows) {
  EXPECT_THROW(divide(PolyN{1}, PolyN{}), DivisionByZero);
}

TEST(Triangular, KnownPolynomials) {
  EXPECT_EQ(triangular_in_n(), (PolyN{0, Rational(1, 2), Rational(1, 2)}));
  EXPECT_EQ(sum_of_squares_in_n(), (PolyN{0, Rational(1, 6), Rational(1, 2), Rational(1, 3)}));
  EXPECT_EQ(t_to_n(PolyT::identity()), triangular_in_n());
  EXPECT_EQ(n_to_t(triangular_in_n() * triangular_in_n()), PolyT::monomial(1, 2));
}

TEST(Triangular, CubeSumIsTSquared) {
  const PolyN s3{0, 0, Rational(1, 4), Rational(1, 2), Rational(1, 4)};
  EXPECT_EQ(n_to_t(s3), PolyT::monomial(1, 2));
}

TEST(Triangular, OddPolynomialsAreNotRepresentable) {
  EXPECT_THROW(n_to_t(n_), NonRepresentable);
  EXPECT_THROW(n_to_t(sum_of_squares_in_n()), NonRepresentable);
  EXPECT_THROW(n_to_t(PolyN{0, 1, 1} + PolyN{0, 0, 0, 1}), NonRepresentable);
}

TEST(Triangular, ConstantsPassThrough) {
  EXPECT_EQ(n_to_t(PolyN{5}), PolyT{5});
  EXPECT_EQ(n_to_t(PolyN{}), PolyT{});
}

TEST(PolynomialProperty, DivisionIdentity) {
  auto rng = testing::make_rng(10);
  for (int i = 0; i < 200; ++i) {
    const PolyN p = testing::random_poly<NaturalVar>(rng, 8);
    PolyN d = testing::random_poly<NaturalVar>(rng, 4);
    if (d.is_zero()) d = PolyN{1};
    const auto [q, r] = divide(p, d);
    EXPECT_EQ(q * d + r, p);
    EXPECT_LT(r.degree(), d.degree() == 0 ? 0 : d.degree());
  }
}

TEST(PolynomialProperty, MultiplicationIsEvaluationHomomorphism) {
  auto rng = testing::make_rng(11);
  for (int i = 0; i < 200; ++i) {
    const PolyT a = testing::random_poly<TriangularVar>(rng, 6);
    const PolyT b = testing::random_poly<TriangularVar>(rng, 6);
    const Rational x = testing::random_rational(rng, 9);
    EXPECT_EQ((a * b)(x), a(x) * b(x));
    EXPECT_EQ((a + b)(x), a(x) + b(x));
  }
}

TEST(PolynomialProperty, TriangularRoundTrip) {
  auto rng = testing::make_rng(12);
  for (int i = 0; i < 200; ++i) {
    const PolyT p = testing::random_poly<TriangularVar>(rng, 7);
    const PolyN in_n = t_to_n(p);
    EXPECT_EQ(n_to_t(in_n), p);
    const Rational n = testing::random_rational(rng, 30);
    EXPECT_EQ(in_n(n), p(triangular_in_n()(n)));
    if (!p.is_zero()) EXPECT_EQ(in_n.degree(), 2 * p.degree());
  }
}

}  // namespace
}  // namespace powsum
