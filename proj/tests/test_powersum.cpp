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

#include "powsum/powersum.hpp"
#include "support/generators.hpp"

namespace powsum {
namespace {

PolyN over(std::initializer_list<long> numerators, long den) {
  std::vector<Rational> c;
  for (long v : numerators) c.push_back(Rational(v, den));
  return PolyN(std::move(c));
}

TEST(Oracle, DirectSums) {
  EXPECT_EQ(brute_sum(4, 5), 979);
  EXPECT_EQ(brute_sum(7, 0), 0);
  EXPECT_EQ(brute_sum(0, 9), 9);
  EXPECT_EQ(brute_sum(10, 10), Integer("14914341925"));
  EXPECT_EQ(nested_brute_sum(3, 5), 371);
  EXPECT_EQ(nested_brute_sum(8, 50), Integer("1318883706625290"));
}

TEST(Oracle, RangeMatchesPointwiseForAnyJobCount) {
  for (unsigned jobs : {1u, 2u, 3u, 8u}) {
    const auto values = brute_sums(6, 3, 40, jobs);
    ASSERT_EQ(values.size(), 38u);
    for (std::uint64_t n = 3; n <= 40; ++n) EXPECT_EQ(values[n - 3], brute_sum(6, n));
  }
  EXPECT_EQ(brute_sums(2, 0, 0).size(), 1u);
}

TEST(Oracle, RecursionIdentity) {
  for (unsigned m = 0; m <= 10; ++m) {
    for (std::uint64_t n = 0; n <= 30; ++n) EXPECT_TRUE(check_recursion_identity(m, n));
  }
}

TEST(Table, GoldenClosedForms) {
  const PowerSumTable t = derive_upto(9);
  EXPECT_EQ(t.at(1), over({0, 1, 1}, 2));
  EXPECT_EQ(t.at(2), over({0, 1, 3, 2}, 6));
  EXPECT_EQ(t.at(3), over({0, 0, 1, 2, 1}, 4));
  EXPECT_EQ(t.at(4), over({0, -1, 0, 10, 15, 6}, 30));
  EXPECT_EQ(t.at(5), over({0, 0, -1, 0, 5, 6, 2}, 12));
  EXPECT_EQ(t.at(6), over({0, 1, 0, -7, 0, 21, 21, 6}, 42));
  EXPECT_EQ(t.at(7), over({0, 0, 2, 0, -7, 0, 14, 12, 3}, 24));
  EXPECT_EQ(t.at(8), over({0, -3, 0, 20, 0, -42, 0, 60, 45, 10}, 90));
  EXPECT_EQ(t.at(9), over({0, 0, -3, 0, 10, 0, -14, 0, 15, 10, 2}, 20));
}

TEST(Table, NestedSumOfSquares) {
  const PowerSumTable t = derive_upto(3);
  EXPECT_EQ(nested_sum_poly(t.at(2), t), over({0, 2, 5, 4, 1}, 12));
  EXPECT_EQ(nested_sum_poly(t.at(2), t)(Rational(5)), Rational(nested_brute_sum(2, 5)));
}

TEST(Table, NestedSumNeedsEveryPower) {
  PowerSumTable t;
  t.insert(1, over({0, 1, 1}, 2), Provenance::recursion);
  try {
    nested_sum_poly(PolyN::monomial(1, 3), t);
    FAIL() << "expected MissingPower";
  } catch (const MissingPower& e) {
    EXPECT_EQ(e.power(), 3);
  }
  EXPECT_THROW(derive_next(t, 2), MissingPower);
}

TEST(Table, ExtendAndCompare) {
  PowerSumTable a = derive_upto(4);
  EXPECT_EQ(a.contiguous_max(), 4);
  extend_to(a, 8);
  EXPECT_EQ(a.contiguous_max(), 8);
  EXPECT_TRUE(a.same_polynomials(derive_upto(8)));
  EXPECT_FALSE(a.same_polynomials(derive_upto(7)));
  EXPECT_EQ(a.entry(8).provenance, Provenance::recursion);
  EXPECT_EQ(PowerSumTable{}.contiguous_max(), 0);
  EXPECT_THROW(a.at(9), MissingPower);
}

TEST(TableProperty, AgreesWithOracle) {
  const PowerSumTable t = derive_upto(20);
  auto rng = testing::make_rng(20);
  for (int m = 1; m <= 20; ++m) {
    const PolyN& s = t.at(m);
    EXPECT_EQ(s.degree(), m + 1);
    EXPECT_EQ(s.leading(), Rational(1, m + 1));
    EXPECT_EQ(s(Rational(0)), Rational(0));
    EXPECT_EQ(s(Rational(-1)), Rational(0));
    for (int i = 0; i < 10; ++i) {
      const auto n = static_cast<std::uint64_t>(testing::uniform(rng, 0, 1000));
      EXPECT_EQ(s(Rational(n)), Rational(brute_sum(static_cast<unsigned>(m), n))) << "m=" << m << " n=" << n;
    }
  }
}

TEST(TableProperty, NestedSumsAgreeWithOracle) {
  const PowerSumTable t = derive_upto(13);
  for (int m = 1; m <= 12; ++m) {
    const PolyN nested = nested_sum_poly(t.at(m), t);
    for (std::uint64_t n = 0; n <= 100; n += 7) {
      EXPECT_EQ(nested(Rational(n)), Rational(nested_brute_sum(static_cast<unsigned>(m), n)));
    }
  }
}

}  // namespace
}  // namespace powsum
