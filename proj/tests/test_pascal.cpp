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

#include "powsum/pascal.hpp"

namespace powsum {
namespace {

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

TEST(Binomial, OutOfRangeIsZero) {
  EXPECT_EQ(binom(7, 3), 35);
  EXPECT_EQ(binom(7, 4), 35);
  EXPECT_EQ(binom(2, -1), 0);
  EXPECT_EQ(binom(3, 5), 0);
  EXPECT_EQ(binom(0, 0), 1);
  EXPECT_EQ(binom(60, 30), Integer("118264581564861424"));
}

TEST(Rows, OddTableLines) {
  const std::vector<std::string> expected{
      "1 = 1",         "4 = 1+3",           "8 = 0+4+4",
      "16 = 0+1+10+5", "32 = 0+0+6+20+6",   "64 = 0+0+1+21+35+7",
      "128 = 0+0+0+8+56+56+8"};
  for (int m = 1; m <= 7; ++m) EXPECT_EQ(render_row(row_odd(m)), expected[m - 1]);
}

TEST(Rows, EvenTableLines) {
  const std::vector<std::string> expected{
      "1 = 1",         "6 = 1+5",            "12 = 0+5+7",
      "24 = 0+1+14+9", "48 = 0+0+7+30+11",   "96 = 0+0+1+27+55+13",
      "192 = 0+0+0+9+77+91+15"};
  for (int m = 1; m <= 7; ++m) EXPECT_EQ(render_row(row_even(m)), expected[m - 1]);
}

TEST(Rows, BaseRows) {
  EXPECT_EQ(row_odd(1).entries, ints({2}));
  EXPECT_EQ(row_odd(1).target, 2);
  EXPECT_EQ(row_even(1).entries, ints({3}));
  EXPECT_EQ(row_even(1).target, 3);
  EXPECT_EQ(row_odd(7).entries, ints({0, 0, 0, 8, 56, 56, 8}));
  EXPECT_EQ(row_even(7).entries, ints({0, 0, 0, 9, 77, 91, 15}));
}

TEST(Rows, InvalidIndexThrows) {
  EXPECT_THROW(row_odd(0), std::invalid_argument);
  EXPECT_THROW(row_even(-2), std::invalid_argument);
}

TEST(Rows, SumsMatchTargets) {
  for (int m = 1; m <= 60; ++m) {
    const PascalRow o = row_odd(m);
    const PascalRow e = row_even(m);
    EXPECT_EQ(o.sum(), pow(Integer(2), static_cast<unsigned long>(m)));
    EXPECT_EQ(e.sum(), 3 * pow(Integer(2), static_cast<unsigned long>(m - 1)));
    EXPECT_EQ(o.sum(), o.target);
    EXPECT_EQ(e.sum(), e.target);
    EXPECT_EQ(static_cast<int>(o.entries.size()), m);
    EXPECT_EQ(o.last(), m + 1);
    EXPECT_EQ(e.last(), 2 * m + 1);
  }
}

TEST(Rows, OddEntriesSitOnTheTriangle) {
  for (int m = 1; m <= 40; ++m) {
    std::vector<Integer> expected(static_cast<std::size_t>(m), 0);
    for (int t = 0; m - 2 * t >= 0; ++t) expected[static_cast<std::size_t>(m - t - 1)] = binom(m + 1, m - 2 * t);
    EXPECT_EQ(row_odd(m).entries, expected) << "m=" << m;
  }
}

TEST(Rows, EvenRowIsShiftedSumOfOddRows) {
  for (int m = 2; m <= 60; ++m) {
    EXPECT_EQ(combine_odd_rows(row_odd(m - 1), row_odd(m)), row_even(m)) << "m=" << m;
  }
}

TEST(Rows, CombineValidatesInputs) {
  EXPECT_THROW(combine_odd_rows(row_odd(3), row_odd(3)), std::invalid_argument);
  EXPECT_THROW(combine_odd_rows(row_even(2), row_odd(3)), std::invalid_argument);
}

TEST(Identities, PowersOfTwo) {
  for (int m = 1; m <= 40; ++m) EXPECT_TRUE(power_identity_check(m)) << "m=" << m;
}

TEST(Identities, HockeyStick) {
  for (long n = 0; n <= 500; ++n) ASSERT_TRUE(hockey_identity_check(n)) << "n=" << n;
}

TEST(Identities, InstancesAtFive) {
  EXPECT_EQ(binom(6, 2), 15);
  EXPECT_EQ(binom(6, 3) + binom(7, 3), 55);
  EXPECT_EQ(binom(7, 3), 35);
  EXPECT_EQ(binom(7, 4) + binom(8, 4), 105);
}

}  // namespace
}  // namespace powsum
