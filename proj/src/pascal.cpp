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

#include "powsum/pascal.hpp"

#include <numeric>
#include <stdexcept>

#include "powsum/powersum.hpp"

namespace powsum {

Integer binom(long a, long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return out;
}

Integer PascalRow::sum() const { return std::accumulate(entries.begin(), entries.end(), Integer(0)); }

Integer row_target(RowKind kind, int m) {
  if (kind == RowKind::odd) return pow(Integer(2), static_cast<unsigned long>(m));
  return 3 * pow(Integer(2), static_cast<unsigned long>(m - 1));
}

PascalRow row_odd(int m) {
  if (m < 1) throw std::invalid_argument("row_odd needs m >= 1");
  PascalRow row{RowKind::odd, m, {}, row_target(RowKind::odd, m)};
  for (long t = 0; t < m; ++t) row.entries.push_back(binom(m + 1, 2 * t + 2 - m));
  return row;
}

PascalRow row_even(int m) {
  if (m < 1) throw std::invalid_argument("row_even needs m >= 1");
  PascalRow row{RowKind::even, m, {}, row_target(RowKind::even, m)};
  for (long t = 0; t < m; ++t) {
    row.entries.push_back(binom(m + 1, 2 * t + 2 - m) + binom(m, 2 * t + 1 - m));
  }
  return row;
}

PascalRow combine_odd_rows(const PascalRow& previous, const PascalRow& current) {
  if (previous.kind != RowKind::odd || current.kind != RowKind::odd ||
      previous.m + 1 != current.m) {
    throw std::invalid_argument("combine_odd_rows needs odd rows m-1 and m");
  }
  PascalRow row{RowKind::even, current.m, current.entries, previous.target + current.target};
  for (std::size_t t = 1; t < row.entries.size(); ++t) {
    if (t - 1 < previous.entries.size()) row.entries[t] += previous.entries[t - 1];
  }
  return row;
}

bool power_identity_check(int m) {
  if (m < 0) return false;
  Integer even_part = 0;
  for (long j = 0; j <= m + 1; j += 2) even_part += binom(m + 1, j);
  Integer odd_part = 0;
  for (long j = 1; j <= m + 2; j += 2) odd_part += binom(m + 2, j);
  const Integer two_m = pow(Integer(2), static_cast<unsigned long>(m));
  return even_part == two_m && odd_part == 2 * two_m;
}

namespace {

// C(a, b) after checking it against its mirror image C(a, a-b).
bool symmetric(long a, long b, Integer& value) {
  value = binom(a, b);
  return value == binom(a, a - b);
}

}  // namespace

bool hockey_identity_check(long n) {
  if (n < 0) return false;
  const auto un = static_cast<std::uint64_t>(n);
  Integer a, b, c;
  bool ok = true;

  ok &= symmetric(n + 1, 2, a) && brute_sum(1, un) == a;
  ok &= symmetric(n + 1, 3, a) && symmetric(n + 2, 3, b) && brute_sum(2, un) == a + b;
  ok &= symmetric(n + 2, 3, a) && nested_brute_sum(1, un) == a;
  ok &= symmetric(n + 2, 4, b) && symmetric(n + 3, 4, c) && nested_brute_sum(2, un) == b + c;
  return ok;
}

std::string render_row(const PascalRow& row) {
  if (row.m == 1) return "1 = 1";
  std::string out = row.target.get_str() + " =";
  for (std::size_t t = 0; t < row.entries.size(); ++t) {
    out += (t == 0 ? " " : "+");
    out += row.entries[t].get_str();
  }
  return out;
}

}  // namespace powsum
