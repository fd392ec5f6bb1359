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

#pragma once

// Binomial coefficients and the aligned coefficient rows that tie the
// E/O relations to Pascal's Triangle.
//
// Odd row m:  sum_t o[t] O_{2t+3} = 2^m T^{m-1},        o[t] = C(m+1, 2t+2-m)
// Even row m: sum_t e[t] E_{2t+2} = 3 2^{m-1} T^{m-1},  e[t] = C(m+1, 2t+2-m) + C(m, 2t+1-m)
//
// Both rows have m entries, t = 0..m-1, with leading zeros kept.

#include <string>
#include <vector>

#include "powsum/exact.hpp"

namespace powsum {

/// C(a, b), zero outside 0 <= b <= a.
Integer binom(long a, long b);

enum class RowKind { even, odd };

struct PascalRow {
  RowKind kind = RowKind::odd;
  int m = 1;
  /// Index t holds the coefficient of O_{2t+3} (odd) or E_{2t+2} (even).
  std::vector<Integer> entries;
  /// 2^m for odd rows, 3 * 2^{m-1} for even rows.
  Integer target;

  Integer sum() const;
  /// Coefficient of the row's newest term, O_{2m+1} or E_{2m}.
  const Integer& last() const { return entries.back(); }

  friend bool operator==(const PascalRow&, const PascalRow&) = default;
};

/// Default target for a row of the given kind and index.
Integer row_target(RowKind kind, int m);

PascalRow row_odd(int m);
PascalRow row_even(int m);

/// Even row m assembled from odd rows m-1 and m: the entry for E_{2j}
/// is o_{2j-1} from the older row plus o'_{2j+1} from the newer one.
PascalRow combine_odd_rows(const PascalRow& previous, const PascalRow& current);

/// 2^m equals the even-index entries of row m+1 of the triangle, and
/// 2^{m+1} the odd-index entries of row m+2.
bool power_identity_check(int m);

/// The binomial forms of sum k, sum k^2, and their running totals at this n,
/// each compared against the brute-force oracle. Every binomial is checked in
/// both its stated form and its symmetric form C(a, a-b).
bool hockey_identity_check(long n);

/// "48 = 0+0+7+30+11". The first row of each kind is shown normalized as
/// "1 = 1" (E_2 = O_3 = 1).
std::string render_row(const PascalRow& row);

}  // namespace powsum
