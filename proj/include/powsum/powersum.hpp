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

// Power sums S_m(n) = 1^m + ... + n^m: the brute-force integer oracle and the
// recursion that derives each closed form from the ones below it.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "powsum/exact.hpp"
#include "powsum/poly.hpp"

namespace powsum {

/// Sum_{k=1}^{n} k^m by direct summation; 0 for n = 0.
Integer brute_sum(unsigned m, std::uint64_t n);

/// brute_sum(m, n) for every n in [lo, hi], split into contiguous chunks
/// across `jobs` threads. Each chunk sums directly from k = 1.
std::vector<Integer> brute_sums(unsigned m, std::uint64_t lo, std::uint64_t hi, unsigned jobs = 1);

/// Sum_{k=1}^{n} Sum_{l=1}^{k} l^m by direct summation.
Integer nested_brute_sum(unsigned m, std::uint64_t n);

/// Checks S_{m+1}(n) + nested(m, n) == (n + 1) S_m(n) on oracle values.
bool check_recursion_identity(unsigned m, std::uint64_t n);

/// Where a table entry came from.
enum class Provenance { recursion, cache };

class MissingPower : public std::out_of_range {
 public:
  explicit MissingPower(int power)
      : std::out_of_range("power-sum table has no entry for power " + std::to_string(power)),
        power_(power) {}
  int power() const { return power_; }

 private:
  int power_;
};

/// Closed forms S_m(n) keyed by m >= 1. Read-only sharing is safe once
/// built; construction is single-writer.
class PowerSumTable {
 public:
  struct Entry {
    PolyN poly;
    Provenance provenance = Provenance::recursion;
  };

  bool contains(int m) const { return entries_.count(m) != 0; }

  /// Throws MissingPower.
  const PolyN& at(int m) const;
  const Entry& entry(int m) const;

  void insert(int m, PolyN poly, Provenance provenance);

  /// Largest m such that 1..m are all present; 0 when S_1 is missing.
  int contiguous_max() const;

  std::size_t size() const { return entries_.size(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  /// Same powers with the same polynomials; provenance is ignored.
  bool same_polynomials(const PowerSumTable& other) const;

 private:
  std::map<int, Entry> entries_;
};

/// Replaces each n^i in s by S_i(n) (n^0 by n), i.e. sums s(k) over k = 1..n.
/// Throws MissingPower naming the first absent power.
PolyN nested_sum_poly(const PolyN& s, const PowerSumTable& table);

/// Solves the recursion for S_{m+1}, given S_1..S_m in the table.
PolyN derive_next(const PowerSumTable& table, int m);

/// S_1..S_max_power, seeded with S_1 = (n + n^2)/2.
PowerSumTable derive_upto(int max_power);

/// Extends a table in place until it holds S_1..S_max_power.
void extend_to(PowerSumTable& table, int max_power);

}  // namespace powsum
