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

// The prime divisibility exercise: for p = 2m + 1, does p divide
// 1^2 + 2^2 + ... + m^2?

#include <cstdint>
#include <vector>

#include "powsum/exact.hpp"

namespace powsum {

struct DivisibilityVerdict {
  std::uint64_t p = 0;
  std::uint64_t m = 0;
  Integer sum_value;
  bool divides = false;
  bool is_prime = false;
};

/// Deterministic trial division.
bool is_prime(std::uint64_t n);

/// Brute-force verdict for one odd p >= 3. Throws std::invalid_argument otherwise.
DivisibilityVerdict divisibility_check(std::uint64_t p);

/// Verdicts for every odd p in [3, limit], in increasing order.
/// Throws std::invalid_argument when limit < 3.
std::vector<DivisibilityVerdict> divisibility_scan(std::uint64_t limit, unsigned jobs = 1);

struct DivisibilitySummary {
  std::size_t prime_passes = 0;
  std::size_t prime_failures = 0;
  std::size_t composite_divides = 0;
  std::size_t composite_not = 0;
  std::vector<std::uint64_t> failing_primes;
};

DivisibilitySummary summarize(const std::vector<DivisibilityVerdict>& verdicts);

}  // namespace powsum
