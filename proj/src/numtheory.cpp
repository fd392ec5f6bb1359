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

#include "powsum/numtheory.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <thread>

#include "powsum/powersum.hpp"

namespace powsum {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

namespace {

DivisibilityVerdict make_verdict(std::uint64_t p, Integer sum) {
  DivisibilityVerdict v;
  v.p = p;
  v.m = (p - 1) / 2;
  v.divides = mpz_divisible_ui_p(sum.get_mpz_t(), p) != 0;
  v.sum_value = std::move(sum);
  v.is_prime = is_prime(p);
  return v;
}

// Verdicts for the odd p in [first, last], carrying the square sum forward.
void scan_chunk(std::uint64_t first, std::uint64_t last, DivisibilityVerdict* out) {
  std::uint64_t m = (first - 1) / 2;
  Integer sum = brute_sum(2, m);
  for (std::uint64_t p = first; p <= last; p += 2, ++m) {
    if (p != first) sum += Integer(m) * Integer(m);
    *out++ = make_verdict(p, sum);
  }
}

}  // namespace

DivisibilityVerdict divisibility_check(std::uint64_t p) {
  if (p < 3 || p % 2 == 0) {
    throw std::invalid_argument("divisibility check needs an odd p >= 3, got " +
                                std::to_string(p));
  }
  return make_verdict(p, brute_sum(2, (p - 1) / 2));
}

std::vector<DivisibilityVerdict> divisibility_scan(std::uint64_t limit, unsigned jobs) {
  if (limit < 3) throw std::invalid_argument("divisibility scan needs limit >= 3");
  const std::uint64_t count = (limit - 1) / 2;
  std::vector<DivisibilityVerdict> verdicts(count);
  const std::uint64_t workers = std::clamp<std::uint64_t>(jobs, 1, count);
  const std::uint64_t chunk = (count + workers - 1) / workers;
  {
    std::vector<std::jthread> threads;
    for (std::uint64_t begin = 0; begin < count; begin += chunk) {
      const std::uint64_t end = std::min(count, begin + chunk);
      threads.emplace_back(scan_chunk, 2 * begin + 3, 2 * end + 1, verdicts.data() + begin);
    }
  }
  return verdicts;
}

DivisibilitySummary summarize(const std::vector<DivisibilityVerdict>& verdicts) {
  DivisibilitySummary s;
  for (const auto& v : verdicts) {
    if (v.is_prime) {
      if (v.divides) {
        ++s.prime_passes;
      } else {
        ++s.prime_failures;
        s.failing_primes.push_back(v.p);
      }
    } else if (v.divides) {
      ++s.composite_divides;
    } else {
      ++s.composite_not;
    }
  }
  return s;
}

}  // namespace powsum
