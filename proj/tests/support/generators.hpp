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

// Seeded generators shared by the property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "powsum/exact.hpp"
#include "powsum/poly.hpp"

namespace powsum::testing {

inline constexpr std::uint64_t kSeed = 20260101;

inline std::mt19937_64 make_rng(std::uint64_t salt) { return std::mt19937_64(kSeed ^ (salt * 0x9E3779B97F4A7C15ull)); }

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Rational random_rational(std::mt19937_64& rng, long bound = 50) {
  long den = uniform(rng, 1, bound);
  return Rational(uniform(rng, -bound, bound), den);
}

inline Rational random_nonzero(std::mt19937_64& rng, long bound = 50) {
  Rational r;
  do {
    r = random_rational(rng, bound);
  } while (r.is_zero());
  return r;
}

template <class Var>
Polynomial<Var> random_poly(std::mt19937_64& rng, int max_degree, long bound = 20) {
  std::vector<Rational> c;
  const long degree = uniform(rng, 0, max_degree);
  for (long i = 0; i <= degree; ++i) c.push_back(random_rational(rng, bound));
  return Polynomial<Var>(std::move(c));
}

}  // namespace powsum::testing
