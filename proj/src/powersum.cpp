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

#include "powsum/powersum.hpp"

#include <algorithm>
#include <thread>

namespace powsum {

Integer brute_sum(unsigned m, std::uint64_t n) {
  Integer total = 0;
  Integer term;
  for (std::uint64_t k = 1; k <= n; ++k) {
    mpz_ui_pow_ui(term.get_mpz_t(), k, m);
    total += term;
  }
  return total;
}

std::vector<Integer> brute_sums(unsigned m, std::uint64_t lo, std::uint64_t hi, unsigned jobs) {
  if (hi < lo) return {};
  const std::uint64_t count = hi - lo + 1;
  std::vector<Integer> out(count);
  const std::uint64_t workers = std::clamp<std::uint64_t>(jobs, 1, count);
  const std::uint64_t chunk = (count + workers - 1) / workers;

  auto fill = [&](std::uint64_t begin, std::uint64_t end) {
    Integer acc = brute_sum(m, lo + begin);
    Integer term;
    out[begin] = acc;
    for (std::uint64_t i = begin + 1; i < end; ++i) {
      mpz_ui_pow_ui(term.get_mpz_t(), lo + i, m);
      acc += term;
      out[i] = acc;
    }
  };

  {
    std::vector<std::jthread> threads;
    for (std::uint64_t begin = chunk; begin < count; begin += chunk) {
      threads.emplace_back(fill, begin, std::min(begin + chunk, count));
    }
    fill(0, std::min(chunk, count));
  }
  return out;
}

Integer nested_brute_sum(unsigned m, std::uint64_t n) {
  Integer inner = 0;
  Integer total = 0;
  Integer term;
  for (std::uint64_t k = 1; k <= n; ++k) {
    mpz_ui_pow_ui(term.get_mpz_t(), k, m);
    inner += term;
    total += inner;
  }
  return total;
}

bool check_recursion_identity(unsigned m, std::uint64_t n) {
  const Integer lhs = brute_sum(m + 1, n) + nested_brute_sum(m, n);
  const Integer rhs = Integer(static_cast<unsigned long>(n + 1)) * brute_sum(m, n);
  return lhs == rhs;
}

const PolyN& PowerSumTable::at(int m) const { return entry(m).poly; }

const PowerSumTable::Entry& PowerSumTable::entry(int m) const {
  auto it = entries_.find(m);
  if (it == entries_.end()) throw MissingPower(m);
  return it->second;
}

void PowerSumTable::insert(int m, PolyN poly, Provenance provenance) {
  if (m < 1) throw std::invalid_argument("power-sum table keys start at 1");
  entries_[m] = Entry{std::move(poly), provenance};
}

int PowerSumTable::contiguous_max() const {
  int m = 0;
  while (entries_.count(m + 1) != 0) ++m;
  return m;
}

bool PowerSumTable::same_polynomials(const PowerSumTable& other) const {
  if (entries_.size() != other.entries_.size()) return false;
  for (const auto& [m, e] : entries_) {
    auto it = other.entries_.find(m);
    if (it == other.entries_.end() || !(it->second.poly == e.poly)) return false;
  }
  return true;
}

PolyN nested_sum_poly(const PolyN& s, const PowerSumTable& table) {
  PolyN out;
  auto c = s.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    if (i == 0) {
      out += PolyN::identity() * c[0];
    } else {
      out += table.at(static_cast<int>(i)) * c[i];
    }
  }
  return out;
}

PolyN derive_next(const PowerSumTable& table, int m) {
  if (m < 1) throw std::invalid_argument("derive_next needs m >= 1");
  for (int i = 1; i <= m; ++i) {
    if (!table.contains(i)) throw MissingPower(i);
  }
  const PolyN& current = table.at(m);
  if (current.degree() != m + 1) {
    throw std::logic_error("S_" + std::to_string(m) + " has degree " +
                           std::to_string(current.degree()) + ", expected " +
                           std::to_string(m + 1));
  }
  // S_{m+1} + sum_i c_i S_i = (n+1) S_m, where the i = m+1 term is
  // c_{m+1} S_{m+1}; move it to the left and divide.
  const Rational top = current.leading();
  PolyN below = current - PolyN::monomial(top, static_cast<std::size_t>(m + 1));
  PolyN rhs = PolyN{Rational(1), Rational(1)} * current - nested_sum_poly(below, table);
  return rhs / (Rational(1) + top);
}

PowerSumTable derive_upto(int max_power) {
  if (max_power < 1) throw std::invalid_argument("derive_upto needs max_power >= 1");
  PowerSumTable table;
  extend_to(table, max_power);
  return table;
}

void extend_to(PowerSumTable& table, int max_power) {
  if (!table.contains(1)) table.insert(1, triangular_in_n(), Provenance::recursion);
  for (int m = table.contiguous_max(); m < max_power; ++m) {
    table.insert(m + 1, derive_next(table, m), Provenance::recursion);
  }
}

}  // namespace powsum
