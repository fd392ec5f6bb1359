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

#include "powsum/poly.hpp"

#include <string>

namespace powsum {

const PolyN& triangular_in_n() {
  static const PolyN t{Rational(0), Rational(1, 2), Rational(1, 2)};
  return t;
}

const PolyN& sum_of_squares_in_n() {
  static const PolyN s{Rational(0), Rational(1, 6), Rational(1, 2), Rational(1, 3)};
  return s;
}

PolyN t_to_n(const PolyT& p) {
  PolyN acc;
  auto c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * triangular_in_n();
    acc += PolyN::constant(*it);
  }
  return acc;
}

PolyT n_to_t(const PolyN& p) {
  if (p.degree() <= 0) return PolyT(std::vector<Rational>(p.coefficients().begin(), p.coefficients().end()));
  if (p.degree() % 2 != 0) {
    throw NonRepresentable("degree " + std::to_string(p.degree()) +
                           " polynomial in n is not a polynomial in T");
  }
  const std::size_t top = static_cast<std::size_t>(p.degree() / 2);
  // powers[d] = T^d expanded in n; leading coefficient 1/2^d.
  std::vector<PolyN> powers{PolyN::constant(Rational(1))};
  for (std::size_t d = 1; d <= top; ++d) powers.push_back(powers.back() * triangular_in_n());

  std::vector<Rational> out(top + 1);
  PolyN rest = p;
  while (rest.degree() > 0) {
    if (rest.degree() % 2 != 0) {
      throw NonRepresentable("remainder of degree " + std::to_string(rest.degree()) +
                             " survives; the polynomial is not a polynomial in T");
    }
    const auto d = static_cast<std::size_t>(rest.degree() / 2);
    const Rational c = rest.leading() / powers[d].leading();
    out[d] = c;
    rest -= powers[d] * c;
  }
  out[0] = rest.coefficient(0);
  return PolyT(std::move(out));
}

}  // namespace powsum
