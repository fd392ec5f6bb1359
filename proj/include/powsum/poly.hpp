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

// Dense univariate polynomials with Rational coefficients. The variable is a
// type parameter: a polynomial in n and a polynomial in the triangular
// variable T = n(n+1)/2 are different types and do not mix.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "powsum/exact.hpp"

namespace powsum {

/// The natural argument n.
struct NaturalVar {
  static constexpr std::string_view symbol = "n";
};

/// The triangular argument T = n(n+1)/2.
struct TriangularVar {
  static constexpr std::string_view symbol = "T";
};

/// Raised by n_to_t when an n-polynomial is not a polynomial in T.
class NonRepresentable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

template <class Var>
class Polynomial {
 public:
  using variable = Var;

  Polynomial() = default;

  /// coeffs[i] is the coefficient of x^i; trailing zeros are dropped.
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

  static Polynomial constant(const Rational& value) { return Polynomial({value}); }

  static Polynomial monomial(const Rational& coeff, std::size_t degree) {
    std::vector<Rational> c(degree + 1);
    c[degree] = coeff;
    return Polynomial(std::move(c));
  }

  /// The variable itself, x.
  static Polynomial identity() { return monomial(Rational(1), 1); }

  bool is_zero() const { return c_.empty(); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  std::span<const Rational> coefficients() const { return c_; }

  /// Coefficient of x^i; zero beyond the degree.
  Rational coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(); }

  const Rational& leading() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
    return c_.back();
  }

  /// Horner evaluation.
  Rational operator()(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc *= x;
      acc += *it;
    }
    return acc;
  }

  Polynomial operator-() const {
    Polynomial out = *this;
    for (auto& v : out.c_) v = -v;
    return out;
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
    trim();
    return *this;
  }

  Polynomial& operator*=(const Rational& k) {
    if (k.is_zero()) {
      c_.clear();
      return *this;
    }
    for (auto& v : c_) v *= k;
    return *this;
  }

  Polynomial& operator/=(const Rational& k) { return *this *= k.reciprocal(); }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& k) { return a *= k; }
  friend Polynomial operator*(const Rational& k, Polynomial a) { return a *= k; }
  friend Polynomial operator/(Polynomial a, const Rational& k) { return a /= k; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(out));
  }

  Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Rational> c_;
};

using PolyN = Polynomial<NaturalVar>;
using PolyT = Polynomial<TriangularVar>;

template <class Var>
struct DivisionResult {
  Polynomial<Var> quotient;
  Polynomial<Var> remainder;
};

/// Long division: p = quotient * d + remainder with deg(remainder) < deg(d).
/// Throws DivisionByZero when d is the zero polynomial.
template <class Var>
DivisionResult<Var> divide(const Polynomial<Var>& p, const Polynomial<Var>& d) {
  if (d.is_zero()) throw DivisionByZero("polynomial division by the zero polynomial");
  const int dd = d.degree();
  std::vector<Rational> rem(p.coefficients().begin(), p.coefficients().end());
  std::vector<Rational> quot(std::max(p.degree() - dd + 1, 0));
  const Rational inv_lead = d.leading().reciprocal();
  auto dc = d.coefficients();
  for (int k = p.degree() - dd; k >= 0; --k) {
    const Rational factor = rem[k + dd] * inv_lead;
    quot[k] = factor;
    if (factor.is_zero()) continue;
    for (int j = 0; j <= dd; ++j) rem[k + j] -= factor * dc[j];
  }
  return {Polynomial<Var>(std::move(quot)), Polynomial<Var>(std::move(rem))};
}

/// (n + n^2)/2.
const PolyN& triangular_in_n();

/// (n + 3n^2 + 2n^3)/6, the sum of squares.
const PolyN& sum_of_squares_in_n();

/// Substitutes T = (n + n^2)/2 and expands.
PolyN t_to_n(const PolyT& p);

/// Rewrites an n-polynomial in powers of T by peeling off leading terms.
/// Throws NonRepresentable if an odd-degree remainder turns up.
PolyT n_to_t(const PolyN& p);

}  // namespace powsum
