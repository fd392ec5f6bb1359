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

// Exact integers and rationals. Everything in the engine is built on these
// two types; there is no floating point anywhere behind them.

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace powsum {

/// Unlimited-precision signed integer.
using Integer = mpz_class;

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Parses a base-10 integer with an optional leading minus sign.
/// Throws std::invalid_argument on anything else (no whitespace, no '+').
Integer parse_integer(std::string_view text);

Integer pow(const Integer& base, unsigned long exponent);

/// Exact fraction num/den kept in canonical form at all times:
/// den > 0, gcd(|num|, den) = 1, and zero is 0/1.
class Rational {
 public:
  Rational() = default;

  template <std::signed_integral I>
  Rational(I value) : q_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

  template <std::unsigned_integral U>
  Rational(U value) : q_(static_cast<unsigned long>(value)) {}  // NOLINT

  Rational(const Integer& value) : q_(value) {}  // NOLINT

  /// Reduces num/den; throws DivisionByZero when den == 0.
  Rational(const Integer& num, const Integer& den);

  /// Accepts only parts that are already canonical; anything else throws
  /// std::invalid_argument. Used when reading persisted values.
  static Rational from_canonical(const Integer& num, const Integer& den);

  /// "a" or "a/b" in base 10, reduced on the way in.
  static Rational parse(std::string_view text);

  const Integer& numerator() const { return q_.get_num(); }
  const Integer& denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  /// Throws DivisionByZero for zero.
  Rational reciprocal() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.q_, b.q_) <=> 0;
  }

  /// "num" when the denominator is 1, otherwise "num/den".
  std::string str() const;

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// The four field operations as a single dispatch, for callers that carry
/// the operation as data.
enum class ArithOp { add, sub, mul, div };
Rational apply(ArithOp op, const Rational& a, const Rational& b);

}  // namespace powsum
