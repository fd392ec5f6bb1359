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

// Faulhaber forms: S_{2m} = E_{2m}(T) S_2 and S_{2m+1} = O_{2m+1}(T) T^2,
// with E/O polynomials of degree m-1 in T = n(n+1)/2.
//
// Three independent routes produce them:
//   recursion - exact division of the recursion-derived S_m (ground truth),
//   Pascal    - subtracting lower forms, weighted by a Pascal row, from a
//               power-of-two multiple of T^{m-1},
//   bridge    - even forms from the odd ones plus lower even forms.
// The last two rest on conjectures and are always checkable against the first.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "powsum/exact.hpp"
#include "powsum/pascal.hpp"
#include "powsum/poly.hpp"
#include "powsum/powersum.hpp"

namespace powsum {

enum class Parity { even, odd };

/// A predicted identity failed on a concrete instance. Carries the
/// conjecture name, the half power m and a description of the evidence.
class ConjectureViolation : public std::runtime_error {
 public:
  ConjectureViolation(std::string conjecture, int m, std::string detail);

  const std::string& conjecture() const { return conjecture_; }
  int m() const { return m_; }
  const std::string& detail() const { return detail_; }

 private:
  std::string conjecture_;
  int m_;
  std::string detail_;
};

/// The scaled presentation: denominator * E_{2m} = a_1 T^{m-1} - a_2 T^{m-2} + ...
/// For m >= 3 the linear and constant parts are folded into one multiple of
/// E_4 = (6T - 1)/5 (even) or O_5 = (4T - 1)/3 (odd), stored last with
/// `tail` set. For m <= 2 the coefficients are plain T powers.
struct ScaledForm {
  Integer denominator;
  /// Signed, highest power of T first.
  std::vector<Rational> coefficients;
  bool tail = false;

  friend bool operator==(const ScaledForm&, const ScaledForm&) = default;
};

/// True when the coefficients are nonzero and alternate +, -, +, ...
bool signs_alternate(const ScaledForm& form);

/// E_4 for the even family, O_5 for the odd family.
const PolyT& tail_polynomial(Parity parity);

template <Parity P>
class Faulhaber {
 public:
  static constexpr Parity parity = P;

  /// Throws std::invalid_argument unless m >= 1 and deg(coeff) == m - 1.
  Faulhaber(int half_power, PolyT coeff);

  /// Rebuilds the polynomial from its scaled presentation.
  static Faulhaber from_scaled(int half_power, const ScaledForm& form);

  int half_power() const { return m_; }
  /// 2m for the even family, 2m + 1 for the odd one.
  int power() const { return P == Parity::even ? 2 * m_ : 2 * m_ + 1; }
  const PolyT& coeff() const { return coeff_; }

  /// Empty when the linear and constant parts do not combine into a
  /// multiple of E_4/O_5 (never the case for true forms).
  const std::optional<ScaledForm>& scaled_form() const { return scaled_; }

  /// Value at T = 1, which is n = 1.
  Rational at_unit() const { return coeff_(Rational(1)); }

  friend bool operator==(const Faulhaber& a, const Faulhaber& b) {
    return a.m_ == b.m_ && a.coeff_ == b.coeff_;
  }

 private:
  int m_;
  PolyT coeff_;
  std::optional<ScaledForm> scaled_;
};

using FaulhaberEven = Faulhaber<Parity::even>;
using FaulhaberOdd = Faulhaber<Parity::odd>;

/// 2m + 1 for the even family, m + 1 for the odd one.
Integer scaled_denominator(Parity parity, int m);

// --- recursion route ------------------------------------------------------

/// S_{2m} / S_2 as a polynomial in T. A nonzero remainder or a quotient that
/// is not a polynomial in T raises ConjectureViolation ("Conjecture 1").
FaulhaberEven decompose_even(const PowerSumTable& table, int m);

/// S_{2m+1} rewritten in T and divided by T^2, same failure mode.
FaulhaberOdd decompose_odd(const PowerSumTable& table, int m);

/// E S_2 or O T^2 expanded back into n.
template <Parity P>
PolyN recompose(const Faulhaber<P>& form, const PowerSumTable& table);

// --- Pascal route -----------------------------------------------------------

/// Solves row . (F_1, ..., F_m) = row.target * T^{m-1} for F_m, where lower
/// holds F_1..F_{m-1} (E_2.. or O_3..). Works for any row of matching kind,
/// including rows that are not Pascal rows.
template <Parity P>
Faulhaber<P> derive_from_row(const PascalRow& row, std::span<const Faulhaber<P>> lower);

FaulhaberEven derive_even_pascal(int m, std::span<const FaulhaberEven> lower);
FaulhaberOdd derive_odd_pascal(int m, std::span<const FaulhaberOdd> lower);

// --- bridge route -----------------------------------------------------------

/// E_{2m} from odd row m applied to O_3..O_{2m+1}, plus 2^{m-1} T^{m-1},
/// minus the lower even forms weighted by the even row built from odd rows
/// m-1 and m. odds needs O_3..O_{2m+1}; lower_evens needs E_2..E_{2m-2}.
FaulhaberEven bridge_even_from_odd(int m, std::span<const FaulhaberOdd> odds,
                                   std::span<const FaulhaberEven> lower_evens);

// --- checking ---------------------------------------------------------------

/// Throws ConjectureViolation when the two forms differ.
template <Parity P>
void cross_check(const Faulhaber<P>& candidate, const Faulhaber<P>& reference,
                 const std::string& conjecture);

struct NRange {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
};

struct VerificationRow {
  std::uint64_t n;
  Rational closed_form;
  Integer oracle;
  bool equal;
};

struct VerificationReport {
  int power = 0;
  std::vector<VerificationRow> rows;
  /// Value of the E/O polynomial at T = 1; absent for plain closed forms.
  std::optional<Rational> unit_value;

  bool passed() const;
  bool unit_ok() const { return unit_value && *unit_value == Rational(1); }
  std::optional<std::uint64_t> first_mismatch() const;
};

/// Rebuilds the sum from the candidate for every n in range and compares
/// with the oracle. Mismatches are report content, not errors.
/// Throws std::invalid_argument for an empty range.
template <Parity P>
VerificationReport verify_candidate(const Faulhaber<P>& candidate, NRange range, unsigned jobs = 1);

/// Same comparison for an expanded closed form of S_power.
VerificationReport verify_closed_form(const PolyN& closed_form, int power, NRange range,
                                      unsigned jobs = 1);

// --- all routes together ------------------------------------------------------

struct RouteSet {
  std::vector<FaulhaberEven> even_recursion;
  std::vector<FaulhaberEven> even_pascal;
  std::vector<FaulhaberEven> even_bridge;
  std::vector<FaulhaberOdd> odd_recursion;
  std::vector<FaulhaberOdd> odd_pascal;
};

/// Every route for m = 1..max_half_power. Each route builds on its own lower
/// results. With cross_checking on, each Pascal and bridge result is compared
/// with the recursion one as soon as it exists. The table must hold
/// S_1..S_{2 max_half_power + 1}.
RouteSet derive_routes(const PowerSumTable& table, int max_half_power, bool cross_checking = true);

}  // namespace powsum
