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

#include "powsum/faulhaber.hpp"

#include <algorithm>
#include <thread>

namespace powsum {

namespace {

template <class Var>
std::string describe(const Polynomial<Var>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  auto c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + c[i].str() + ")";
    if (i > 0) out += std::string(Var::symbol) + "^" + std::to_string(i);
  }
  return out;
}

const PolyT& t_squared() {
  static const PolyT t2 = PolyT::monomial(Rational(1), 2);
  return t2;
}

std::optional<ScaledForm> make_scaled(Parity parity, int m, const PolyT& coeff) {
  ScaledForm form{scaled_denominator(parity, m), {}, false};
  const PolyT scaled = coeff * Rational(form.denominator);
  if (m <= 2) {
    for (int k = m - 1; k >= 0; --k) form.coefficients.push_back(scaled.coefficient(k));
    return form;
  }
  for (int k = m - 1; k >= 2; --k) form.coefficients.push_back(scaled.coefficient(k));
  const PolyT& tail = tail_polynomial(parity);
  const Rational multiple = scaled.coefficient(0) / tail.coefficient(0);
  if (multiple * tail.coefficient(1) != scaled.coefficient(1)) return std::nullopt;
  form.coefficients.push_back(multiple);
  form.tail = true;
  return form;
}

template <Parity P>
void require_lower(std::span<const Faulhaber<P>> lower, int count, const char* what) {
  if (static_cast<int>(lower.size()) < count) {
    throw std::invalid_argument(std::string(what) + ": need " + std::to_string(count) +
                                " lower forms, got " + std::to_string(lower.size()));
  }
  for (int t = 0; t < count; ++t) {
    if (lower[t].half_power() != t + 1) {
      throw std::invalid_argument(std::string(what) + ": lower forms out of order");
    }
  }
}

}  // namespace

ConjectureViolation::ConjectureViolation(std::string conjecture, int m, std::string detail)
    : std::runtime_error(conjecture + " violated at m = " + std::to_string(m) + ": " + detail),
      conjecture_(std::move(conjecture)),
      m_(m),
      detail_(std::move(detail)) {}

bool signs_alternate(const ScaledForm& form) {
  for (std::size_t i = 0; i < form.coefficients.size(); ++i) {
    const int expected = i % 2 == 0 ? 1 : -1;
    if (form.coefficients[i].sign() != expected) return false;
  }
  return true;
}

const PolyT& tail_polynomial(Parity parity) {
  static const PolyT e4{Rational(-1, 5), Rational(6, 5)};
  static const PolyT o5{Rational(-1, 3), Rational(4, 3)};
  return parity == Parity::even ? e4 : o5;
}

Integer scaled_denominator(Parity parity, int m) {
  return parity == Parity::even ? Integer(2 * m + 1) : Integer(m + 1);
}

template <Parity P>
Faulhaber<P>::Faulhaber(int half_power, PolyT coeff) : m_(half_power), coeff_(std::move(coeff)) {
  if (m_ < 1) throw std::invalid_argument("Faulhaber form needs half power m >= 1");
  if (coeff_.degree() != m_ - 1) {
    throw std::invalid_argument("Faulhaber form for m = " + std::to_string(m_) +
                                " must have degree " + std::to_string(m_ - 1) + " in T, got " +
                                std::to_string(coeff_.degree()));
  }
  scaled_ = make_scaled(P, m_, coeff_);
}

template <Parity P>
Faulhaber<P> Faulhaber<P>::from_scaled(int half_power, const ScaledForm& form) {
  if (half_power < 1) throw std::invalid_argument("Faulhaber form needs half power m >= 1");
  if (form.denominator != scaled_denominator(P, half_power)) {
    throw std::invalid_argument("scaled form has denominator " + form.denominator.get_str() +
                                ", expected " + scaled_denominator(P, half_power).get_str());
  }
  const auto expected = static_cast<std::size_t>(half_power <= 2 ? half_power : half_power - 1);
  if (form.coefficients.size() != expected || form.tail != (half_power > 2)) {
    throw std::invalid_argument("scaled form has the wrong shape for m = " +
                                std::to_string(half_power));
  }
  PolyT coeff;
  const auto powers = form.tail ? form.coefficients.size() - 1 : form.coefficients.size();
  for (std::size_t i = 0; i < powers; ++i) {
    coeff += PolyT::monomial(form.coefficients[i], static_cast<std::size_t>(half_power - 1) - i);
  }
  if (form.tail) coeff += tail_polynomial(P) * form.coefficients.back();
  return Faulhaber(half_power, coeff / Rational(form.denominator));
}

template class Faulhaber<Parity::even>;
template class Faulhaber<Parity::odd>;

FaulhaberEven decompose_even(const PowerSumTable& table, int m) {
  if (m < 1) throw std::invalid_argument("decompose_even needs m >= 1");
  auto [quotient, remainder] = divide(table.at(2 * m), table.at(2));
  if (!remainder.is_zero()) {
    throw ConjectureViolation("Conjecture 1", m,
                              "S_" + std::to_string(2 * m) + " / S_2 leaves remainder " +
                                  describe(remainder));
  }
  try {
    return FaulhaberEven(m, n_to_t(quotient));
  } catch (const NonRepresentable& e) {
    throw ConjectureViolation("Conjecture 1", m,
                              "S_" + std::to_string(2 * m) + " / S_2 is not a polynomial in T: " +
                                  e.what());
  }
}

FaulhaberOdd decompose_odd(const PowerSumTable& table, int m) {
  if (m < 1) throw std::invalid_argument("decompose_odd needs m >= 1");
  PolyT in_t;
  try {
    in_t = n_to_t(table.at(2 * m + 1));
  } catch (const NonRepresentable& e) {
    throw ConjectureViolation("Conjecture 1", m,
                              "S_" + std::to_string(2 * m + 1) + " is not a polynomial in T: " +
                                  e.what());
  }
  auto [quotient, remainder] = divide(in_t, t_squared());
  if (!remainder.is_zero()) {
    throw ConjectureViolation("Conjecture 1", m,
                              "S_" + std::to_string(2 * m + 1) + " / T^2 leaves remainder " +
                                  describe(remainder));
  }
  return FaulhaberOdd(m, quotient);
}

template <Parity P>
PolyN recompose(const Faulhaber<P>& form, const PowerSumTable& table) {
  if constexpr (P == Parity::even) {
    return t_to_n(form.coeff()) * table.at(2);
  } else {
    return t_to_n(form.coeff() * t_squared());
  }
}

template PolyN recompose(const FaulhaberEven&, const PowerSumTable&);
template PolyN recompose(const FaulhaberOdd&, const PowerSumTable&);

template <Parity P>
Faulhaber<P> derive_from_row(const PascalRow& row, std::span<const Faulhaber<P>> lower) {
  const RowKind expected = P == Parity::even ? RowKind::even : RowKind::odd;
  if (row.kind != expected) throw std::invalid_argument("row kind does not match the family");
  const int m = row.m;
  if (m < 1 || static_cast<int>(row.entries.size()) != m) {
    throw std::invalid_argument("row " + std::to_string(m) + " must have " + std::to_string(m) +
                                " entries");
  }
  require_lower<P>(lower, m - 1, "derive_from_row");
  if (row.last() == 0) {
    throw std::logic_error("row " + std::to_string(m) + " has a zero leading entry");
  }
  PolyT acc = PolyT::monomial(Rational(row.target), static_cast<std::size_t>(m - 1));
  for (int t = 0; t < m - 1; ++t) {
    if (row.entries[t] != 0) acc -= lower[t].coeff() * Rational(row.entries[t]);
  }
  return Faulhaber<P>(m, acc / Rational(row.last()));
}

template FaulhaberEven derive_from_row(const PascalRow&, std::span<const FaulhaberEven>);
template FaulhaberOdd derive_from_row(const PascalRow&, std::span<const FaulhaberOdd>);

FaulhaberEven derive_even_pascal(int m, std::span<const FaulhaberEven> lower) {
  return derive_from_row<Parity::even>(row_even(m), lower);
}

FaulhaberOdd derive_odd_pascal(int m, std::span<const FaulhaberOdd> lower) {
  return derive_from_row<Parity::odd>(row_odd(m), lower);
}

FaulhaberEven bridge_even_from_odd(int m, std::span<const FaulhaberOdd> odds,
                                   std::span<const FaulhaberEven> lower_evens) {
  if (m < 1) throw std::invalid_argument("bridge_even_from_odd needs m >= 1");
  if (m == 1) return FaulhaberEven(1, PolyT::constant(Rational(1)));
  require_lower<Parity::odd>(odds, m, "bridge_even_from_odd (odd forms)");
  require_lower<Parity::even>(lower_evens, m - 1, "bridge_even_from_odd (even forms)");

  const PascalRow odd_row = row_odd(m);
  const PascalRow even_row = combine_odd_rows(row_odd(m - 1), odd_row);
  const auto top = static_cast<std::size_t>(m - 1);

  PolyT acc = PolyT::monomial(Rational(pow(Integer(2), top)), top);
  for (int t = 0; t < m; ++t) {
    if (odd_row.entries[t] != 0) acc += odds[t].coeff() * Rational(odd_row.entries[t]);
  }
  for (int t = 0; t < m - 1; ++t) {
    if (even_row.entries[t] != 0) acc -= lower_evens[t].coeff() * Rational(even_row.entries[t]);
  }
  return FaulhaberEven(m, acc / Rational(even_row.last()));
}

template <Parity P>
void cross_check(const Faulhaber<P>& candidate, const Faulhaber<P>& reference,
                 const std::string& conjecture) {
  if (candidate == reference) return;
  const char* family = P == Parity::even ? "E_" : "O_";
  throw ConjectureViolation(conjecture, reference.half_power(),
                            std::string(family) + std::to_string(reference.power()) + " is " +
                                describe(candidate.coeff()) + " but the recursion gives " +
                                describe(reference.coeff()));
}

template void cross_check(const FaulhaberEven&, const FaulhaberEven&, const std::string&);
template void cross_check(const FaulhaberOdd&, const FaulhaberOdd&, const std::string&);

bool VerificationReport::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const VerificationRow& r) { return r.equal; });
}

std::optional<std::uint64_t> VerificationReport::first_mismatch() const {
  for (const auto& r : rows) {
    if (!r.equal) return r.n;
  }
  return std::nullopt;
}

namespace {

template <class Eval>
VerificationReport compare_with_oracle(int power, NRange range, unsigned jobs, Eval&& eval) {
  if (range.hi < range.lo) throw std::invalid_argument("verification range is empty");
  VerificationReport report;
  report.power = power;
  const auto oracle = brute_sums(static_cast<unsigned>(power), range.lo, range.hi, jobs);
  report.rows.reserve(oracle.size());
  for (std::uint64_t i = 0; i < oracle.size(); ++i) {
    const std::uint64_t n = range.lo + i;
    Rational value = eval(Rational(n));
    const bool equal = value == Rational(oracle[i]);
    report.rows.push_back({n, std::move(value), oracle[i], equal});
  }
  return report;
}

}  // namespace

template <Parity P>
VerificationReport verify_candidate(const Faulhaber<P>& candidate, NRange range, unsigned jobs) {
  const PolyN& t_of_n = triangular_in_n();
  auto report = compare_with_oracle(candidate.power(), range, jobs, [&](const Rational& n) {
    const Rational t = t_of_n(n);
    const Rational factor = P == Parity::even ? sum_of_squares_in_n()(n) : t * t;
    return candidate.coeff()(t) * factor;
  });
  report.unit_value = candidate.at_unit();
  return report;
}

template VerificationReport verify_candidate(const FaulhaberEven&, NRange, unsigned);
template VerificationReport verify_candidate(const FaulhaberOdd&, NRange, unsigned);

VerificationReport verify_closed_form(const PolyN& closed_form, int power, NRange range,
                                      unsigned jobs) {
  if (power < 0) throw std::invalid_argument("power must be non-negative");
  return compare_with_oracle(power, range, jobs, [&](const Rational& n) { return closed_form(n); });
}

RouteSet derive_routes(const PowerSumTable& table, int max_half_power, bool cross_checking) {
  if (max_half_power < 1) throw std::invalid_argument("derive_routes needs max_half_power >= 1");
  RouteSet routes;
  for (int m = 1; m <= max_half_power; ++m) {
    routes.even_recursion.push_back(decompose_even(table, m));
    routes.odd_recursion.push_back(decompose_odd(table, m));

    auto odd_pascal = derive_odd_pascal(m, routes.odd_pascal);
    auto even_pascal = derive_even_pascal(m, routes.even_pascal);
    routes.odd_pascal.push_back(std::move(odd_pascal));
    routes.even_pascal.push_back(std::move(even_pascal));
    auto bridged = bridge_even_from_odd(m, routes.odd_pascal, routes.even_bridge);
    routes.even_bridge.push_back(std::move(bridged));

    if (cross_checking) {
      cross_check(routes.odd_pascal.back(), routes.odd_recursion.back(), "Conjecture 3.2");
      cross_check(routes.even_pascal.back(), routes.even_recursion.back(), "Conjecture 3.1");
      cross_check(routes.even_bridge.back(), routes.even_recursion.back(), "Conjecture 2.2");
    }
  }
  return routes;
}

}  // namespace powsum
