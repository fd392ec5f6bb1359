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

#include "powsum/render.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

namespace powsum::render {

namespace {

struct Term {
  Rational coeff;
  std::string body;
};

Integer common_denominator(std::span<const Rational> values) {
  Integer d = 1;
  for (const auto& v : values) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), v.denominator().get_mpz_t());
  return d;
}

std::string magnitude(const Rational& r, bool has_body, Style style) {
  const Rational a = r.sign() < 0 ? -r : r;
  if (a.is_integer()) return a.numerator().get_str();
  if (style == Style::latex) {
    return "\\frac{" + a.numerator().get_str() + "}{" + a.denominator().get_str() + "}";
  }
  return has_body ? "(" + a.str() + ")" : a.str();
}

// Joins nonzero terms with their signs; `mul` sits between a shown
// coefficient and its body.
std::string join(const std::vector<Term>& terms, Style style, const std::string& mul = "") {
  std::string out;
  for (const auto& term : terms) {
    if (term.coeff.is_zero()) continue;
    const bool negative = term.coeff.sign() < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else if (style == Style::text) {
      out += negative ? " - " : " + ";
    } else {
      out += negative ? "-" : "+";
    }
    const bool unit = term.coeff == Rational(1) || term.coeff == Rational(-1);
    if (term.body.empty()) {
      out += magnitude(term.coeff, false, style);
    } else if (unit) {
      out += term.body;
    } else {
      const bool needs_space = !mul.empty() && std::isalpha(static_cast<unsigned char>(term.body.front()));
      out += magnitude(term.coeff, true, style) + mul + (needs_space ? " " : "") + term.body;
    }
  }
  return out.empty() ? "0" : out;
}

std::string power_of(std::string_view var, std::size_t k, Style style) {
  if (k == 0) return "";
  std::string out(var);
  if (k == 1) return out;
  return style == Style::latex ? out + "^{" + std::to_string(k) + "}"
                               : out + "^" + std::to_string(k);
}

std::string over(const std::string& numerator, std::size_t terms, const Integer& d, Style style) {
  if (d == 1) return numerator;
  if (style == Style::latex) return "\\frac{" + numerator + "}{" + d.get_str() + "}";
  return (terms > 1 ? "(" + numerator + ")" : numerator) + "/" + d.get_str();
}

std::size_t count_nonzero(std::span<const Rational> values) {
  return static_cast<std::size_t>(
      std::count_if(values.begin(), values.end(), [](const Rational& r) { return !r.is_zero(); }));
}

template <Parity P>
std::string family_name(const Faulhaber<P>& form, Style style) {
  const std::string letter = P == Parity::even ? "E" : "O";
  const std::string index = std::to_string(form.power());
  return style == Style::latex ? letter + "_{" + index + "}" : letter + "_" + index;
}

std::string triangular_latex(std::size_t k) {
  const std::string t = "\\frac{n(n+1)}{2}";
  if (k == 0) return "";
  if (k == 1) return t;
  return "\\left(" + t + "\\right)^{" + std::to_string(k) + "}";
}

// Q(u) with u = n(n+1), where the form's polynomial is Q(2T).
std::string u_factor(const PolyT& coeff, Style style) {
  std::vector<Rational> q;
  Rational scale = 1;
  for (const auto& c : coeff.coefficients()) {
    q.push_back(c * scale);
    scale /= Rational(2);
  }
  if (q.size() == 1) {
    if (q[0] == Rational(1)) return "";
    return magnitude(q[0], false, style);
  }
  const Integer d = common_denominator(q);
  std::vector<Term> terms;
  for (std::size_t k = q.size(); k-- > 0;) {
    std::string body;
    if (k == 1) {
      body = style == Style::latex ? "n\\left(n+1\\right)" : "n(n+1)";
    } else if (k > 1) {
      body = style == Style::latex
                 ? "\\left(n\\left(n+1\\right)\\right)^{" + std::to_string(k) + "}"
                 : "(n(n+1))^" + std::to_string(k);
    }
    terms.push_back({q[k] * Rational(d), std::move(body)});
  }
  const std::string numerator = join(terms, style);
  if (style == Style::latex) {
    return d == 1 ? "\\left(" + numerator + "\\right)" : over(numerator, 2, d, style);
  }
  return "(" + over(numerator, 2, d, style) + ")";
}

}  // namespace

template <class Var>
std::string expanded(const Polynomial<Var>& p, Style style) {
  const auto c = p.coefficients();
  const Integer d = common_denominator(c);
  std::vector<Term> terms;
  for (std::size_t i = 0; i < c.size(); ++i) {
    terms.push_back({c[i] * Rational(d), power_of(Var::symbol, i, style)});
  }
  return over(join(terms, style), count_nonzero(c), d, style);
}

template std::string expanded(const PolyN&, Style);
template std::string expanded(const PolyT&, Style);

template <Parity P>
std::string definition(const Faulhaber<P>& form, Style style) {
  const std::string eq = style == Style::latex ? "=" : " = ";
  return family_name(form, style) + eq + expanded(form.coeff(), style);
}

template std::string definition(const FaulhaberEven&, Style);
template std::string definition(const FaulhaberOdd&, Style);

template <Parity P>
std::string scaled(const Faulhaber<P>& form, Style style) {
  const auto& sf = form.scaled_form();
  if (!sf) return definition(form, style);
  const auto top = static_cast<std::size_t>(form.half_power() - 1);
  std::vector<Term> terms;
  const std::size_t powers = sf->tail ? sf->coefficients.size() - 1 : sf->coefficients.size();
  for (std::size_t i = 0; i < powers; ++i) {
    const std::size_t k = top - i;
    terms.push_back({sf->coefficients[i],
                     style == Style::latex ? triangular_latex(k) : power_of("T", k, Style::text)});
  }
  if (sf->tail) {
    const bool even = P == Parity::even;
    std::string body = style == Style::latex ? (even ? "E_{4}" : "O_{5}") : (even ? "E_4" : "O_5");
    terms.push_back({sf->coefficients.back(), std::move(body)});
  }
  if (style == Style::latex) {
    return sf->denominator.get_str() + "\\cdot " + family_name(form, style) + "=" +
           join(terms, style, "\\cdot");
  }
  return sf->denominator.get_str() + " " + family_name(form, style) + " = " + join(terms, style);
}

template std::string scaled(const FaulhaberEven&, Style);
template std::string scaled(const FaulhaberOdd&, Style);

std::string factored(int power, const PowerSumTable& table, Style style) {
  if (power < 1) throw std::invalid_argument("factored form needs power >= 1");
  const bool latex = style == Style::latex;
  const std::string t = latex ? "\\frac{n\\left(n+1\\right)}{2}" : "(n(n+1)/2)";
  const std::string dot = latex ? "\\cdot" : " * ";
  if (power == 1) return latex ? t : "n(n+1)/2";

  std::vector<std::string> factors;
  if (power % 2 == 0) {
    factors.push_back(u_factor(decompose_even(table, power / 2).coeff(), style));
    factors.push_back(latex ? "\\frac{2n+1}{3}" : "((2n+1)/3)");
    factors.push_back(t);
  } else {
    factors.push_back(u_factor(decompose_odd(table, power / 2).coeff(), style));
    factors.push_back(latex ? "\\left(" + t + "\\right)^{2}" : t + "^2");
  }
  std::string out;
  for (const auto& f : factors) {
    if (f.empty()) continue;
    if (!out.empty()) out += dot;
    out += f;
  }
  return out;
}

std::string report_table(const VerificationReport& report) {
  std::vector<std::array<std::string, 4>> rows;
  rows.push_back({"n", "closed_form", "oracle", "equal"});
  for (const auto& r : report.rows) {
    rows.push_back({std::to_string(r.n), r.closed_form.str(), r.oracle.get_str(),
                    r.equal ? "yes" : "no"});
  }
  std::array<std::size_t, 4> width{};
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < 4; ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::ostringstream out;
  out << "S_" << report.power << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < 4; ++i) {
      if (i > 0) out << "  ";
      out << std::string(width[i] - row[i].size(), ' ') << row[i];
    }
    out << "\n";
  }
  if (report.unit_value) {
    out << "value at T = 1: " << report.unit_value->str() << (report.unit_ok() ? " (ok)" : " (not 1)")
        << "\n";
  }
  if (const auto bad = report.first_mismatch()) {
    out << "FAIL: first mismatch at n = " << *bad << "\n";
  } else {
    out << "PASS\n";
  }
  return out.str();
}

std::string divisibility_text(const std::vector<DivisibilityVerdict>& verdicts) {
  std::ostringstream out;
  for (const auto& v : verdicts) {
    out << v.p << ":" << (v.divides ? "pass" : "fail") << (v.is_prime ? "" : " (composite)")
        << "\n";
  }
  const auto s = summarize(verdicts);
  out << "prime passes: " << s.prime_passes << "\n"
      << "prime failures: " << s.prime_failures;
  if (!s.failing_primes.empty()) {
    out << " (";
    for (std::size_t i = 0; i < s.failing_primes.size(); ++i) {
      out << (i ? " " : "") << s.failing_primes[i];
    }
    out << ")";
  }
  out << "\n"
      << "composites dividing: " << s.composite_divides << "\n"
      << "composites not dividing: " << s.composite_not << "\n";
  return out.str();
}

std::string divisibility_csv(const std::vector<DivisibilityVerdict>& verdicts) {
  std::ostringstream out;
  out << "p,m,sum,divides,prime\n";
  for (const auto& v : verdicts) {
    out << v.p << "," << v.m << "," << v.sum_value.get_str() << "," << (v.divides ? 1 : 0) << ","
        << (v.is_prime ? 1 : 0) << "\n";
  }
  return out.str();
}

}  // namespace powsum::render
