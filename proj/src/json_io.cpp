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

#include "powsum/json_io.hpp"

#include <fstream>
#include <sstream>

namespace powsum::io {

namespace {

Integer strict_integer(const json& j, const std::string& where, const char* field) {
  if (!j.is_string()) {
    throw FormatError(where + ": \"" + field + "\" must be a decimal string");
  }
  const auto& text = j.get_ref<const std::string&>();
  Integer value;
  try {
    value = parse_integer(text);
  } catch (const std::invalid_argument&) {
    throw FormatError(where + ": \"" + field + "\" is not an integer: '" + text + "'");
  }
  if (value.get_str() != text) {
    throw FormatError(where + ": \"" + field + "\" is not in canonical form: '" + text + "'");
  }
  return value;
}

const json& member(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw FormatError(where + ": expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw FormatError(where + ": missing \"" + key + "\"");
  return *it;
}

}  // namespace

json to_json(const Rational& r) {
  json j;
  j["num"] = r.numerator().get_str();
  j["den"] = r.denominator().get_str();
  return j;
}

Rational rational_from_json(const json& j, const std::string& where) {
  const Integer num = strict_integer(member(j, "num", where), where, "num");
  const Integer den = strict_integer(member(j, "den", where), where, "den");
  try {
    return Rational::from_canonical(num, den);
  } catch (const std::invalid_argument&) {
    throw FormatError(where + ": fraction " + num.get_str() + "/" + den.get_str() +
                      " is not reduced with a positive denominator");
  }
}

template <class Var>
json to_json(const Polynomial<Var>& p) {
  json j;
  j["variable"] = std::string(Var::symbol);
  json coefficients = json::array();
  for (const auto& c : p.coefficients()) coefficients.push_back(to_json(c));
  j["coefficients"] = std::move(coefficients);
  return j;
}

template <class Var>
Polynomial<Var> poly_from_json(const json& j, const std::string& where) {
  const json& variable = member(j, "variable", where);
  if (!variable.is_string() || variable.get<std::string>() != Var::symbol) {
    throw FormatError(where + ": expected variable \"" + std::string(Var::symbol) + "\", got " +
                      variable.dump());
  }
  const json& coefficients = member(j, "coefficients", where);
  if (!coefficients.is_array()) throw FormatError(where + ": \"coefficients\" must be an array");
  std::vector<Rational> c;
  c.reserve(coefficients.size());
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    c.push_back(rational_from_json(coefficients[i], where + ", coefficient " + std::to_string(i)));
  }
  if (!c.empty() && c.back().is_zero()) {
    throw FormatError(where + ": leading coefficient is zero");
  }
  return Polynomial<Var>(std::move(c));
}

template json to_json(const PolyN&);
template json to_json(const PolyT&);
template PolyN poly_from_json(const json&, const std::string&);
template PolyT poly_from_json(const json&, const std::string&);

json table_to_json(const PowerSumTable& table) {
  json powers = json::array();
  for (const auto& [m, entry] : table) {
    json item;
    item["m"] = m;
    item["poly"] = to_json(entry.poly);
    powers.push_back(std::move(item));
  }
  json j;
  j["powers"] = std::move(powers);
  return j;
}

PowerSumTable table_from_json(const json& j) {
  const json& powers = member(j, "powers", "table");
  if (!powers.is_array()) throw FormatError("table: \"powers\" must be an array");
  PowerSumTable table;
  int previous = 0;
  for (std::size_t i = 0; i < powers.size(); ++i) {
    std::string where = "powers[" + std::to_string(i) + "]";
    const json& m_json = member(powers[i], "m", where);
    if (!m_json.is_number_integer()) throw FormatError(where + ": \"m\" must be an integer");
    const auto m = m_json.get<long long>();
    if (m < 1 || m > 1000000) throw FormatError(where + ": power " + std::to_string(m) + " out of range");
    if (m <= previous) throw FormatError(where + ": powers must increase strictly");
    where += " (m = " + std::to_string(m) + ")";
    PolyN poly = poly_from_json<NaturalVar>(member(powers[i], "poly", where), where);
    if (poly.degree() != m + 1) {
      throw FormatError(where + ": degree " + std::to_string(poly.degree()) + ", expected " +
                        std::to_string(m + 1));
    }
    previous = static_cast<int>(m);
    table.insert(previous, std::move(poly), Provenance::cache);
  }
  return table;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void save_table(const std::filesystem::path& path, const PowerSumTable& table) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << dump(table_to_json(table));
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

PowerSumTable load_table(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  json j;
  try {
    j = json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
  return table_from_json(j);
}

json to_json(const ScaledForm& form) {
  json j;
  j["denominator"] = form.denominator.get_str();
  json coefficients = json::array();
  for (const auto& c : form.coefficients) coefficients.push_back(to_json(c));
  j["coefficients"] = std::move(coefficients);
  j["tail"] = form.tail;
  return j;
}

template <Parity P>
json to_json(const Faulhaber<P>& form) {
  json j;
  j["family"] = P == Parity::even ? "E" : "O";
  j["power"] = form.power();
  j["m"] = form.half_power();
  j["poly"] = to_json(form.coeff());
  j["scaled"] = form.scaled_form() ? to_json(*form.scaled_form()) : json();
  return j;
}

template json to_json(const FaulhaberEven&);
template json to_json(const FaulhaberOdd&);

json to_json(const VerificationReport& report) {
  json j;
  j["power"] = report.power;
  json rows = json::array();
  for (const auto& r : report.rows) {
    json row;
    row["n"] = r.n;
    row["closed_form"] = to_json(r.closed_form);
    row["oracle"] = r.oracle.get_str();
    row["equal"] = r.equal;
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  j["unit_value"] = report.unit_value ? to_json(*report.unit_value) : json();
  j["passed"] = report.passed();
  return j;
}

json to_json(const DivisibilityVerdict& verdict) {
  json j;
  j["p"] = verdict.p;
  j["m"] = verdict.m;
  j["sum"] = verdict.sum_value.get_str();
  j["divides"] = verdict.divides;
  j["prime"] = verdict.is_prime;
  return j;
}

json to_json(const DivisibilitySummary& summary) {
  json j;
  j["prime_passes"] = summary.prime_passes;
  j["prime_failures"] = summary.prime_failures;
  j["composite_divides"] = summary.composite_divides;
  j["composite_not"] = summary.composite_not;
  j["failing_primes"] = summary.failing_primes;
  return j;
}

}  // namespace powsum::io
