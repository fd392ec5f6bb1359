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

// JSON encodings. Numbers travel as decimal strings; object keys keep
// insertion order so output is byte-stable.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "powsum/faulhaber.hpp"
#include "powsum/numtheory.hpp"
#include "powsum/poly.hpp"
#include "powsum/powersum.hpp"

namespace powsum::io {

using json = nlohmann::ordered_json;

/// Malformed or non-canonical content. The message names the offending entry.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A file could not be opened, read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"num": "-1", "den": "5"}
json to_json(const Rational& r);
/// Accepts only reduced fractions with a positive denominator, written
/// without leading zeros or signs other than a single '-'.
Rational rational_from_json(const json& j, const std::string& where);

/// {"variable": "n", "coefficients": [...]}, lowest power first.
template <class Var>
json to_json(const Polynomial<Var>& p);
/// Rejects a mismatched variable and a zero leading coefficient.
template <class Var>
Polynomial<Var> poly_from_json(const json& j, const std::string& where);

/// {"powers": [{"m": 1, "poly": ...}, ...]} in increasing m.
json table_to_json(const PowerSumTable& table);
/// Entries load with cache provenance. Powers must increase strictly and
/// each S_m must have degree m + 1.
PowerSumTable table_from_json(const json& j);

/// Two-space indentation and a trailing newline.
std::string dump(const json& j);

void save_table(const std::filesystem::path& path, const PowerSumTable& table);
/// Throws IoError when unreadable and FormatError when malformed.
PowerSumTable load_table(const std::filesystem::path& path);

json to_json(const ScaledForm& form);

template <Parity P>
json to_json(const Faulhaber<P>& form);

json to_json(const VerificationReport& report);

json to_json(const DivisibilityVerdict& verdict);
json to_json(const DivisibilitySummary& summary);

}  // namespace powsum::io
