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

// Plain-text and LaTeX presentations of polynomials, Faulhaber forms,
// verification reports and divisibility scans.

#include <string>
#include <vector>

#include "powsum/faulhaber.hpp"
#include "powsum/numtheory.hpp"
#include "powsum/poly.hpp"
#include "powsum/powersum.hpp"

namespace powsum::render {

enum class Style { text, latex };

/// Over the common denominator, lowest power first:
/// "(n + 3n^2 + 2n^3)/6" or "\frac{n+3n^{2}+2n^{3}}{6}".
template <class Var>
std::string expanded(const Polynomial<Var>& p, Style style);

/// "E_10 = (5 - 30T + 68T^2 - 80T^3 + 48T^4)/11".
template <Parity P>
std::string definition(const Faulhaber<P>& form, Style style);

/// The scaled presentation, e.g. "11 E_10 = 48T^4 - 80T^3 + 68T^2 - 25E_4".
/// LaTeX spells T out as n(n+1)/2. Falls back to definition() when the
/// form has no scaled presentation.
template <Parity P>
std::string scaled(const Faulhaber<P>& form, Style style);

/// S_power as a product of factors in n(n+1), such as
/// "((2n(n+1) - 1)/3) * (n(n+1)/2)^2". Needs S_2 and S_power in the table.
std::string factored(int power, const PowerSumTable& table, Style style);

/// Columns n, closed form, oracle, equal.
std::string report_table(const VerificationReport& report);

/// One "p:pass" / "p:fail" line per verdict followed by the summary counts.
std::string divisibility_text(const std::vector<DivisibilityVerdict>& verdicts);

/// Header line then p,m,sum,divides,prime rows.
std::string divisibility_csv(const std::vector<DivisibilityVerdict>& verdicts);

}  // namespace powsum::render
