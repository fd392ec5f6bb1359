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

#include "powsum/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <stdexcept>

#include <CLI11.hpp>

#include "powsum/json_io.hpp"
#include "powsum/numtheory.hpp"
#include "powsum/pascal.hpp"
#include "powsum/render.hpp"

namespace powsum::cli {

namespace {

using io::json;
using render::Style;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const char* route_name(Route r) {
  switch (r) {
    case Route::recursion: return "recursion";
    case Route::pascal: return "pascal";
    case Route::bridge: return "bridge";
    case Route::all: return "all";
  }
  return "";
}

Style style_of(Format f) { return f == Format::latex ? Style::latex : Style::text; }

std::string sum_name(int power, Style style) {
  return style == Style::latex ? "S_{" + std::to_string(power) + "}=" : "S_" + std::to_string(power) + " = ";
}

PowerSumTable obtain_table(const RunConfig& config, int max_power) {
  PowerSumTable table;
  if (config.cache_path) {
    const bool present = std::filesystem::exists(*config.cache_path);
    if (present || config.cache_explicit) table = io::load_table(*config.cache_path);
  }
  extend_to(table, std::max(max_power, 1));
  return table;
}

// ---- derive ------------------------------------------------------------------

template <Parity P>
const Faulhaber<P>& pick(const RouteSet& routes, Route route, int m) {
  if constexpr (P == Parity::even) {
    if (route == Route::pascal) return routes.even_pascal.at(m - 1);
    if (route == Route::bridge) return routes.even_bridge.at(m - 1);
    return routes.even_recursion.at(m - 1);
  } else {
    if (route == Route::pascal) return routes.odd_pascal.at(m - 1);
    return routes.odd_recursion.at(m - 1);
  }
}

template <Parity P>
void faulhaber_lines(const Faulhaber<P>& form, Style style, std::vector<std::string>& lines) {
  if (style == Style::text) {
    lines.push_back("S_" + std::to_string(form.power()) + " = " +
                    (P == Parity::even ? "E_" : "O_") + std::to_string(form.power()) +
                    (P == Parity::even ? " S_2" : " T^2"));
  }
  lines.push_back(render::definition(form, style));
  lines.push_back(render::scaled(form, style));
}

int cmd_derive(const RunConfig& config, std::ostream& out) {
  const int p = config.power;
  const int m = p / 2;
  if (config.route == Route::bridge && p % 2 == 1) {
    throw UsageError("the bridge route only yields even powers");
  }
  const PowerSumTable table = obtain_table(config, std::max(p, 2 * m + 1));
  std::optional<RouteSet> routes;
  if (m >= 1) routes = derive_routes(table, m, true);

  const bool want_expanded = config.form == Form::expanded || config.form == Form::all;
  const bool want_faulhaber = config.form == Form::faulhaber || config.form == Form::all;
  const bool want_factored = config.form == Form::factored || config.form == Form::all;

  PolyN expanded_poly = table.at(p);
  if (routes) {
    expanded_poly = p % 2 == 0 ? recompose(pick<Parity::even>(*routes, config.route, m), table)
                               : recompose(pick<Parity::odd>(*routes, config.route, m), table);
  }

  if (config.format == Format::json) {
    json j;
    j["power"] = p;
    j["route"] = route_name(config.route);
    if (want_expanded) j["expanded"] = io::to_json(expanded_poly);
    if (want_faulhaber) {
      if (!routes) {
        j["faulhaber"] = json();
      } else if (p % 2 == 0) {
        j["faulhaber"] = io::to_json(pick<Parity::even>(*routes, config.route, m));
      } else {
        j["faulhaber"] = io::to_json(pick<Parity::odd>(*routes, config.route, m));
      }
    }
    if (want_factored) {
      json f;
      f["text"] = render::factored(p, table, Style::text);
      f["latex"] = render::factored(p, table, Style::latex);
      j["factored"] = std::move(f);
    }
    out << io::dump(j);
    return kOk;
  }

  const Style style = style_of(config.format);
  std::vector<std::string> lines;
  if (want_expanded) lines.push_back(sum_name(p, style) + render::expanded(expanded_poly, style));
  if (want_faulhaber) {
    if (!routes) {
      lines.push_back(sum_name(p, style) + (style == Style::latex ? "\\frac{n(n+1)}{2}" : "T"));
    } else if (p % 2 == 0) {
      faulhaber_lines(pick<Parity::even>(*routes, config.route, m), style, lines);
    } else {
      faulhaber_lines(pick<Parity::odd>(*routes, config.route, m), style, lines);
    }
  }
  if (want_factored) lines.push_back(sum_name(p, style) + render::factored(p, table, style));
  if (config.route == Route::all && routes && style == Style::text) {
    lines.push_back(p % 2 == 0 ? "routes agree: recursion, pascal, bridge"
                               : "routes agree: recursion, pascal");
  }
  for (const auto& line : lines) out << line << "\n";
  return kOk;
}

// ---- verify ------------------------------------------------------------------

struct LabelledReport {
  std::string label;
  std::string route;
  VerificationReport report;
};

int cmd_verify(const RunConfig& config, std::ostream& out) {
  std::vector<int> powers;
  if (config.power > 0) {
    powers.push_back(config.power);
  } else {
    for (int p = 1; p <= config.max_power; ++p) powers.push_back(p);
  }
  if (config.route == Route::bridge && powers.size() == 1 && powers.front() % 2 == 1) {
    throw UsageError("the bridge route only yields even powers");
  }
  const int top = powers.back();
  const int max_half = top / 2;
  const PowerSumTable table = obtain_table(config, std::max(top, 2 * max_half + 1));
  std::optional<RouteSet> routes;
  if (max_half >= 1) routes = derive_routes(table, max_half, true);

  const auto wants = [&](Route r) { return config.route == r || config.route == Route::all; };
  std::vector<LabelledReport> reports;
  for (const int p : powers) {
    const int m = p / 2;
    const std::string s = "S_" + std::to_string(p);
    const std::string f = (p % 2 == 0 ? "E_" : "O_") + std::to_string(p);
    const auto add_candidate = [&](Route r) {
      VerificationReport rep =
          p % 2 == 0 ? verify_candidate(pick<Parity::even>(*routes, r, m), config.n_range, config.jobs)
                     : verify_candidate(pick<Parity::odd>(*routes, r, m), config.n_range, config.jobs);
      reports.push_back({s + " from " + f + " (" + route_name(r) + ")", route_name(r), std::move(rep)});
    };
    if (wants(Route::recursion) || p == 1) {
      reports.push_back({s + " closed form (recursion)", "recursion",
                         verify_closed_form(table.at(p), p, config.n_range, config.jobs)});
    }
    if (p == 1) continue;
    if (wants(Route::recursion)) add_candidate(Route::recursion);
    if (wants(Route::pascal)) add_candidate(Route::pascal);
    if (wants(Route::bridge) && p % 2 == 0) add_candidate(Route::bridge);
  }

  bool ok = true;
  for (const auto& r : reports) {
    ok = ok && r.report.passed() && (!r.report.unit_value || r.report.unit_ok());
  }

  if (config.format == Format::json) {
    json list = json::array();
    for (const auto& r : reports) {
      json item;
      item["label"] = r.label;
      item["route"] = r.route;
      item["report"] = io::to_json(r.report);
      list.push_back(std::move(item));
    }
    json j;
    j["reports"] = std::move(list);
    j["passed"] = ok;
    out << io::dump(j);
  } else {
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (i > 0) out << "\n";
      out << "== " << reports[i].label << " ==\n" << render::report_table(reports[i].report);
    }
    out << (ok ? "all checks passed\n" : "oracle mismatch\n");
  }
  return ok ? kOk : kMismatch;
}

// ---- table -------------------------------------------------------------------

json row_json(const PascalRow& row) {
  json j;
  j["m"] = row.m;
  j["target"] = row.target.get_str();
  json entries = json::array();
  for (const auto& e : row.entries) entries.push_back(e.get_str());
  j["entries"] = std::move(entries);
  return j;
}

int cmd_table(const RunConfig& config, std::ostream& out) {
  const bool odd = config.rows != RowSelection::even;
  const bool even = config.rows != RowSelection::odd;
  if (config.format == Format::json) {
    json j;
    for (const auto& [wanted, name, make] :
         {std::tuple{odd, "odd", &row_odd}, std::tuple{even, "even", &row_even}}) {
      if (!wanted) continue;
      json rows = json::array();
      for (int m = 1; m <= config.max_power; ++m) rows.push_back(row_json(make(m)));
      j[name] = std::move(rows);
    }
    out << io::dump(j);
    return kOk;
  }
  if (odd) {
    out << "odd rows\n";
    for (int m = 1; m <= config.max_power; ++m) out << render_row(row_odd(m)) << "\n";
  }
  if (even) {
    out << "even rows\n";
    for (int m = 1; m <= config.max_power; ++m) out << render_row(row_even(m)) << "\n";
  }
  return kOk;
}

// ---- conjecture-check --------------------------------------------------------

struct LedgerEntry {
  std::string conjecture;
  int m;
  std::string claim;
  bool passed;
  std::string detail;
};

struct NegativeControl {
  std::string name;
  FaulhaberOdd candidate;
};

// A non-Pascal odd row with the right sum, fed the true O_3..O_9.
// Its candidate O_11 still evaluates to 1 at T = 1.
FaulhaberOdd wrong_row_candidate(const PowerSumTable& table) {
  std::vector<FaulhaberOdd> lower;
  for (int m = 1; m <= 4; ++m) lower.push_back(decompose_odd(table, m));
  PascalRow row{RowKind::odd, 5, {0, 24, 1, 1, 6}, 32};
  return derive_from_row<Parity::odd>(row, lower);
}

// The same candidate with the T^2 coefficient written with a minus sign.
FaulhaberOdd wrong_sign_candidate() {
  ScaledForm form{6, {32, Rational(-16, 5), -2, Rational(-124, 5)}, true};
  return FaulhaberOdd::from_scaled(5, form);
}

std::string describe(const std::exception& e) { return e.what(); }

int cmd_conjecture_check(const RunConfig& config, std::ostream& out) {
  const int max_m = config.max_power;
  const PowerSumTable table = obtain_table(config, std::max(2 * max_m + 1, 11));
  std::vector<LedgerEntry> ledger;
  const auto record = [&](std::string conjecture, int m, std::string claim, bool passed,
                          std::string detail = {}) {
    ledger.push_back({std::move(conjecture), m, std::move(claim), passed, std::move(detail)});
  };

  std::vector<FaulhaberEven> even_pascal;
  std::vector<FaulhaberEven> even_bridge;
  std::vector<FaulhaberOdd> odd_pascal;
  for (int m = 1; m <= max_m; ++m) {
    const std::string e = "E_" + std::to_string(2 * m);
    const std::string o = "O_" + std::to_string(2 * m + 1);
    std::optional<FaulhaberEven> even;
    std::optional<FaulhaberOdd> odd;
    try {
      even = decompose_even(table, m);
      record("Conjecture 1", m, "S_" + std::to_string(2 * m) + " = " + e + "(T) S_2", true);
    } catch (const ConjectureViolation& ex) {
      record("Conjecture 1", m, "S_" + std::to_string(2 * m) + " = " + e + "(T) S_2", false, describe(ex));
    }
    try {
      odd = decompose_odd(table, m);
      record("Conjecture 1", m, "S_" + std::to_string(2 * m + 1) + " = " + o + "(T) T^2", true);
    } catch (const ConjectureViolation& ex) {
      record("Conjecture 1", m, "S_" + std::to_string(2 * m + 1) + " = " + o + "(T) T^2", false, describe(ex));
    }

    odd_pascal.push_back(derive_odd_pascal(m, odd_pascal));
    even_pascal.push_back(derive_even_pascal(m, even_pascal));
    even_bridge.push_back(bridge_even_from_odd(m, odd_pascal, even_bridge));

    const auto compare = [&](const char* conjecture, const std::string& claim, const auto& candidate,
                             const auto& reference) {
      if (!reference) {
        record(conjecture, m, claim, false, "no recursion form to compare with");
        return;
      }
      try {
        cross_check(candidate, *reference, conjecture);
        record(conjecture, m, claim, true);
      } catch (const ConjectureViolation& ex) {
        record(conjecture, m, claim, false, describe(ex));
      }
    };
    compare("Conjecture 3.1", "Pascal " + e + " = recursion " + e, even_pascal.back(), even);
    compare("Conjecture 3.2", "Pascal " + o + " = recursion " + o, odd_pascal.back(), odd);
    compare("Conjecture 2.2", "bridge " + e + " = recursion " + e, even_bridge.back(), even);

    if (even && odd) {
      const bool unit = even->at_unit() == Rational(1) && odd->at_unit() == Rational(1);
      record("Normalization", m, e + "(1) = " + o + "(1) = 1", unit,
             unit ? "" : "values " + even->at_unit().str() + ", " + odd->at_unit().str());
      const bool alternating = even->scaled_form() && odd->scaled_form() &&
                               signs_alternate(*even->scaled_form()) &&
                               signs_alternate(*odd->scaled_form());
      record("Alternating signs", m, "scaled " + e + " and " + o, alternating);
    }

    const PascalRow ro = row_odd(m);
    const PascalRow re = row_even(m);
    record("Row sums", m, "odd row sums to 2^m, even row to 3*2^(m-1)",
           ro.sum() == ro.target && re.sum() == re.target);
    if (m >= 2) {
      record("Row additivity", m, "even row m = odd row m-1 (+) odd row m",
             combine_odd_rows(row_odd(m - 1), ro) == re);
    }
  }

  const NRange control_range{1, 10};
  std::vector<NegativeControl> controls;
  controls.push_back({"non-Pascal row 0,24,1,1,6 for O_11", wrong_row_candidate(table)});
  controls.push_back({"same candidate, T^2 coefficient negated", wrong_sign_candidate()});
  bool controls_ok = true;
  json control_json = json::array();
  for (const auto& control : controls) {
    const auto report = verify_candidate(control.candidate, control_range, config.jobs);
    const bool detected = !report.passed();
    controls_ok = controls_ok && detected;
    std::string detail = "T=1 value " + report.unit_value->str();
    if (const auto n = report.first_mismatch()) {
      detail += "; oracle mismatch first at n = " + std::to_string(*n);
    }
    const auto& at2 = report.rows.at(1);
    detail += "; n = 2 gives " + at2.closed_form.str() + " vs " + at2.oracle.get_str();
    record("Negative control", 5, control.name + " must fail the oracle", detected,
           detected ? detail + " (detected)" : detail + " (NOT detected)");
    json cj;
    cj["name"] = control.name;
    cj["detected"] = detected;
    cj["report"] = io::to_json(report);
    control_json.push_back(std::move(cj));
  }

  const auto failures = static_cast<std::size_t>(
      std::count_if(ledger.begin(), ledger.end(), [](const LedgerEntry& e) { return !e.passed; }));

  if (config.format == Format::json) {
    json entries = json::array();
    for (const auto& entry : ledger) {
      json j;
      j["conjecture"] = entry.conjecture;
      j["m"] = entry.m;
      j["claim"] = entry.claim;
      j["passed"] = entry.passed;
      j["detail"] = entry.detail;
      entries.push_back(std::move(j));
    }
    json j;
    j["max_m"] = max_m;
    j["checks"] = ledger.size();
    j["failures"] = failures;
    j["ledger"] = std::move(entries);
    j["negative_controls"] = std::move(control_json);
    out << io::dump(j);
  } else {
    for (const auto& entry : ledger) {
      out << (entry.passed ? "[pass] " : "[FAIL] ") << entry.conjecture << " (m = " << entry.m
          << "): " << entry.claim;
      if (!entry.detail.empty()) out << " -- " << entry.detail;
      out << "\n";
    }
    out << ledger.size() << " checks, " << failures << " failed"
        << (controls_ok ? "; negative controls detected\n" : "; a negative control was NOT detected\n");
  }
  return failures == 0 ? kOk : kViolation;
}

// ---- divisibility ------------------------------------------------------------

int cmd_divisibility(const RunConfig& config, std::ostream& out) {
  const auto verdicts = divisibility_scan(config.limit, config.jobs);
  const auto summary = summarize(verdicts);
  switch (config.format) {
    case Format::csv:
      out << render::divisibility_csv(verdicts);
      break;
    case Format::json: {
      json list = json::array();
      for (const auto& v : verdicts) list.push_back(io::to_json(v));
      json j;
      j["limit"] = config.limit;
      j["verdicts"] = std::move(list);
      j["summary"] = io::to_json(summary);
      out << io::dump(j);
      break;
    }
    default:
      out << render::divisibility_text(verdicts);
  }
  const bool beyond_three = std::any_of(summary.failing_primes.begin(), summary.failing_primes.end(),
                                        [](std::uint64_t p) { return p >= 5; });
  return beyond_three ? kViolation : kOk;
}

// ---- cache -------------------------------------------------------------------

const std::filesystem::path& require_cache(const RunConfig& config) {
  if (!config.cache_path) {
    throw UsageError(std::string("no cache path: pass --cache or set ") + kCacheEnv);
  }
  return *config.cache_path;
}

int cmd_cache_save(const RunConfig& config, std::ostream& out) {
  const auto& path = require_cache(config);
  io::save_table(path, derive_upto(config.max_power));
  out << "saved S_1..S_" << config.max_power << " to " << path.string() << "\n";
  return kOk;
}

int cmd_cache_load(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto& path = require_cache(config);
  const PowerSumTable loaded = io::load_table(path);
  if (loaded.size() == 0) {
    out << "cache " << path.string() << " is empty\n";
    return kOk;
  }
  const int highest = std::prev(loaded.end())->first;
  const PowerSumTable fresh = derive_upto(highest);
  for (const auto& [m, entry] : loaded) {
    if (!(fresh.at(m) == entry.poly)) {
      err << "cache entry S_" << m << " disagrees with the recursion\n";
      return kCacheError;
    }
  }
  out << "loaded " << loaded.size() << " powers up to S_" << highest << " from " << path.string()
      << "; all agree with the recursion\n";
  return kOk;
}

// ---- argument parsing ----------------------------------------------------------

template <class E>
CLI::CheckedTransformer choices(const std::map<std::string, E>& names) {
  return CLI::CheckedTransformer(names, CLI::ignore_case);
}

}  // namespace

int execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
  switch (config.command) {
    case Command::derive: return cmd_derive(config, out);
    case Command::verify: return cmd_verify(config, out);
    case Command::table: return cmd_table(config, out);
    case Command::conjecture_check: return cmd_conjecture_check(config, out);
    case Command::divisibility: return cmd_divisibility(config, out);
    case Command::cache_save: return cmd_cache_save(config, out);
    case Command::cache_load: return cmd_cache_load(config, out, err);
  }
  return kInternal;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact closed forms and Faulhaber decompositions of power sums", "powsum"};
  app.require_subcommand(1);

  RunConfig config;
  std::string cache_flag;
  std::uint64_t min_n = 0;
  std::uint64_t max_n = 20;

  const std::map<std::string, Route> routes{{"recursion", Route::recursion},
                                            {"pascal", Route::pascal},
                                            {"bridge", Route::bridge},
                                            {"all", Route::all}};
  const std::map<std::string, Form> forms{{"expanded", Form::expanded},
                                          {"faulhaber", Form::faulhaber},
                                          {"factored", Form::factored},
                                          {"all", Form::all}};
  const std::map<std::string, Format> text_latex_json{
      {"text", Format::text}, {"latex", Format::latex}, {"json", Format::json}};
  const std::map<std::string, Format> text_json{{"text", Format::text}, {"json", Format::json}};
  const std::map<std::string, Format> text_csv_json{
      {"text", Format::text}, {"csv", Format::csv}, {"json", Format::json}};
  const std::map<std::string, RowSelection> kinds{
      {"odd", RowSelection::odd}, {"even", RowSelection::even}, {"both", RowSelection::both}};

  const auto add_cache = [&](CLI::App* sub) {
    sub->add_option("--cache", cache_flag, std::string("Table cache file (default: $") + kCacheEnv + ")");
  };
  const auto add_jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs", config.jobs, "Threads for oracle sums")->check(CLI::PositiveNumber);
  };

  auto* derive = app.add_subcommand("derive", "Print the closed form of S_m");
  derive->add_option("--power", config.power, "Power m")->required()->check(CLI::PositiveNumber);
  derive->add_option("--form", config.form, "expanded|faulhaber|factored|all")->transform(choices(forms));
  derive->add_option("--format", config.format, "text|latex|json")->transform(choices(text_latex_json));
  derive->add_option("--route", config.route, "recursion|pascal|bridge|all")->transform(choices(routes));
  add_cache(derive);

  auto* verify = app.add_subcommand("verify", "Compare closed forms with brute-force sums");
  auto* v_power = verify->add_option("--power", config.power, "Single power")->check(CLI::PositiveNumber);
  auto* v_max = verify->add_option("--max-power", config.max_power, "All powers 1..M")
                    ->check(CLI::PositiveNumber);
  v_power->excludes(v_max);
  verify->add_option("--min-n", min_n, "Smallest n (default 0)");
  verify->add_option("--max-n", max_n, "Largest n (default 20)");
  verify->add_option("--route", config.route, "recursion|pascal|bridge|all")->transform(choices(routes));
  verify->add_option("--format", config.format, "text|json")->transform(choices(text_json));
  add_jobs(verify);
  add_cache(verify);

  auto* table = app.add_subcommand("table", "Print the odd and even coefficient rows");
  table->add_option("--max-power", config.max_power, "Rows 1..M")->required()->check(CLI::PositiveNumber);
  table->add_option("--kind", config.rows, "odd|even|both")->transform(choices(kinds));
  table->add_option("--format", config.format, "text|json")->transform(choices(text_json));

  auto* conjecture = app.add_subcommand("conjecture-check", "Check every conjecture instance up to m");
  config.max_power = 0;
  int conjecture_max = 40;
  conjecture->add_option("--max-power", conjecture_max, "Largest half power m (default 40)")
      ->check(CLI::PositiveNumber);
  conjecture->add_option("--format", config.format, "text|json")->transform(choices(text_json));
  add_jobs(conjecture);
  add_cache(conjecture);

  auto* divisibility = app.add_subcommand("divisibility", "Scan odd p for p | 1^2 + ... + ((p-1)/2)^2");
  divisibility->add_option("--limit", config.limit, "Largest p")->required()->check(CLI::Range(3, 100000000));
  divisibility->add_option("--format", config.format, "text|csv|json")->transform(choices(text_csv_json));
  add_jobs(divisibility);

  auto* cache = app.add_subcommand("cache", "Save or load the table cache");
  cache->require_subcommand(1);
  int cache_max = 20;
  auto* save = cache->add_subcommand("save", "Derive S_1..S_M and write them");
  save->add_option("--max-power", cache_max, "Largest power (default 20)")->check(CLI::PositiveNumber);
  add_cache(save);
  auto* load = cache->add_subcommand("load", "Read a cache and check it against the recursion");
  add_cache(load);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  if (*derive) {
    config.command = Command::derive;
  } else if (*verify) {
    config.command = Command::verify;
    if (config.power == 0 && config.max_power == 0) {
      err << "verify: one of --power or --max-power is required\n";
      return kUsage;
    }
    if (min_n > max_n) {
      err << "verify: --min-n must not exceed --max-n\n";
      return kUsage;
    }
    config.n_range = {min_n, max_n};
  } else if (*table) {
    config.command = Command::table;
  } else if (*conjecture) {
    config.command = Command::conjecture_check;
    config.max_power = conjecture_max;
  } else if (*divisibility) {
    config.command = Command::divisibility;
  } else if (*save) {
    config.command = Command::cache_save;
    config.max_power = cache_max;
  } else {
    config.command = Command::cache_load;
  }

  if (!cache_flag.empty()) {
    config.cache_path = cache_flag;
    config.cache_explicit = true;
  } else if (const char* env = std::getenv(kCacheEnv); env != nullptr && *env != '\0') {
    config.cache_path = env;
    config.cache_explicit = config.command == Command::cache_save || config.command == Command::cache_load;
  }

  try {
    return execute(config, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ConjectureViolation& e) {
    err << e.what() << "\n";
    return kViolation;
  } catch (const io::FormatError& e) {
    err << "cache format error: " << e.what() << "\n";
    return kCacheError;
  } catch (const io::IoError& e) {
    err << "cache I/O error: " << e.what() << "\n";
    return kCacheError;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace powsum::cli
