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

// The powsum command line: derive, verify, table, conjecture-check,
// divisibility and cache.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "powsum/faulhaber.hpp"

namespace powsum::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kUsage = 2,
  kMismatch = 3,
  kViolation = 4,
  kCacheError = 5,
};

enum class Command { derive, verify, table, conjecture_check, divisibility, cache_save, cache_load };
enum class Route { recursion, pascal, bridge, all };
enum class Format { text, latex, json, csv };
enum class Form { expanded, faulhaber, factored, all };
enum class RowSelection { odd, even, both };

/// Environment variable naming the default cache file.
inline constexpr const char* kCacheEnv = "POWSUM_CACHE";

struct RunConfig {
  Command command = Command::derive;
  int power = 0;      // 0 when --max-power is used instead
  int max_power = 0;  // 0 when --power is used instead
  NRange n_range{0, 20};
  Route route = Route::recursion;
  Format format = Format::text;
  Form form = Form::all;
  RowSelection rows = RowSelection::both;
  std::uint64_t limit = 0;
  std::optional<std::filesystem::path> cache_path;
  /// False when the path came from the environment; a missing file is then ignored.
  bool cache_explicit = false;
  unsigned jobs = 1;
};

/// Runs an already validated configuration.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses args (without the program name) and executes them.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace powsum::cli
