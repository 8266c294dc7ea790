// Copyright 2026 The mbeam Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "mbeam/channel/monte_carlo.hpp"

namespace mbeam {

struct CheckResult {
  std::string id;
  std::string description;
  bool passed = false;
  std::string detail;  // measured values
};

struct CriterionResult {
  int number = 0;
  std::string title;
  std::vector<CheckResult> checks;
  double seconds = 0.0;

  bool passed() const;
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  std::vector<std::uint64_t> robustness_seeds{42, 7, 2024};
  std::int64_t slots = 20000;
  RunOptions run;
};

inline constexpr int kCriterionCount = 7;

/// Runs one acceptance criterion (1..7).
CriterionResult run_criterion(int number, const VerifyOptions& options = {});

/// Module invariants beyond the acceptance criteria, reported as one
/// pseudo-criterion numbered 0.
CriterionResult run_invariant_suite(const VerifyOptions& options = {});

/// Invariant suite followed by criteria 1..7.
std::vector<CriterionResult> run_verify(const VerifyOptions& options = {});

/// One line per criterion and one indented line per check.
std::string format_results(const std::vector<CriterionResult>& results);

/// {"passed": bool, "criteria": [{number, title, passed, seconds, checks: [...]}]}
nlohmann::json verdict_json(const std::vector<CriterionResult>& results);

}  // namespace mbeam
