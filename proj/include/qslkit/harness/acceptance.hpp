// Copyright 2026 The qslkit Authors
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

#include <iosfwd>
#include <string>
#include <vector>

namespace qslkit::harness {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string measured;   ///< what was observed, with numbers
  std::string tolerance;  ///< what it was compared against
  double seconds = 0;
};

struct AcceptanceReport {
  std::vector<CriterionResult> results;
  bool all_passed() const;
};

/// Runs criteria 1..10 (or only the listed ids), printing one line per
/// criterion to `log` as soon as it finishes.
AcceptanceReport run_acceptance(std::ostream& log, const std::vector<int>& only = {});

std::string format_result_line(const CriterionResult& r);

}  // namespace qslkit::harness
