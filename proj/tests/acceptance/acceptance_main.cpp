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

// Prints one PASS/FAIL line per acceptance criterion and exits nonzero if
// any criterion fails. Optional arguments restrict the run to given ids.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "qslkit/harness/acceptance.hpp"

int main(int argc, char** argv) {
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) only.push_back(std::stoi(argv[i]));
  const auto report = qslkit::harness::run_acceptance(std::cout, only);
  std::size_t passed = 0;
  for (const auto& r : report.results) passed += r.passed ? 1 : 0;
  std::cout << passed << "/" << report.results.size() << " criteria passed\n";
  return report.all_passed() ? EXIT_SUCCESS : EXIT_FAILURE;
}
