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

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qslkit/harness/config.hpp"
#include "qslkit/qsl_metrics.hpp"
#include "qslkit/state_prep.hpp"
#include "qslkit/tomography.hpp"

namespace qslkit::harness {

/// Everything a scenario computes, before anything is written to disk.
struct ScenarioData {
  ScenarioConfig config;
  std::optional<LZParams> lz;
  HamiltonianFn hamiltonian;
  std::optional<Trajectory> trajectory;
  std::optional<MetricsSeries> metrics;
  std::vector<double> tightness_times;
  /// Uhlmann fidelity to the ideal transitionless image of the initial
  /// populations, per output time (LZ scenarios only).
  std::vector<double> tracking_fidelity;
  std::optional<PriorQsl> prior;
  std::optional<PrepResult> prep;
  std::optional<PulseSequence> pulses;
  std::vector<TomographyPoint> tomography;
  std::vector<double> tomography_trace_distance;
};

ScenarioData simulate_scenario(const ScenarioConfig& config);

struct RunSummary {
  std::string scenario;
  nlohmann::ordered_json parameters;
  std::vector<double> tightness_times;
  std::vector<std::pair<std::string, double>> peak_times;  ///< argmax of each vqsl column
  std::optional<double> max_ratio;
  std::optional<double> max_speed;
  std::optional<double> min_tracking_fidelity;
  std::optional<double> prep_fidelity;
  std::optional<double> max_tomography_trace_distance;
  std::vector<std::string> files;
  double wall_time_s = 0;
  std::string version;

  nlohmann::ordered_json to_json() const;
};

RunSummary summarize(const ScenarioData& data);

/// Simulates and writes the scenario's CSV files plus summary.json into out_dir.
RunSummary run_scenario(const ScenarioConfig& config, const std::filesystem::path& out_dir);

struct SweepPoint {
  std::string value;
  std::filesystem::path out_dir;
  RunSummary summary;
};

/// One run per value of `param`, each in out_dir/<param>_<value>, spread over
/// up to `jobs` worker threads.
std::vector<SweepPoint> run_sweep(const nlohmann::json& base, const std::string& param,
                                  const std::vector<std::string>& values, const std::filesystem::path& out_dir,
                                  unsigned jobs);

const char* version();

}  // namespace qslkit::harness
