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

// Scenario configuration: a flat JSON object whose keys carry their units.
//
//   {"schema_version": 1, "scenario": "fig2", "tau_us": 50}
//
// Omitted keys take the per-scenario defaults from default_config().
// Unknown keys, bad types and out-of-range values raise ConfigError.

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qslkit/dynamics.hpp"
#include "qslkit/s_parameter.hpp"
#include "qslkit/state_prep.hpp"
#include "qslkit/thermal.hpp"
#include "qslkit/tomography.hpp"

namespace qslkit::harness {

inline constexpr int kSchemaVersion = 1;

enum class Scenario { fig2, fig3, sm_lz_linear, sm_example1, prep, tomography };

std::string to_string(Scenario s);
Scenario parse_scenario(std::string_view name);

enum class ScheduleKind { cosine, linear };

struct ScenarioConfig {
  Scenario scenario = Scenario::fig2;

  double omega0_rad_per_us = 0;
  double delta_rad_per_us = 0;
  double tau_us = 0;
  ScheduleKind schedule = ScheduleKind::cosine;
  double ramp_a_rad_per_us = 0;
  double ramp_b_rad_per_us = 0;
  bool counterdiabatic = true;

  /// beta * Omega_0, dimensionless; infinite means the ground state.
  InverseTemperature beta_omega0 = InverseTemperature::infinite();
  bool simulate_prep = false;

  double gamma_eff_rad_per_us = kDefaultGammaEff;
  int n_pulse_steps = 0;
  OptimizerConfig optimizer;

  std::vector<SParameter> s_list;
  TimeGrid grid;

  Shots shots = Shots::count(50000);
  int tomography_points = 21;

  std::uint64_t seed = 20240917;
  std::string output_dir = "out";

  /// Inverse temperature in us/rad.
  InverseTemperature beta() const;
  ControlSchedule control_schedule() const;
};

/// Defaults for a scenario before any key is applied.
ScenarioConfig default_config(Scenario scenario);

/// Builds a config from a parsed JSON object (schema checks included).
ScenarioConfig config_from_json(const nlohmann::json& doc);

/// Parses JSON text; syntax errors report line and column.
nlohmann::json parse_config_json(std::string_view text);
ScenarioConfig parse_config(std::string_view text);
ScenarioConfig load_config(const std::filesystem::path& path);

/// Every resolved key, including defaults, in schema form.
nlohmann::ordered_json to_json(const ScenarioConfig& config);

}  // namespace qslkit::harness
