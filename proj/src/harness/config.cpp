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

#include "qslkit/harness/config.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

namespace qslkit::harness {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& key, const std::string& what) {
  throw ConfigError("config key '" + key + "': " + what);
}

[[noreturn]] void out_of_range(const std::string& key, const std::string& what) {
  throw RangeError("config key '" + key + "': " + what);
}

double number(const std::string& key, const json& v) {
  if (!v.is_number()) fail(key, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) fail(key, "must be finite");
  return x;
}

double positive(const std::string& key, const json& v) {
  const double x = number(key, v);
  if (!(x > 0)) out_of_range(key, "must be > 0");
  return x;
}

double non_negative(const std::string& key, const json& v) {
  const double x = number(key, v);
  if (x < 0) out_of_range(key, "must be >= 0");
  return x;
}

std::int64_t integer(const std::string& key, const json& v, std::int64_t lo, std::int64_t hi) {
  if (!v.is_number_integer()) fail(key, "expected an integer");
  if (v.is_number_unsigned() && v.get<std::uint64_t>() > std::uint64_t(hi))
    out_of_range(key, "must be <= " + std::to_string(hi));
  const std::int64_t x = v.get<std::int64_t>();
  if (x < lo || x > hi) out_of_range(key, "must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return x;
}

bool boolean(const std::string& key, const json& v) {
  if (!v.is_boolean()) fail(key, "expected true or false");
  return v.get<bool>();
}

std::string text(const std::string& key, const json& v) {
  if (!v.is_string()) fail(key, "expected a string");
  return v.get<std::string>();
}

SParameter s_value(const json& v) {
  try {
    if (v.is_string()) return SParameter::parse(v.get<std::string>());
    if (v.is_number()) return SParameter::of(v.get<double>());
  } catch (const InvalidArgument& e) {
    fail("s_list", e.what());
  }
  fail("s_list", "entries must be numbers or \"-inf\"");
}

struct Pending {
  ScenarioConfig cfg;
  bool delta_set = false;
  bool t1_set = false;
};

using Setter = std::function<void(Pending&, const std::string&, const json&)>;

const std::map<std::string, Setter, std::less<>>& setters() {
  static const std::map<std::string, Setter, std::less<>> table = {
      {"schema_version",
       [](Pending&, const std::string& k, const json& v) {
         if (integer(k, v, 0, 1000) != kSchemaVersion)
           fail(k, "unsupported version (this build reads " + std::to_string(kSchemaVersion) + ")");
       }},
      {"scenario", [](Pending&, const std::string&, const json&) {}},
      {"omega0_rad_per_us", [](Pending& p, const std::string& k, const json& v) { p.cfg.omega0_rad_per_us = positive(k, v); }},
      {"delta_rad_per_us",
       [](Pending& p, const std::string& k, const json& v) {
         p.cfg.delta_rad_per_us = non_negative(k, v);
         p.delta_set = true;
       }},
      {"tau_us", [](Pending& p, const std::string& k, const json& v) { p.cfg.tau_us = positive(k, v); }},
      {"schedule",
       [](Pending& p, const std::string& k, const json& v) {
         const std::string s = text(k, v);
         if (s == "cosine") p.cfg.schedule = ScheduleKind::cosine;
         else if (s == "linear") p.cfg.schedule = ScheduleKind::linear;
         else fail(k, "expected \"cosine\" or \"linear\"");
       }},
      {"ramp_a_rad_per_us", [](Pending& p, const std::string& k, const json& v) { p.cfg.ramp_a_rad_per_us = number(k, v); }},
      {"ramp_b_rad_per_us", [](Pending& p, const std::string& k, const json& v) { p.cfg.ramp_b_rad_per_us = number(k, v); }},
      {"counterdiabatic", [](Pending& p, const std::string& k, const json& v) { p.cfg.counterdiabatic = boolean(k, v); }},
      {"beta_omega0",
       [](Pending& p, const std::string& k, const json& v) {
         if (v.is_string()) {
           const std::string s = text(k, v);
           if (s != "inf" && s != "infinity") fail(k, "expected a number >= 0 or \"inf\"");
           p.cfg.beta_omega0 = InverseTemperature::infinite();
         } else {
           p.cfg.beta_omega0 = InverseTemperature::finite(non_negative(k, v));
         }
       }},
      {"simulate_prep", [](Pending& p, const std::string& k, const json& v) { p.cfg.simulate_prep = boolean(k, v); }},
      {"gamma_eff_rad_per_us", [](Pending& p, const std::string& k, const json& v) { p.cfg.gamma_eff_rad_per_us = non_negative(k, v); }},
      {"n_pulse_steps", [](Pending& p, const std::string& k, const json& v) { p.cfg.n_pulse_steps = int(integer(k, v, 1, 1000000)); }},
      {"prep_population", [](Pending& p, const std::string& k, const json& v) { p.cfg.optimizer.population = int(integer(k, v, 8, 100000)); }},
      {"prep_iterations", [](Pending& p, const std::string& k, const json& v) { p.cfg.optimizer.iterations = int(integer(k, v, 1, 100000)); }},
      {"prep_max_episodes", [](Pending& p, const std::string& k, const json& v) { p.cfg.optimizer.max_episodes = int(integer(k, v, 8, 10000000)); }},
      {"prep_elite_fraction",
       [](Pending& p, const std::string& k, const json& v) {
         const double x = number(k, v);
         if (!(x > 0 && x < 1)) out_of_range(k, "must lie in (0, 1)");
         p.cfg.optimizer.elite_fraction = x;
       }},
      {"prep_control_bound_rad_per_us", [](Pending& p, const std::string& k, const json& v) { p.cfg.optimizer.control_bound = positive(k, v); }},
      {"prep_detuning_bound_rad_per_us", [](Pending& p, const std::string& k, const json& v) { p.cfg.optimizer.detuning_bound = positive(k, v); }},
      {"prep_omega_i_rad_per_us", [](Pending& p, const std::string& k, const json& v) { p.cfg.optimizer.omega_i = positive(k, v); }},
      {"s_list",
       [](Pending& p, const std::string& k, const json& v) {
         if (!v.is_array() || v.empty()) fail(k, "expected a non-empty array");
         p.cfg.s_list.clear();
         for (const json& e : v) {
           const SParameter s = s_value(e);
           for (const SParameter& seen : p.cfg.s_list)
             if (seen == s) fail(k, "duplicate value " + s.label());
           p.cfg.s_list.push_back(s);
         }
       }},
      {"t0_us", [](Pending& p, const std::string& k, const json& v) { p.cfg.grid.t0 = non_negative(k, v); }},
      {"t1_us",
       [](Pending& p, const std::string& k, const json& v) {
         p.cfg.grid.t1 = positive(k, v);
         p.t1_set = true;
       }},
      {"n_output", [](Pending& p, const std::string& k, const json& v) { p.cfg.grid.n_output = int(integer(k, v, 2, 10000000)); }},
      {"substeps_per_output", [](Pending& p, const std::string& k, const json& v) { p.cfg.grid.substeps_per_output = int(integer(k, v, 1, 100000)); }},
      {"shots",
       [](Pending& p, const std::string& k, const json& v) {
         if (v.is_string()) {
           if (text(k, v) != "EXACT") fail(k, "expected a positive integer or \"EXACT\"");
           p.cfg.shots = Shots::exact();
         } else {
           p.cfg.shots = Shots::count(integer(k, v, 1, std::int64_t(1) << 40));
         }
       }},
      {"tomography_points", [](Pending& p, const std::string& k, const json& v) { p.cfg.tomography_points = int(integer(k, v, 1, 100000)); }},
      {"seed",
       [](Pending& p, const std::string& k, const json& v) {
         if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<std::int64_t>() < 0))
           fail(k, "expected a non-negative integer");
         p.cfg.seed = v.get<std::uint64_t>();
       }},
      {"output_dir", [](Pending& p, const std::string& k, const json& v) { p.cfg.output_dir = text(k, v); }},
  };
  return table;
}

bool is_lz(Scenario s) { return s != Scenario::sm_example1 && s != Scenario::prep; }

void check_consistency(const ScenarioConfig& c) {
  if (!(c.grid.t1 > c.grid.t0)) out_of_range("t1_us", "must exceed t0_us");
  if (is_lz(c.scenario) && c.grid.t1 > c.tau_us * (1 + 1e-12))
    out_of_range("t1_us", "must not exceed tau_us (the drive is defined on [0, tau])");
  if (c.scenario == Scenario::fig2 || c.scenario == Scenario::fig3 || c.scenario == Scenario::tomography) {
    if (c.schedule == ScheduleKind::linear && !(c.ramp_b_rad_per_us != 0)) fail("ramp_b_rad_per_us", "linear ramp needs b != 0");
  }
  if (c.scenario == Scenario::tomography && c.tomography_points > c.grid.n_output)
    out_of_range("tomography_points", "cannot exceed n_output");
  try {
    c.optimizer.validate();
  } catch (const InvalidArgument& e) {
    throw ConfigError(std::string("optimizer settings: ") + e.what());
  }
}

}  // namespace

std::string to_string(Scenario s) {
  switch (s) {
    case Scenario::fig2: return "fig2";
    case Scenario::fig3: return "fig3";
    case Scenario::sm_lz_linear: return "sm-lz-linear";
    case Scenario::sm_example1: return "sm-example1";
    case Scenario::prep: return "prep";
    case Scenario::tomography: return "tomography";
  }
  return "?";
}

Scenario parse_scenario(std::string_view name) {
  for (Scenario s : {Scenario::fig2, Scenario::fig3, Scenario::sm_lz_linear, Scenario::sm_example1, Scenario::prep,
                     Scenario::tomography})
    if (to_string(s) == name) return s;
  throw ConfigError("unknown scenario '" + std::string(name) +
                    "' (expected fig2, fig3, sm-lz-linear, sm-example1, prep or tomography)");
}

InverseTemperature ScenarioConfig::beta() const {
  if (beta_omega0.is_infinite()) return InverseTemperature::infinite();
  return InverseTemperature::finite(beta_omega0.value() / omega0_rad_per_us);
}

ControlSchedule ScenarioConfig::control_schedule() const {
  if (schedule == ScheduleKind::linear) return ControlSchedule::linear(ramp_a_rad_per_us, ramp_b_rad_per_us, tau_us);
  return ControlSchedule::cosine(omega0_rad_per_us, tau_us);
}

ScenarioConfig default_config(Scenario scenario) {
  ScenarioConfig c;
  c.scenario = scenario;
  c.omega0_rad_per_us = 2 * std::numbers::pi * 0.04;
  c.delta_rad_per_us = c.omega0_rad_per_us / 4;
  c.tau_us = 50;
  c.schedule = ScheduleKind::cosine;
  c.ramp_a_rad_per_us = 0.2;
  c.ramp_b_rad_per_us = 0.4;
  c.s_list = {SParameter::neg_inf(), SParameter::of(0)};
  c.n_pulse_steps = 200;
  switch (scenario) {
    case Scenario::sm_lz_linear:
      c.delta_rad_per_us = 0.01;
      c.tau_us = 1000;
      c.schedule = ScheduleKind::linear;
      break;
    case Scenario::sm_example1:
      // H = sigma_z / 2 with dimensionless time; tau_us only sets the window.
      c.tau_us = std::numbers::pi;
      break;
    case Scenario::prep:
      c.n_pulse_steps = 13;
      c.tau_us = 13 * 0.125 / kDefaultPrepRabi;
      break;
    default:
      break;
  }
  c.grid = TimeGrid{0, c.tau_us, 2001, 4};
  return c;
}

ScenarioConfig config_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  const auto it = doc.find("scenario");
  if (it == doc.end()) throw ConfigError("config key 'scenario' is required");
  if (!it->is_string()) fail("scenario", "expected a string");
  Pending p{default_config(parse_scenario(it->get<std::string>()))};

  const auto& table = setters();
  // Apply in a fixed key order so derived defaults see their inputs.
  for (const auto& [key, setter] : table) {
    const auto found = doc.find(key);
    if (found == doc.end()) continue;
    try {
      setter(p, key, *found);
    } catch (const InvalidArgument& e) {
      fail(key, e.what());
    }
  }
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (table.find(key) == table.end()) throw ConfigError("unknown config key '" + key + "'");
  }

  ScenarioConfig& c = p.cfg;
  if (!p.delta_set && c.scenario != Scenario::sm_lz_linear) c.delta_rad_per_us = c.omega0_rad_per_us / 4;
  if (!p.t1_set) c.grid.t1 = c.tau_us;
  // The prep scenario's table length is n_pulse_steps; the prep run embedded
  // in fig3 keeps the optimizer default.
  if (c.scenario == Scenario::prep) c.optimizer.n_steps = c.n_pulse_steps;
  c.optimizer.seed = c.seed;
  check_consistency(c);
  return c;
}

nlohmann::json parse_config_json(std::string_view text) {
  try {
    return nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t limit = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < limit; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::ostringstream os;
    os << "config is not valid JSON at line " << line << ", column " << col << ": " << e.what();
    throw ConfigError(os.str());
  }
}

ScenarioConfig parse_config(std::string_view text) { return config_from_json(parse_config_json(text)); }

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

nlohmann::ordered_json to_json(const ScenarioConfig& c) {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["scenario"] = to_string(c.scenario);
  j["omega0_rad_per_us"] = c.omega0_rad_per_us;
  j["delta_rad_per_us"] = c.delta_rad_per_us;
  j["tau_us"] = c.tau_us;
  j["schedule"] = c.schedule == ScheduleKind::linear ? "linear" : "cosine";
  j["ramp_a_rad_per_us"] = c.ramp_a_rad_per_us;
  j["ramp_b_rad_per_us"] = c.ramp_b_rad_per_us;
  j["counterdiabatic"] = c.counterdiabatic;
  if (c.beta_omega0.is_infinite()) j["beta_omega0"] = "inf";
  else j["beta_omega0"] = c.beta_omega0.value();
  j["simulate_prep"] = c.simulate_prep;
  j["gamma_eff_rad_per_us"] = c.gamma_eff_rad_per_us;
  j["n_pulse_steps"] = c.n_pulse_steps;
  j["prep_population"] = c.optimizer.population;
  j["prep_iterations"] = c.optimizer.iterations;
  j["prep_max_episodes"] = c.optimizer.max_episodes;
  j["prep_elite_fraction"] = c.optimizer.elite_fraction;
  j["prep_control_bound_rad_per_us"] = c.optimizer.control_bound;
  j["prep_detuning_bound_rad_per_us"] = c.optimizer.detuning_bound;
  j["prep_omega_i_rad_per_us"] = c.optimizer.omega_i;
  auto s_list = nlohmann::ordered_json::array();
  for (const SParameter& s : c.s_list) {
    if (s.is_neg_inf()) s_list.push_back("-inf");
    else s_list.push_back(s.value());
  }
  j["s_list"] = s_list;
  j["t0_us"] = c.grid.t0;
  j["t1_us"] = c.grid.t1;
  j["n_output"] = c.grid.n_output;
  j["substeps_per_output"] = c.grid.substeps_per_output;
  if (c.shots.is_exact()) j["shots"] = "EXACT";
  else j["shots"] = c.shots.value();
  j["tomography_points"] = c.tomography_points;
  j["seed"] = c.seed;
  j["output_dir"] = c.output_dir;
  return j;
}

}  // namespace qslkit::harness
