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

// qslkit command line.
//
//   qslkit run --config <file> [--out <dir>]
//   qslkit sweep --config <file> --param tau_us --values 25,50,75,100 [--out <dir>] [--jobs N]
//   qslkit acceptance [--only 1,3]
//   qslkit version
//
// QSLKIT_SEED overrides the config seed. Exit codes: 0 success, 2 config
// error, 3 numerical failure, 4 acceptance failure, 1 anything else.

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "qslkit/harness/acceptance.hpp"
#include "qslkit/harness/scenario.hpp"

namespace {

namespace h = qslkit::harness;

enum ExitCode { kOk = 0, kOther = 1, kConfig = 2, kNumerical = 3, kAcceptance = 4 };

nlohmann::json read_config_doc(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw qslkit::ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  nlohmann::json doc = h::parse_config_json(buf.str());
  if (const char* env = std::getenv("QSLKIT_SEED")) {
    const std::string_view text(env);
    std::uint64_t seed = 0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), seed);
    if (text.empty() || res.ec != std::errc{} || res.ptr != text.data() + text.size())
      throw qslkit::ConfigError("QSLKIT_SEED must be a non-negative integer, got '" + std::string(text) + "'");
    if (doc.is_object()) doc["seed"] = seed;
  }
  return doc;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const qslkit::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfig;
  } catch (const qslkit::InvalidArgument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfig;
  } catch (const qslkit::RangeError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfig;
  } catch (const qslkit::NumericalFailure& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  } catch (const qslkit::DegenerateSpectrum& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kOther;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qslkit: counterdiabatic Landau-Zener driving and quantum speed limits"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;

  auto* run = app.add_subcommand("run", "Run one scenario and write its CSV and JSON outputs");
  run->add_option("--config", config_path, "Scenario config (JSON)")->required()->check(CLI::ExistingFile);
  run->add_option("--out", out_dir, "Output directory (default: the config's output_dir)");

  std::string param;
  std::vector<std::string> values;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  auto* sweep = app.add_subcommand("sweep", "Run a scenario once per value of one config key");
  sweep->add_option("--config", config_path, "Base scenario config (JSON)")->required()->check(CLI::ExistingFile);
  sweep->add_option("--param", param, "Config key to vary, e.g. tau_us")->required();
  sweep->add_option("--values", values, "Comma-separated values")->required()->delimiter(',');
  sweep->add_option("--out", out_dir, "Parent output directory (default: the config's output_dir)");
  sweep->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::vector<int> only;
  auto* acceptance = app.add_subcommand("acceptance", "Run the acceptance criteria and report pass/fail");
  acceptance->add_option("--only", only, "Criterion ids to run")->delimiter(',');

  auto* version = app.add_subcommand("version", "Print the tool version");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfig;
  }

  if (*version) {
    std::cout << "qslkit " << h::version() << '\n';
    return kOk;
  }
  if (*run) {
    return guarded([&] {
      const h::ScenarioConfig cfg = h::config_from_json(read_config_doc(config_path));
      const std::string dir = out_dir.empty() ? cfg.output_dir : out_dir;
      const h::RunSummary summary = h::run_scenario(cfg, dir);
      std::cout << summary.to_json().dump(2) << '\n';
      return int(kOk);
    });
  }
  if (*sweep) {
    return guarded([&] {
      const nlohmann::json doc = read_config_doc(config_path);
      const std::string dir = out_dir.empty() ? h::config_from_json(doc).output_dir : out_dir;
      for (const auto& point : h::run_sweep(doc, param, values, dir, jobs)) {
        std::cout << param << "=" << point.value << " -> " << point.out_dir.string();
        if (!point.summary.tightness_times.empty())
          std::cout << " tightness_us=" << nlohmann::json(point.summary.tightness_times).dump();
        std::cout << '\n';
      }
      return int(kOk);
    });
  }
  if (*acceptance) {
    return guarded([&] {
      const h::AcceptanceReport report = h::run_acceptance(std::cout, only);
      const auto passed = std::count_if(report.results.begin(), report.results.end(),
                                        [](const h::CriterionResult& r) { return r.passed; });
      std::cout << passed << "/" << report.results.size() << " criteria passed\n";
      return int(report.all_passed() ? kOk : kAcceptance);
    });
  }
  return kOther;
}
