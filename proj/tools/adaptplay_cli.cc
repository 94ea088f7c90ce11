// Copyright 2026 The adaptplay Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line driver: run, verify, reproduce-figure, list-games.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "adaptplay/errors.h"
#include "adaptplay/harness.h"
#include "adaptplay/verify.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCriterion = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adaptive optimistic learning in continuous games"};
  app.require_subcommand(1);

  std::string config_path, out_dir = "out";
  std::vector<std::string> overrides;
  bool openmp = false;
  auto* run = app.add_subcommand("run", "Simulate one configuration and write CSVs");
  run->add_option("--config", config_path, "Config file (INI)")->required();
  run->add_option("--out", out_dir, "Output directory");
  run->add_option("--set", overrides, "Override a config field: section.key=value");
  run->add_flag("--openmp", openmp, "Run the per-player kernels with OpenMP");

  std::string suite = "all";
  bool json = false, tamper = false;
  auto* verify = app.add_subcommand("verify", "Run acceptance suites");
  verify->add_option("--suite", suite, "Suite name or criterion id");
  verify->add_flag("--json", json, "Emit one JSON object per criterion");
  verify->add_flag("--tamper-rates", tamper, "Negative control for the monotone-rate check");
  verify->add_flag("--openmp", openmp, "Run the per-player kernels with OpenMP");

  std::string figure, figure_out;
  auto* repro = app.add_subcommand("reproduce-figure", "Write the CSVs of a named figure");
  repro->add_option("name", figure, "peg-divergence | zerosum | kelly | jordan")->required();
  repro->add_option("--out", figure_out, "Output directory")->required();

  auto* list = app.add_subcommand("list-games", "List game kinds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  const auto policy = openmp ? adaptplay::ExecPolicy::kOpenMP : adaptplay::ExecPolicy::kSerial;
  try {
    if (*run) {
      adaptplay::ExperimentConfig config = adaptplay::LoadConfig(config_path, overrides);
      if (openmp) config.policy = policy;
      const adaptplay::RunResult result = adaptplay::RunExperiment(config);
      adaptplay::WriteRun(config, result, out_dir);
      std::cout << "wrote " << result.records.size() << " records to " << out_dir << "\n";
      return kExitOk;
    }
    if (*verify) {
      adaptplay::VerifyOptions options;
      options.policy = policy;
      options.tamper_rates = tamper;
      bool ok = true;
      for (const auto& r : adaptplay::RunVerify(suite, options)) {
        std::cout << (json ? adaptplay::FormatResultJson(r) : adaptplay::FormatResultLine(r))
                  << std::endl;
        ok = ok && r.passed;
      }
      return ok ? kExitOk : kExitCriterion;
    }
    if (*repro) {
      adaptplay::ReproduceFigure(figure, figure_out);
      std::cout << "wrote trajectory.csv and regret.csv to " << figure_out << "\n";
      return kExitOk;
    }
    if (*list) {
      for (const auto& g : adaptplay::ListGames()) {
        std::cout << g.kind << "\t" << g.description << "\n";
      }
      return kExitOk;
    }
  } catch (const adaptplay::NumericalAbort& e) {
    std::cerr << "numerical abort at step " << e.step() << ": " << e.what() << "\n";
    return kExitNumerical;
  } catch (const adaptplay::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const adaptplay::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitOk;
}
