// Copyright 2026 The se2track Authors
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

#include "se2track/cli.h"

#include <filesystem>
#include <fstream>

#include "CLI11.hpp"
#include "se2track/simulation.h"

namespace se2track {

namespace {

struct ShippedExample {
  const char* file;
  const char* description;
};

constexpr ShippedExample kShippedExamples[] = {
    {"example1.scenario",
     "single follower tracking a smooth accelerating leader"},
    {"example2.scenario",
     "single follower tracking a stop-and-go leader (no excitation "
     "requirement)"},
    {"example3_pi.scenario",
     "opposite-heading start resolved clockwise (log branch +pi)"},
    {"example3_minus_pi.scenario",
     "opposite-heading start resolved anticlockwise (log branch -pi)"},
    {"example4.scenario", "consensus tracking of three followers on a DAG"},
    {"example5.scenario", "formation tracking with per-follower offsets"},
};

void PrintSummary(const Summary& summary, std::ostream& out) {
  out << "terminal_err = " << summary.terminal_err << "\n"
      << "terminal_pos_err = " << summary.terminal_pos_err << "\n"
      << "max_vy = " << summary.max_vy << "\n"
      << "conv_time = " << summary.conv_time << "\n"
      << "max_transformed_vy = " << summary.max_transformed_vy << "\n"
      << "max_law_gap = " << summary.max_law_gap << "\n";
}

int DoRun(const std::string& scenario_path, const std::string& out_dir,
          double dt_override, double duration_override, std::ostream& out,
          std::ostream& err) {
  Scenario scenario;
  try {
    scenario = LoadScenario(scenario_path);
    if (dt_override > 0.0) scenario.dt = dt_override;
    if (duration_override > 0.0) scenario.duration = duration_override;
    ValidateScenario(scenario);
  } catch (const ScenarioError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }

  RunResult result;
  try {
    result = Run(scenario);
  } catch (const DivergenceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDivergence;
  }

  const std::filesystem::path csv_path =
      std::filesystem::path(out_dir) / scenario.output_name;
  std::ofstream csv(csv_path);
  if (!csv) {
    err << "error: cannot write '" << csv_path.string() << "'\n";
    return kExitValidation;
  }
  WriteCsv(result.log, csv);
  out << "wrote " << csv_path.string() << " (" << result.log.rows.size()
      << " rows)\n";
  PrintSummary(result.summary, out);
  return kExitOk;
}

int DoVerify(const std::string& scenario_path, const std::string& check,
             double tol, std::ostream& out, std::ostream& err) {
  Scenario scenario;
  try {
    scenario = LoadScenario(scenario_path);
  } catch (const ScenarioError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  RunResult result;
  try {
    result = Run(scenario);
  } catch (const DivergenceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDivergence;
  }
  double value = 0.0;
  try {
    value = SummaryMetric(result.summary, check);
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  // conv_time additionally demands that convergence happened at all.
  const bool pass = value <= tol && (check != "conv_time" || value >= 0.0);
  out << "check " << check << " = " << value << " (tol " << tol
      << "): " << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? kExitOk : kExitCheckFailed;
}

int DoExamples(const std::string& dir, std::ostream& out) {
  out << "shipped scenarios (directory: " << dir << ")\n";
  for (const ShippedExample& example : kShippedExamples) {
    const std::filesystem::path path = std::filesystem::path(dir) / example.file;
    out << "  " << path.string() << "\n    " << example.description << "\n";
  }
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"se2track: planar nonholonomic tracking/consensus/formation "
               "simulator"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string out_dir = ".";
  double dt_override = 0.0;
  double duration_override = 0.0;
  long long seed = 0;

  CLI::App* run = app.add_subcommand("run", "simulate a scenario and write CSV");
  run->add_option("scenario", scenario_path, "scenario file")->required();
  run->add_option("--out", out_dir, "output directory");
  run->add_option("--dt", dt_override, "override time step [s]");
  run->add_option("--duration", duration_override, "override duration [s]");
  run->add_option("--seed", seed,
                  "seed for randomized suites; scenario dynamics are "
                  "deterministic and ignore it");

  std::string check;
  double tol = 0.0;
  CLI::App* verify =
      app.add_subcommand("verify", "run a scenario and check a summary metric");
  verify->add_option("scenario", scenario_path, "scenario file")->required();
  verify->add_option("--check", check, "metric name")->required();
  verify->add_option("--tol", tol, "pass threshold")->required();

  std::string examples_dir = "scenarios";
  CLI::App* examples =
      app.add_subcommand("examples", "list the shipped scenarios");
  examples->add_option("--dir", examples_dir, "scenario directory");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends.
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }

  if (run->parsed()) {
    return DoRun(scenario_path, out_dir, dt_override, duration_override, out,
                 err);
  }
  if (verify->parsed()) {
    return DoVerify(scenario_path, check, tol, out, err);
  }
  if (examples->parsed()) {
    return DoExamples(examples_dir, out);
  }
  err << "error: no subcommand\n";
  return kExitValidation;
}

}  // namespace se2track
