// Copyright 2026 The rucbound developers
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

#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "rucb/errors.hpp"

namespace cli = rucb::cli;

int main(int argc, char** argv) {
  CLI::App app{
      "Uncertainty bounds for ancilla-free measurements of qubit random unitary channels,\n"
      "plus fully entangled fractions of two-qubit states."};
  app.require_subcommand(1);

  cli::CommonFlags common;
  double tol_value = 0.0;
  bool tol_set = false;
  app.add_option("--seed", common.seed, "root seed for randomized suites")->capture_default_str();
  app.add_flag("--json", common.json, "emit JSON");
  app.add_flag("--csv", common.csv, "emit CSV");
  std::string out_path;
  app.add_option("--out", out_path, "write output to a file instead of stdout");
  app.add_option("--tol", tol_value, "override the verification tolerance")
      ->each([&tol_set](const std::string&) { tol_set = true; });
  app.fallthrough();

  cli::BoundArgs bound;
  CLI::App* cmd_bound = app.add_subcommand("bound", "evaluate one scenario file");
  cmd_bound->add_option("scenario", bound.scenario_path, "scenario JSON file")->required();
  cmd_bound->add_flag("--verify", bound.verify,
                      "cross-check the closed form against the brute-force search");

  cli::SweepArgs sweep;
  CLI::App* cmd_sweep = app.add_subcommand("sweep", "sweep the built-in two-PVM family");
  cmd_sweep->add_option("--theta-min", sweep.theta_min, "sweep start")->capture_default_str();
  cmd_sweep->add_option("--theta-max", sweep.theta_max, "sweep end")->capture_default_str();
  cmd_sweep->add_option("--steps", sweep.steps, "number of rows")->capture_default_str();
  cmd_sweep->add_option("--r", sweep.r, "measurement mixing weight")->capture_default_str();

  cli::VerifyArgs verify;
  CLI::App* cmd_verify = app.add_subcommand("verify", "run the randomized verification suites");
  cmd_verify->add_option("--count", verify.count, "instances per suite")->capture_default_str();
  cmd_verify->add_option("--suite", verify.suite, "all | bounds | fef | soundness")
      ->capture_default_str();

  cli::FefArgs fef;
  CLI::App* cmd_fef = app.add_subcommand("fef", "fully entangled fraction of a two-qubit state");
  cmd_fef->add_option("state", fef.state_path, "state JSON file");
  std::string builtin;
  cmd_fef->add_option("--builtin", builtin, "bell | mixed | product:pA,pB");
  cmd_fef->add_option("--method", fef.method, "all | general | numeric | product")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitUsage;
  }

  if (tol_set) common.tol = tol_value;
  bound.common = sweep.common = verify.common = fef.common = common;
  if (!out_path.empty()) {
    bound.common.out = sweep.common.out = verify.common.out = fef.common.out = out_path;
  }
  if (!builtin.empty()) fef.builtin = builtin;

  try {
    if (cmd_bound->parsed()) return cli::cmd_bound(bound);
    if (cmd_sweep->parsed()) return cli::cmd_sweep(sweep);
    if (cmd_verify->parsed()) return cli::cmd_verify(verify);
    if (cmd_fef->parsed()) return cli::cmd_fef(fef);
  } catch (const rucb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitUsage;
  }
  return cli::kExitUsage;
}
