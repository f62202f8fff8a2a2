// Copyright 2026 The curvcert Authors.
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


// curvcert: greedy certificates for monotone set functions under a
// cardinality constraint.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.h"

namespace {

using curvcert::cli::CommonFlags;

void AddInstanceFlags(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--instance", flags.instance, "instance JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--k", flags.k, "cardinality budget")->required();
  cmd->add_option("--cap", flags.cap,
                  "cap on every exhaustive enumeration (0 = defaults)");
  cmd->add_option("--out", flags.out, "output file (default stdout)");
  cmd->add_option("--format", flags.format, "json or csv");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Approximation certificates for greedy maximization"};
  app.require_subcommand(1);

  curvcert::cli::BoundFlags bound;
  CLI::App* bound_cmd =
      app.add_subcommand("bound", "run greedy and report every ratio");
  AddInstanceFlags(bound_cmd, bound.common);
  bound_cmd->add_option("--mode", bound.common.mode, "exact or sampled");
  bound_cmd->add_option("--trials", bound.common.trials, "sampling trials");
  bound_cmd->add_option("--seed", bound.common.seed, "sampling seed");
  bound_cmd->add_flag("--lazy", bound.lazy, "lazy greedy (submodular only)");
  bound_cmd->add_flag("--wang-literal", bound.wang_literal,
                      "sum the Wang series from i = 1");
  bound_cmd->add_flag("--no-oracle", bound.no_oracle, "skip brute force");

  curvcert::cli::SweepFlags sweep;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "tabulate ratio formulas");
  sweep_cmd->add_option("--formula", sweep.formulas,
                        "wang, fixed_gamma, adaptive, classic")
      ->delimiter(',');
  sweep_cmd->add_option("--param", sweep.params,
                        "alpha or Gamma-hat values; 'k' means equal to k")
      ->delimiter(',');
  sweep_cmd->add_option("--k-min", sweep.k_min);
  sweep_cmd->add_option("--k-max", sweep.k_max);
  sweep_cmd->add_option("--out", sweep.out);
  sweep_cmd->add_option("--format", sweep.format, "csv or json");
  sweep_cmd->add_option("--threads", sweep.threads);

  curvcert::cli::ValidateFlags validate;
  CLI::App* validate_cmd = app.add_subcommand(
      "validate", "check the identities and bounds on random instances");
  validate_cmd->add_option("--seed", validate.seed);
  validate_cmd->add_option("--count", validate.count, "bound instances");
  validate_cmd->add_option("--max-n", validate.max_n);
  validate_cmd->add_option("--max-k", validate.max_k);
  validate_cmd->add_option("--property-count", validate.property_count,
                           "functions for the identity checks");
  validate_cmd->add_option("--triples", validate.triples,
                           "(x, S, T) triples per function");
  validate_cmd->add_option("--adaptive-count", validate.adaptive_count);
  validate_cmd->add_option("--adaptive-items", validate.adaptive_items);
  validate_cmd->add_option("--adaptive-k", validate.adaptive_k);
  validate_cmd->add_option("--replay-dir", validate.replay_dir,
                           "where failing instances are written");
  validate_cmd->add_option("--out", validate.out, "summary file");
  validate_cmd->add_option("--threads", validate.threads);
  validate_cmd->add_flag("--inject-bug", validate.inject_bug)
      ->group("");  // hidden: deliberately unsound primal ratio

  CommonFlags adaptive;
  CLI::App* adaptive_cmd = app.add_subcommand(
      "adaptive", "adaptive greedy policy and its certificate");
  AddInstanceFlags(adaptive_cmd, adaptive);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : curvcert::cli::kExitInput;
  }

  try {
    if (*bound_cmd) return curvcert::cli::CmdBound(bound, std::cerr);
    if (*sweep_cmd) return curvcert::cli::CmdSweep(sweep);
    if (*validate_cmd) return curvcert::cli::CmdValidate(validate);
    if (*adaptive_cmd) return curvcert::cli::CmdAdaptive(adaptive, std::cerr);
  } catch (const curvcert::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return curvcert::cli::ExitCodeFor(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return curvcert::cli::kExitInput;
  }
  return curvcert::cli::kExitInput;
}
