// Copyright 2026 The relprofit Authors. All rights reserved.
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

#include "CLI11.hpp"
#include "relprofit/commands.hpp"

namespace cli = relprofit::cli;

namespace {

void add_params(CLI::App* sub, cli::RunConfig& config) {
  sub->add_option("--params", config.params_path, "JSON market parameter file")->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equilibria of relative-profit oligopolies with quantity/price choice"};
  app.require_subcommand(1);
  cli::RunConfig config;

  CLI::App* solve = app.add_subcommand("solve", "Solve one pattern's Nash equilibrium");
  add_params(solve, config);
  solve->add_option("--pattern", config.patterns, "Pattern over {Q,P}, e.g. QQQP")
      ->required()
      ->expected(1);
  solve->add_option("--method", config.method, "foc (default) or br");
  solve->add_option("--damping", config.damping, "Best-response damping in (0,1]");
  solve->add_option("--tol", config.tol, "Best-response step tolerance");
  solve->add_option("--csv", config.csv_path, "Write one CSV row per firm");

  CLI::App* compare = app.add_subcommand("compare", "Compare two patterns' equilibrium outcomes");
  add_params(compare, config);
  compare->add_option("--patterns,--pattern", config.patterns, "Two patterns")
      ->required()
      ->expected(2);
  compare->add_option("--tol", config.tol, "Outcome equivalence tolerance (default 1e-7)");

  CLI::App* minimax = app.add_subcommand("verify-minimax", "Check the pairwise minimax equalities");
  add_params(minimax, config);
  minimax->add_option("--tol", config.tol, "Spread tolerance (default 1e-5)");
  minimax->add_option("--seed", config.seed, "Seed for random frozen points (default 0)");
  minimax->add_option("--samples", config.samples, "Random frozen points per firm (default 5)");

  CLI::App* closed = app.add_subcommand("closed-form", "Audit published closed forms (n = 4)");
  add_params(closed, config);
  closed->add_option("--tol", config.tol, "Match tolerance (default 1e-8)");
  closed->add_option("--csv", config.csv_path, "Write the audit as CSV");

  CLI::App* sweep = app.add_subcommand("sweep", "Solve patterns over a parameter grid");
  add_params(sweep, config);
  sweep->add_option("--sweep", config.sweep, "name:lo:hi:step, name in {a, b, delta, c_alien}")
      ->required();
  sweep->add_option("--patterns,--pattern", config.patterns, "Patterns (default Q..Q Q..QP P..P P..PQ)");
  sweep->add_option("--csv", config.csv_path, "Output path (default stdout)");
  sweep->add_flag("--per-player", config.per_player, "One row per (value, pattern, firm)");
  sweep->add_option("--seed", config.seed, "Accepted for interface uniformity; sweeps are seed-free");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kConfigError;
  }

  if (solve->parsed()) return cli::cmd_solve(config, std::cout, std::cerr);
  if (compare->parsed()) return cli::cmd_compare(config, std::cout, std::cerr);
  if (minimax->parsed()) return cli::cmd_verify_minimax(config, std::cout, std::cerr);
  if (closed->parsed()) return cli::cmd_closed_form(config, std::cout, std::cerr);
  if (sweep->parsed()) return cli::cmd_sweep(config, std::cout, std::cerr);
  return cli::kConfigError;
}
