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

#ifndef RELPROFIT_TOOLS_COMMANDS_HPP_
#define RELPROFIT_TOOLS_COMMANDS_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace relprofit::cli {

// Process exit codes. Shell scripts rely on these values.
enum ExitCode : int {
  kOk = 0,
  kNotEquivalent = 1,
  kConfigError = 2,
  kSolverError = 3,
  kIoError = 4,
};

struct RunConfig {
  std::filesystem::path params_path;
  std::vector<std::string> patterns;
  // Per-command default when unset: compare 1e-7, verify-minimax 1e-5,
  // closed-form 1e-8.
  std::optional<double> tol;
  // solve: "foc" or "br" (damped best response).
  std::string method = "foc";
  double damping = 0.5;
  std::optional<std::filesystem::path> csv_path;
  // "name:lo:hi:step" with name one of a, b, delta, c_alien.
  std::string sweep;
  bool per_player = false;
  std::uint64_t seed = 0;
  // verify-minimax: random frozen points per non-alien firm.
  int samples = 5;
};

int cmd_solve(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_compare(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify_minimax(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_closed_form(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace relprofit::cli

#endif  // RELPROFIT_TOOLS_COMMANDS_HPP_
