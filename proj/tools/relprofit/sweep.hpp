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

#ifndef RELPROFIT_TOOLS_SWEEP_HPP_
#define RELPROFIT_TOOLS_SWEEP_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "relprofit/market.hpp"

namespace relprofit::cli {

enum class SweepParam { kA, kB, kDelta, kAlienCost };

// --sweep name:lo:hi:step. `delta` sets the alien cost to c_1 + value;
// `c_alien` sets it to value.
struct SweepSpec {
  SweepParam param = SweepParam::kB;
  std::string name;
  double lo = 0.0;
  double hi = 0.0;
  double step = 0.0;

  // lo, lo + step, ... up to hi (inclusive within step * 1e-9).
  std::vector<double> values() const;
};

// Throws InvalidArgument on an unknown name, step <= 0 or lo >= hi.
SweepSpec parse_sweep(std::string_view text);

// Validated copy of `base` with the swept parameter set to `value`.
MarketParams apply_sweep(const MarketParams& base, const SweepSpec& spec, double value);

// One row per grid point: swept value, every firm's output under every
// pattern, then pairwise outcome deviations.
std::string sweep_grid_csv(const MarketParams& base, const SweepSpec& spec,
                           const std::vector<Pattern>& patterns);

// Header param,pattern,player,x,p,pi,phi; one row per (value, pattern, firm).
std::string sweep_per_player_csv(const MarketParams& base, const SweepSpec& spec,
                                 const std::vector<Pattern>& patterns);

}  // namespace relprofit::cli

#endif  // RELPROFIT_TOOLS_SWEEP_HPP_
