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

#ifndef RELPROFIT_MINIMAX_HPP_
#define RELPROFIT_MINIMAX_HPP_

#include <array>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "relprofit/equilibrium.hpp"
#include "relprofit/market.hpp"

namespace relprofit {

enum class Sense { kMax, kMin };

struct OptResult {
  double arg = 0.0;
  double value = 0.0;
};

// Golden-section search until the bracket is narrower than `tol`. Exact for
// unimodal objectives (quasi-concave for kMax, quasi-convex for kMin); for
// anything else the result is a local optimum at best.
OptResult inner_opt(const std::function<double(double)>& objective, const StrategyDomain& domain,
                    Sense sense, double tol);

// u(own, opponent): the payoff of the maximizing player as a function of
// its own variable and the minimizing opponent's variable, everything else
// held fixed. Any zero-sum payoff family can be checked through this.
using PairPayoff = std::function<double(double own, double opponent)>;

struct ArgPair {
  double outer = 0.0;
  double inner = 0.0;
};

struct SaddleValues {
  double min_max = 0.0;  // min over opponent of max over own
  double max_min = 0.0;  // max over own of min over opponent
  ArgPair min_max_args;  // (opponent, own)
  ArgPair max_min_args;  // (own, opponent)
};

struct MinimaxTolerances {
  double inner = 1e-9;
  double outer = 1e-7;
  double assertion = 1e-5;
};

SaddleValues nested_minimax(const PairPayoff& payoff, const StrategyDomain& own_domain,
                            const StrategyDomain& opponent_domain, const MinimaxTolerances& tol);

// Sampled second differences of `payoff` on a grid. Returns one message per
// point where the payoff fails to be concave in `own` or convex in
// `opponent`.
std::vector<std::string> shape_violations(const PairPayoff& payoff, const StrategyDomain& own_domain,
                                          const StrategyDomain& opponent_domain,
                                          const std::string& label);

struct FrozenStrategy {
  int player = 0;
  Variable variable = Variable::kQuantity;
  double value = 0.0;
};

// The four pairwise minimax values between non-alien firm i (maximizing its
// relative profit through its quantity t_i) and the alien n, which either
// sets its quantity t_n or its price s_n. All other firms set quantities
// frozen at `frozen`.
struct MinimaxReport {
  int player_i = 0;
  std::vector<FrozenStrategy> frozen;
  double v_min_tn_max_ti = 0.0;
  double v_min_sn_max_ti = 0.0;
  double v_max_ti_min_sn = 0.0;
  double v_max_ti_min_tn = 0.0;
  // (outer, inner) optimizers, in the order of the four values above.
  std::array<ArgPair, 4> arg_points{};
  double max_spread = 0.0;
  // max_ti min <= min max_ti within 1e-9, for both alien variables.
  bool weak_duality = true;
  std::vector<std::string> shape_violations;
  // Optimizers that sit on a domain edge. The equalities rely on every
  // alien quantity being reachable through its price, which only holds for
  // interior saddles.
  std::vector<std::string> boundary_args;

  bool holds(double tol) const { return weak_duality && max_spread < tol; }
};

inline constexpr double kWeakDualitySlack = 1e-9;

// `frozen` lists the quantities of every firm other than player_i and the
// alien, in firm order (n - 2 values). Throws InvalidArgument if player_i
// is the alien or out of range, or if a frozen value leaves its domain.
MinimaxReport lemma2_check(const MarketParams& params, const DemandSystem& system, int player_i,
                           std::span<const double> frozen, const MinimaxTolerances& tol = {});

struct SionResult {
  double maxmin = 0.0;
  double minmax = 0.0;
  bool holds = false;
};

// max_ti min_tn and min_tn max_ti with both firms on quantities.
SionResult sion_check(const MarketParams& params, const DemandSystem& system, int player_i,
                      std::span<const double> frozen, const MinimaxTolerances& tol = {});

// Quantities of the firms other than player_i and the alien at `report`.
std::vector<double> frozen_from(const EquilibriumReport& report, int player_i);

// Independent draws from [0.5 c, 1.5 c] around each entry c of `center`,
// clamped to the quantity domain.
std::vector<double> sample_frozen(const MarketParams& params, std::span<const double> center,
                                  std::mt19937_64& rng);

}  // namespace relprofit

#endif  // RELPROFIT_MINIMAX_HPP_
