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

#include "relprofit/minimax.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "relprofit/error.hpp"
#include "relprofit/payoff.hpp"

namespace relprofit {

OptResult inner_opt(const std::function<double(double)>& objective, const StrategyDomain& domain,
                    Sense sense, double tol) {
  static const double kInvPhi = (std::sqrt(5.0) - 1.0) / 2.0;
  const double sign = sense == Sense::kMax ? -1.0 : 1.0;
  const auto f = [&](double x) { return sign * objective(x); };

  double lo = domain.lower;
  double hi = domain.upper;
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > tol) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = f(x2);
    }
  }
  const double arg = 0.5 * (lo + hi);
  return OptResult{arg, objective(arg)};
}

SaddleValues nested_minimax(const PairPayoff& payoff, const StrategyDomain& own_domain,
                            const StrategyDomain& opponent_domain, const MinimaxTolerances& tol) {
  SaddleValues out;

  const auto best_own = [&](double opponent) {
    return inner_opt([&](double own) { return payoff(own, opponent); }, own_domain, Sense::kMax,
                     tol.inner);
  };
  const OptResult min_max = inner_opt([&](double opp) { return best_own(opp).value; },
                                      opponent_domain, Sense::kMin, tol.outer);
  out.min_max = min_max.value;
  out.min_max_args = ArgPair{min_max.arg, best_own(min_max.arg).arg};

  const auto worst_opp = [&](double own) {
    return inner_opt([&](double opp) { return payoff(own, opp); }, opponent_domain, Sense::kMin,
                     tol.inner);
  };
  const OptResult max_min = inner_opt([&](double own) { return worst_opp(own).value; }, own_domain,
                                      Sense::kMax, tol.outer);
  out.max_min = max_min.value;
  out.max_min_args = ArgPair{max_min.arg, worst_opp(max_min.arg).arg};
  return out;
}

std::vector<std::string> shape_violations(const PairPayoff& payoff, const StrategyDomain& own_domain,
                                          const StrategyDomain& opponent_domain,
                                          const std::string& label) {
  constexpr int kGrid = 7;
  constexpr double kNoise = 1e-12;
  std::vector<std::string> out;
  const double h_own = own_domain.width() * 1e-3;
  const double h_opp = opponent_domain.width() * 1e-3;
  for (int i = 1; i < kGrid - 1; ++i) {
    const double own = own_domain.lower + own_domain.width() * i / (kGrid - 1);
    for (int j = 1; j < kGrid - 1; ++j) {
      const double opp = opponent_domain.lower + opponent_domain.width() * j / (kGrid - 1);
      const double center = payoff(own, opp);
      const double d_own = payoff(own + h_own, opp) - 2.0 * center + payoff(own - h_own, opp);
      const double d_opp = payoff(own, opp + h_opp) - 2.0 * center + payoff(own, opp - h_opp);
      if (d_own > kNoise) {
        std::ostringstream msg;
        msg << label << ": not concave in own variable at (" << own << ", " << opp << ")";
        out.push_back(msg.str());
      }
      if (d_opp < -kNoise) {
        std::ostringstream msg;
        msg << label << ": not convex in opponent variable at (" << own << ", " << opp << ")";
        out.push_back(msg.str());
      }
    }
  }
  return out;
}

namespace {

struct PairGames {
  RelativeProfitGame quantity_game;  // alien on quantity
  RelativeProfitGame price_game;     // alien on price
  Vector base;
};

PairGames make_pair_games(const MarketParams& params, const DemandSystem& system, int player_i,
                          std::span<const double> frozen, std::vector<FrozenStrategy>* frozen_out) {
  validate(params);
  const int n = params.n;
  const int alien = n - 1;
  if (player_i < 0 || player_i >= n) throw InvalidArgument("player index out of range");
  if (player_i == alien) throw InvalidArgument("player_i must not be the alien");
  if (static_cast<int>(frozen.size()) != n - 2) {
    throw InvalidArgument("expected " + std::to_string(n - 2) + " frozen values, got " +
                          std::to_string(frozen.size()));
  }
  const StrategyDomain qdom = strategy_domain(params, Variable::kQuantity);
  Vector base = Vector::Zero(n);
  std::size_t next = 0;
  for (int k = 0; k < n; ++k) {
    if (k == player_i || k == alien) continue;
    const double value = frozen[next++];
    if (!qdom.contains(value)) {
      throw InvalidArgument("frozen quantity of firm " + std::to_string(k + 1) +
                            " lies outside its domain");
    }
    base(k) = value;
    if (frozen_out) frozen_out->push_back(FrozenStrategy{k, Variable::kQuantity, value});
  }
  return PairGames{
      RelativeProfitGame(params, system, Pattern::uniform(n, Variable::kQuantity)),
      RelativeProfitGame(params, system,
                         Pattern::with_alien(n, Variable::kQuantity, Variable::kPrice)),
      std::move(base)};
}

PairPayoff pair_payoff(const RelativeProfitGame& game, const Vector& base, int player_i) {
  const int alien = game.size() - 1;
  return [&game, v = Vector(base), player_i, alien](double own, double opponent) mutable {
    v(player_i) = own;
    v(alien) = opponent;
    return game.relative_profit(v, player_i);
  };
}

void note_boundary(const StrategyDomain& dom, double arg, const char* what,
                   std::vector<std::string>& out) {
  const double margin = 1e-6 * dom.width();
  if (arg <= dom.lower + margin || arg >= dom.upper - margin) {
    std::ostringstream msg;
    msg << what << " = " << arg << " is on the domain edge";
    out.push_back(msg.str());
  }
}

}  // namespace

MinimaxReport lemma2_check(const MarketParams& params, const DemandSystem& system, int player_i,
                           std::span<const double> frozen, const MinimaxTolerances& tol) {
  MinimaxReport report;
  report.player_i = player_i;
  const PairGames games = make_pair_games(params, system, player_i, frozen, &report.frozen);
  const StrategyDomain qdom = strategy_domain(params, Variable::kQuantity);
  const StrategyDomain pdom = strategy_domain(params, Variable::kPrice);

  const PairPayoff u_t = pair_payoff(games.quantity_game, games.base, player_i);
  const PairPayoff u_s = pair_payoff(games.price_game, games.base, player_i);

  const SaddleValues t_values = nested_minimax(u_t, qdom, qdom, tol);
  const SaddleValues s_values = nested_minimax(u_s, qdom, pdom, tol);

  report.v_min_tn_max_ti = t_values.min_max;
  report.v_min_sn_max_ti = s_values.min_max;
  report.v_max_ti_min_sn = s_values.max_min;
  report.v_max_ti_min_tn = t_values.max_min;
  report.arg_points = {t_values.min_max_args, s_values.min_max_args, s_values.max_min_args,
                       t_values.max_min_args};

  const std::array<double, 4> values{report.v_min_tn_max_ti, report.v_min_sn_max_ti,
                                     report.v_max_ti_min_sn, report.v_max_ti_min_tn};
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  report.max_spread = *hi - *lo;
  report.weak_duality = t_values.max_min <= t_values.min_max + kWeakDualitySlack &&
                        s_values.max_min <= s_values.min_max + kWeakDualitySlack;

  report.shape_violations = shape_violations(u_t, qdom, qdom, "quantity/quantity");
  const auto s_shape = shape_violations(u_s, qdom, pdom, "quantity/price");
  report.shape_violations.insert(report.shape_violations.end(), s_shape.begin(), s_shape.end());

  note_boundary(qdom, t_values.min_max_args.outer, "argmin t_n", report.boundary_args);
  note_boundary(qdom, t_values.min_max_args.inner, "argmax t_i (t_n)", report.boundary_args);
  note_boundary(pdom, s_values.min_max_args.outer, "argmin s_n", report.boundary_args);
  note_boundary(qdom, s_values.min_max_args.inner, "argmax t_i (s_n)", report.boundary_args);
  return report;
}

SionResult sion_check(const MarketParams& params, const DemandSystem& system, int player_i,
                      std::span<const double> frozen, const MinimaxTolerances& tol) {
  const PairGames games = make_pair_games(params, system, player_i, frozen, nullptr);
  const StrategyDomain qdom = strategy_domain(params, Variable::kQuantity);
  const SaddleValues values =
      nested_minimax(pair_payoff(games.quantity_game, games.base, player_i), qdom, qdom, tol);
  SionResult out;
  out.maxmin = values.max_min;
  out.minmax = values.min_max;
  out.holds = out.maxmin <= out.minmax + kWeakDualitySlack &&
              std::abs(out.minmax - out.maxmin) < tol.assertion;
  return out;
}

std::vector<double> frozen_from(const EquilibriumReport& report, int player_i) {
  const int n = report.params.n;
  std::vector<double> out;
  for (int k = 0; k < n - 1; ++k) {
    if (k != player_i) out.push_back(report.outcome.quantities(k));
  }
  return out;
}

std::vector<double> sample_frozen(const MarketParams& params, std::span<const double> center,
                                  std::mt19937_64& rng) {
  const StrategyDomain qdom = strategy_domain(params, Variable::kQuantity);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> out;
  out.reserve(center.size());
  for (double c : center) out.push_back(qdom.clamp(c * (0.5 + unit(rng))));
  return out;
}

}  // namespace relprofit
