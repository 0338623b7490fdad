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

#include "relprofit/equilibrium.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "relprofit/error.hpp"

namespace relprofit {
namespace {

constexpr double kFocResidualLimit = 1e-10;

void check_pattern(const MarketParams& params, const Pattern& pattern) {
  if (pattern.size() != params.n) {
    throw InvalidArgument("pattern " + pattern.str() + " has length " +
                          std::to_string(pattern.size()) + " but n = " + std::to_string(params.n));
  }
}

std::vector<int> outside_interior(const MarketParams& params, const Pattern& pattern,
                                  const Vector& strategy) {
  std::vector<int> out;
  for (int i = 0; i < strategy.size(); ++i) {
    const StrategyDomain dom = strategy_domain(params, pattern[static_cast<std::size_t>(i)]);
    if (!dom.interior(strategy(i))) out.push_back(i);
  }
  return out;
}

EquilibriumReport make_report(const RelativeProfitGame& game, Vector strategy, SolveMethod method,
                              int iterations, double residual) {
  EquilibriumReport report;
  report.params = game.params();
  report.pattern = game.pattern();
  report.outcome = game.outcome(strategy);
  report.payoffs = PayoffVector{report.outcome.absolute_profits, report.outcome.relative_profits};
  report.method = method;
  report.iterations = iterations;
  report.residual = residual;
  report.boundary_players = outside_interior(game.params(), game.pattern(), strategy);
  report.strategy = std::move(strategy);
  return report;
}

}  // namespace

const char* to_string(SolveMethod method) {
  return method == SolveMethod::kFocSolve ? "foc" : "best-response";
}

EquilibriumReport solve_foc(const MarketParams& params, const DemandSystem& system,
                            const Pattern& pattern) {
  validate(params);
  check_pattern(params, pattern);
  const RelativeProfitGame game(params, system, pattern);
  Vector strategy = solve_checked(game.foc_matrix(), -game.foc_offset(), "first-order conditions");
  const double residual = game.foc_residuals(strategy).cwiseAbs().maxCoeff();
  if (!(residual < kFocResidualLimit)) {
    std::ostringstream msg;
    msg << "FOC residual " << residual << " exceeds " << kFocResidualLimit << " for pattern "
        << pattern.str();
    throw Error(msg.str());
  }
  return make_report(game, std::move(strategy), SolveMethod::kFocSolve, 1, residual);
}

EquilibriumReport solve_best_response(const MarketParams& params, const DemandSystem& system,
                                      const Pattern& pattern, const BestResponseOptions& options) {
  validate(params);
  check_pattern(params, pattern);
  if (!(options.damping > 0.0 && options.damping <= 1.0)) {
    throw InvalidArgument("damping must lie in (0,1]");
  }
  if (!(options.tol > 0.0)) throw InvalidArgument("tol must be positive");
  if (options.max_iter < 1) throw InvalidArgument("max_iter must be at least 1");

  const RelativeProfitGame game(params, system, pattern);
  const int n = params.n;
  std::vector<StrategyDomain> domains;
  Vector v(n);
  for (int i = 0; i < n; ++i) {
    domains.push_back(strategy_domain(params, pattern[static_cast<std::size_t>(i)]));
    v(i) = domains.back().midpoint();
  }

  Vector response(n);
  double step = 0.0;
  for (int iter = 1; iter <= options.max_iter; ++iter) {
    for (int i = 0; i < n; ++i) {
      response(i) = domains[static_cast<std::size_t>(i)].clamp(game.best_response_vertex(v, i));
    }
    const Vector next = (1.0 - options.damping) * v + options.damping * response;
    step = (next - v).cwiseAbs().maxCoeff();
    v = next;
    if (!std::isfinite(step)) break;
    if (step < options.tol) {
      return make_report(game, std::move(v), SolveMethod::kBestResponse, iter, step);
    }
  }
  std::ostringstream msg;
  msg << "best-response iteration for pattern " << pattern.str() << " did not converge in "
      << options.max_iter << " iterations (last step " << step << ")";
  throw NoConvergence(msg.str(), options.max_iter, step);
}

EquivalenceVerdict compare_equilibria(const EquilibriumReport& lhs, const EquilibriumReport& rhs,
                                      double tol) {
  if (!(lhs.params == rhs.params)) {
    throw ParamMismatch("equilibrium reports were computed from different market parameters");
  }
  EquivalenceVerdict verdict;
  const auto scan = [&](const Vector& l, const Vector& r, Variable component) {
    for (int i = 0; i < l.size(); ++i) {
      const double d = std::abs(l(i) - r(i));
      if (d > verdict.max_deviation) {
        verdict.max_deviation = d;
        verdict.component = component;
        verdict.player = i;
      }
    }
  };
  scan(lhs.outcome.quantities, rhs.outcome.quantities, Variable::kQuantity);
  scan(lhs.outcome.prices, rhs.outcome.prices, Variable::kPrice);
  verdict.equivalent = verdict.max_deviation <= tol;
  return verdict;
}

}  // namespace relprofit
