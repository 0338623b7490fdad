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

#include <random>

#include "doctest.h"
#include "oracle/brute_force.hpp"
#include "relprofit/equilibrium.hpp"
#include "relprofit/error.hpp"
#include "unit/fixtures.hpp"

namespace relprofit {
namespace {

using testing::standard;

EquilibriumReport foc(const MarketParams& p, const char* pattern) {
  return solve_foc(p, build_demand_system(p), Pattern::parse(pattern));
}

TEST_CASE("Cournot equilibrium of the one-alien market") {
  // x_A = (b c_D - 3 c_A - a b + 3a) / (2 (3-b)(b+1)) = 2.6/7.5; x_D from the FOC system = 1.7/7.5
  const EquilibriumReport r = foc(standard(), "QQQQ");
  for (int i = 0; i < 3; ++i) CHECK(r.outcome.quantities(i) == doctest::Approx(2.6 / 7.5).epsilon(1e-12));
  CHECK(r.outcome.quantities(3) == doctest::Approx(1.7 / 7.5).epsilon(1e-12));
  CHECK(r.residual < 1e-10);
  CHECK_FALSE(r.boundary());
  CHECK(r.method == SolveMethod::kFocSolve);

  const oracle::Vec ref = oracle::cournot_quantities(2.0, 0.5, {1.0, 1.0, 1.0, 1.2});
  for (int i = 0; i < 4; ++i) CHECK(r.outcome.quantities(i) == doctest::Approx(ref[i]).epsilon(1e-12));
}

TEST_CASE("Bertrand equilibrium of the one-alien market") {
  const EquilibriumReport r = foc(standard(), "PPPP");
  for (int i = 0; i < 3; ++i) CHECK(r.outcome.quantities(i) == doctest::Approx(3.5 / 9.75).epsilon(1e-12));
  CHECK(r.outcome.quantities(3) == doctest::Approx(1.85 / 9.75).epsilon(1e-12));
}

TEST_CASE("symmetric costs give (a - c) / (2 (1 + b)) under every pattern") {
  const MarketParams p = testing::symmetric();
  const DemandSystem sys = build_demand_system(p);
  for (const Pattern& pattern : Pattern::all(4)) {
    const EquilibriumReport r = solve_foc(p, sys, pattern);
    for (int i = 0; i < 4; ++i) {
      INFO(pattern.str());
      CHECK(r.outcome.quantities(i) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("property: FOC solution matches the finite-difference oracle and is a Nash equilibrium") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const MarketParams p = testing::random_params(rng);
    const Pattern pattern = testing::random_pattern(p.n, rng);
    const EquilibriumReport r = solve_foc(p, build_demand_system(p), pattern);
    const oracle::Vec ref = oracle::fd_equilibrium(pattern.str(), p.a, p.b, p.costs);
    for (int i = 0; i < p.n; ++i) {
      CHECK(r.strategy(i) == doctest::Approx(ref[i]).epsilon(1e-7));
    }
    if (!r.boundary()) {
      const double gain = oracle::best_unilateral_gain(pattern.str(), testing::to_std(r.strategy),
                                                       p.a, p.b, p.costs, 400);
      CHECK(gain <= 1e-12);
    }
  }
}

TEST_CASE("best response converges to the FOC answer") {
  const MarketParams p = standard();
  const DemandSystem sys = build_demand_system(p);
  for (const Pattern& pattern : Pattern::all(4)) {
    const EquilibriumReport f = solve_foc(p, sys, pattern);
    const EquilibriumReport b = solve_best_response(p, sys, pattern);
    INFO(pattern.str());
    CHECK(b.method == SolveMethod::kBestResponse);
    CHECK(b.residual < 1e-10);
    CHECK((b.strategy - f.strategy).cwiseAbs().maxCoeff() < 1e-7);
    CHECK(compare_equilibria(f, b).equivalent);
  }
}

TEST_CASE("best response on the symmetric market") {
  const MarketParams p = testing::symmetric();
  const EquilibriumReport r = solve_best_response(p, build_demand_system(p), Pattern::parse("QQQQ"));
  for (int i = 0; i < 4; ++i) CHECK(r.strategy(i) == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("undamped best response at b = 0.9 is deterministic") {
  const MarketParams p = make_params(2.0, 0.9, {1.0, 1.0, 1.0, 1.2});
  const DemandSystem sys = build_demand_system(p);
  BestResponseOptions opts;
  opts.damping = 1.0;
  const auto run = [&]() -> std::pair<bool, Vector> {
    try {
      return {true, solve_best_response(p, sys, Pattern::parse("QQQQ"), opts).strategy};
    } catch (const NoConvergence& e) {
      return {false, Vector::Constant(1, e.last_step())};
    }
  };
  const auto first = run();
  const auto second = run();
  CHECK(first.first == second.first);
  CHECK(first.second == second.second);
}

TEST_CASE("best-response argument checks") {
  const MarketParams p = standard();
  const DemandSystem sys = build_demand_system(p);
  const Pattern pattern = Pattern::parse("QQQQ");
  BestResponseOptions opts;
  opts.damping = 0.0;
  CHECK_THROWS_AS(solve_best_response(p, sys, pattern, opts), InvalidArgument);
  opts.damping = 1.5;
  CHECK_THROWS_AS(solve_best_response(p, sys, pattern, opts), InvalidArgument);
  opts = {};
  opts.tol = 0.0;
  CHECK_THROWS_AS(solve_best_response(p, sys, pattern, opts), InvalidArgument);
  opts = {};
  opts.max_iter = 2;
  CHECK_THROWS_AS(solve_best_response(p, sys, pattern, opts), NoConvergence);
}

TEST_CASE("equilibria outside the domain are flagged, not clipped") {
  const MarketParams p = make_params(2.0, 0.9, {0.0, 0.0, 0.0, 1.6});
  const EquilibriumReport r = foc(p, "QQQQ");
  REQUIRE(r.boundary());
  CHECK(r.boundary_players == std::vector<int>{3});
  CHECK(r.strategy(3) < 0.0);
}

TEST_CASE("compare_equilibria on the one-alien market") {
  const MarketParams p = standard();
  SUBCASE("alien switching to price is equivalent") {
    CHECK(compare_equilibria(foc(p, "QQQQ"), foc(p, "QQQP")).equivalent);
    CHECK(compare_equilibria(foc(p, "PPPP"), foc(p, "PPPQ")).equivalent);
  }
  SUBCASE("Cournot and Bertrand differ") {
    const EquilibriumReport q = foc(p, "QQQQ");
    const EquilibriumReport b = foc(p, "PPPP");
    const EquivalenceVerdict v = compare_equilibria(q, b);
    CHECK_FALSE(v.equivalent);
    CHECK(std::abs(b.outcome.quantities(0) - q.outcome.quantities(0)) ==
          doctest::Approx(3.5 / 9.75 - 2.6 / 7.5).epsilon(1e-10));
    // largest gap: x_D, 1.7/7.5 - 1.85/9.75
    CHECK(v.component == Variable::kQuantity);
    CHECK(v.player == 3);
    CHECK(v.max_deviation == doctest::Approx(1.7 / 7.5 - 1.85 / 9.75).epsilon(1e-10));
  }
  SUBCASE("a non-alien switching breaks equivalence") {
    CHECK_FALSE(compare_equilibria(foc(p, "QQQQ"), foc(p, "QQPQ")).equivalent);
    CHECK_FALSE(compare_equilibria(foc(p, "PPPP"), foc(p, "PPQP")).equivalent);
  }
}

TEST_CASE("two aliens break equivalence") {
  const MarketParams p = testing::two_alien();
  const EquilibriumReport q = foc(p, "QQQQ");
  const EquilibriumReport m = foc(p, "QQPP");
  CHECK(q.outcome.quantities(0) == doctest::Approx(0.36).epsilon(1e-12));
  CHECK(q.outcome.quantities(2) == doctest::Approx(0.24).epsilon(1e-12));
  CHECK(m.outcome.quantities(0) == doctest::Approx(1.7 / 4.5).epsilon(1e-12));
  CHECK(m.outcome.quantities(2) == doctest::Approx(1.0 / 4.5).epsilon(1e-12));
  CHECK_FALSE(compare_equilibria(q, m).equivalent);
}

TEST_CASE("comparing reports from different markets is an error") {
  CHECK_THROWS_AS(compare_equilibria(foc(standard(), "QQQQ"), foc(testing::two_alien(), "QQQQ")),
                  ParamMismatch);
}

TEST_CASE("alien equivalence at larger n") {
  for (int n : {5, 6, 8}) {
    const MarketParams p = testing::one_alien(n, 2.0, 0.6, 0.9, 1.25);
    const DemandSystem sys = build_demand_system(p);
    const auto solve = [&](Variable major, Variable alien) {
      return solve_foc(p, sys, Pattern::with_alien(n, major, alien));
    };
    CHECK(compare_equilibria(solve(Variable::kQuantity, Variable::kQuantity),
                             solve(Variable::kQuantity, Variable::kPrice))
              .equivalent);
    CHECK(compare_equilibria(solve(Variable::kPrice, Variable::kPrice),
                             solve(Variable::kPrice, Variable::kQuantity))
              .equivalent);
    const oracle::Vec ref = oracle::cournot_quantities(p.a, p.b, p.costs);
    const EquilibriumReport q = solve(Variable::kQuantity, Variable::kQuantity);
    for (int i = 0; i < n; ++i) CHECK(q.outcome.quantities(i) == doctest::Approx(ref[i]).epsilon(1e-12));
  }
}

TEST_CASE("pattern length mismatch is rejected") {
  const MarketParams p = standard();
  CHECK_THROWS_AS(solve_foc(p, build_demand_system(p), Pattern::parse("QQQ")), InvalidArgument);
}

}  // namespace
}  // namespace relprofit
