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

#include <array>
#include <functional>
#include <random>

#include "doctest.h"
#include "oracle/brute_force.hpp"
#include "relprofit/error.hpp"
#include "relprofit/market.hpp"
#include "unit/fixtures.hpp"

namespace relprofit {
namespace {

using testing::standard;

TEST_CASE("validate rejects each broken invariant") {
  CHECK_NOTHROW(validate(standard()));

  MarketParams p = standard();
  p.n = 2;
  p.costs = {1.0, 1.0};
  CHECK_THROWS_AS(validate(p), InvalidArgument);

  p = standard();
  p.b = 1.0;
  CHECK_THROWS_WITH_AS(validate(p), "b must lie in (0,1)", InvalidArgument);
  p.b = 0.0;
  CHECK_THROWS_AS(validate(p), InvalidArgument);

  p = standard();
  p.a = 0.0;
  CHECK_THROWS_AS(validate(p), InvalidArgument);

  p = standard();
  p.costs[2] = 2.0;  // c_i must be below a
  CHECK_THROWS_AS(validate(p), InvalidArgument);
  p.costs[2] = -0.1;
  CHECK_THROWS_AS(validate(p), InvalidArgument);

  p = standard();
  p.costs.push_back(1.0);
  CHECK_THROWS_AS(validate(p), InvalidArgument);
}

TEST_CASE("one-alien detection") {
  CHECK(standard().one_alien());
  CHECK(testing::symmetric().one_alien());
  CHECK_FALSE(testing::two_alien().one_alien());
}

TEST_CASE("pattern text form") {
  const Pattern p = Pattern::parse("qqQp");
  CHECK(p.str() == "QQQP");
  CHECK(p.size() == 4);
  CHECK(p[3] == Variable::kPrice);
  CHECK(p == Pattern::with_alien(4, Variable::kQuantity, Variable::kPrice));
  CHECK(Pattern::uniform(3, Variable::kPrice).str() == "PPP");
  CHECK_THROWS_AS(Pattern::parse(""), InvalidArgument);
  CHECK_THROWS_AS(Pattern::parse("QQXQ"), InvalidArgument);

  const auto all = Pattern::all(4);
  REQUIRE(all.size() == 16);
  CHECK(all.front().str() == "PPPP");
  CHECK(all.back().str() == "QQQQ");
  for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].str() < all[i].str());
}

TEST_CASE("strategy domains are [0, a]") {
  const StrategyDomain d = strategy_domain(standard(), Variable::kPrice);
  CHECK(d.lower == 0.0);
  CHECK(d.upper == 2.0);
  CHECK(d.interior(1.0));
  CHECK_FALSE(d.interior(0.0));
  CHECK(d.contains(0.0));
  CHECK(d.clamp(3.0) == 2.0);
}

TEST_CASE("b = 0 decouples the goods") {
  MarketParams p = standard();
  p.b = 0.0;  // outside the validated range; build_demand_system accepts it
  const DemandSystem sys = build_demand_system(p);
  Vector prices(4);
  prices << 0.5, 1.0, 1.5, 0.25;
  const Vector x = sys.quantities(prices);
  for (int i = 0; i < 4; ++i) CHECK(x(i) == doctest::Approx(2.0 - prices(i)).epsilon(1e-15));
}

TEST_CASE("quantity-to-price matrix has unit diagonal and b elsewhere") {
  const DemandSystem sys = build_demand_system(standard());
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) CHECK(sys.quantity_to_price(i, j) == (i == j ? 1.0 : 0.5));
  }
}

TEST_CASE("direct demand coefficients match the analytic inverse") {
  // d x_A / d p_A = -(2b+1)/((1-b)(3b+1)) = -1.6 and d x_A / d p_j = b/((1-b)(3b+1)) = 0.4
  const DemandSystem sys = build_demand_system(standard());
  const Vector base = Vector::Constant(4, 1.0);
  const Vector x0 = sys.quantities(base);
  for (int j = 0; j < 4; ++j) {
    Vector bumped = base;
    bumped(j) += 1.0;
    const double slope = sys.quantities(bumped)(0) - x0(0);
    CHECK(slope == doctest::Approx(j == 0 ? -1.6 : 0.4).epsilon(1e-12));
  }
}

TEST_CASE("demand maps are mutually inverse for every size and b") {
  for (int n = 3; n <= 8; ++n) {
    for (double b : {0.05, 0.3, 0.5, 0.7, 0.95}) {
      const MarketParams p = testing::one_alien(n, 2.0, b, 1.0, 1.1);
      const DemandSystem sys = build_demand_system(p);
      const double residual =
          (sys.quantity_to_price * sys.price_to_quantity - Matrix::Identity(n, n))
              .cwiseAbs()
              .maxCoeff();
      CHECK(residual < 1e-12);
      // (1-b)I + bJ has inverse (I - b/(1+(n-1)b) J)/(1-b)
      const double own = (1.0 - b / (1.0 + (n - 1) * b)) / (1.0 - b);
      const double cross = -b / (1.0 + (n - 1) * b) / (1.0 - b);
      CHECK(sys.price_to_quantity(0, 0) == doctest::Approx(own).epsilon(1e-12));
      CHECK(sys.price_to_quantity(n - 1, 0) == doctest::Approx(cross).epsilon(1e-12));
    }
  }
}

TEST_CASE("b = 1 is rejected as singular") {
  MarketParams p = standard();
  p.b = 1.0;
  CHECK_THROWS_AS(build_demand_system(p), SingularSystem);
}

TEST_CASE("singular mixed subsystem is reported") {
  DemandSystem sys = build_demand_system(standard());
  sys.quantity_to_price.setOnes();  // corrupted: b = 1
  CHECK_THROWS_AS(build_pattern_map(sys, Pattern::parse("PPQQ")), SingularSystem);
  CHECK_NOTHROW(build_pattern_map(sys, Pattern::parse("QQQP")));
}

TEST_CASE("pattern length must match n") {
  const DemandSystem sys = build_demand_system(standard());
  CHECK_THROWS_AS(build_pattern_map(sys, Pattern::parse("QQQ")), InvalidArgument);
  const std::array<double, 3> v{0.1, 0.1, 0.1};
  CHECK_THROWS_AS(resolve_outcome(standard(), sys, Pattern::parse("QQQQ"), v), InvalidArgument);
}

TEST_CASE("all-quantity pattern maps prices directly") {
  const MarketParams p = standard();
  const DemandSystem sys = build_demand_system(p);
  const std::array<double, 4> x{0.3, 0.3, 0.3, 0.2};
  const OutcomeProfile o = resolve_outcome(p, sys, Pattern::parse("QQQQ"), x);
  CHECK(o.prices(0) == doctest::Approx(1.3).epsilon(1e-15));
  CHECK(o.prices(3) == doctest::Approx(1.35).epsilon(1e-15));
  CHECK(demand_residual(sys, o) < 1e-12);
}

TEST_CASE("alien price choice induces x_D = a - b(x_A + x_B + x_C) - p_D") {
  const MarketParams p = standard();
  const DemandSystem sys = build_demand_system(p);
  const std::array<double, 4> v{0.31, 0.27, 0.4, 1.1};
  const OutcomeProfile o = resolve_outcome(p, sys, Pattern::parse("QQQP"), v);
  CHECK(o.quantities(3) == doctest::Approx(2.0 - 0.5 * (0.31 + 0.27 + 0.4) - 1.1).epsilon(1e-14));
  CHECK(o.prices(3) == 1.1);
}

// Induced variables as printed for four firms, in firm order, as functions
// of the chosen strategy vector v.
using Printed = std::function<std::array<double, 4>(double a, double b, const Vector& v)>;

void check_coefficients(const char* pattern_text, const Printed& printed) {
  const Pattern pattern = Pattern::parse(pattern_text);
  for (double b : {0.2, 0.5, 0.8}) {
    const MarketParams p = make_params(2.0, b, {1.0, 1.0, 1.0, 1.0});
    const PatternMap map = build_pattern_map(build_demand_system(p), pattern);
    const auto induced = [&](const Vector& v) {
      std::array<double, 4> out{};
      const Vector x = map.quantities(v);
      const Vector pr = map.prices(v);
      for (int i = 0; i < 4; ++i) out[i] = pattern[i] == Variable::kQuantity ? pr(i) : x(i);
      return out;
    };
    const Vector zero = Vector::Zero(4);
    const auto c0 = induced(zero);
    const auto p0 = printed(p.a, b, zero);
    for (int i = 0; i < 4; ++i) CHECK(c0[i] == doctest::Approx(p0[i]).epsilon(1e-13));
    for (int j = 0; j < 4; ++j) {
      Vector e = zero;
      e(j) = 1.0;
      const auto cj = induced(e);
      const auto pj = printed(p.a, b, e);
      for (int i = 0; i < 4; ++i) {
        INFO(pattern_text, " b=", b, " firm ", i, " wrt ", j);
        CHECK(cj[i] - c0[i] == doctest::Approx(pj[i] - p0[i]).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("printed substitution formulas are reproduced coefficient by coefficient") {
  SUBCASE("QQQP") {
    check_coefficients("QQQP", [](double a, double b, const Vector& v) {
      const double xA = v(0), xB = v(1), xC = v(2), pD = v(3);
      const double bb = b * b;
      return std::array<double, 4>{
          (1 - b) * a + bb * xC - b * xC + bb * xB - b * xB + bb * xA - xA + b * pD,
          (1 - b) * a + bb * xC - b * xC + bb * xB - xB + bb * xA - b * xA + b * pD,
          (1 - b) * a + bb * xC - xC + bb * xB - b * xB + bb * xA - b * xA + b * pD,
          a - b * xC - b * xB - b * xA - pD};
    });
  }
  SUBCASE("PPPQ") {
    check_coefficients("PPPQ", [](double a, double b, const Vector& v) {
      const double pA = v(0), pB = v(1), pC = v(2), xD = v(3);
      const double bb = b * b;
      const double den = (1 - b) * (2 * b + 1);
      return std::array<double, 4>{
          ((1 - b) * a + bb * xD - b * xD + b * pC + b * pB - b * pA - pA) / den,
          ((1 - b) * a + bb * xD - b * xD + b * pC - b * pB - pB + b * pA) / den,
          ((1 - b) * a + bb * xD - b * xD - b * pC - pC + b * pB + b * pA) / den,
          ((1 - b) * a + 3 * bb * xD - 2 * b * xD - xD + b * pC + b * pB + b * pA) / (2 * b + 1)};
    });
  }
  SUBCASE("PPPP") {
    check_coefficients("PPPP", [](double a, double b, const Vector& v) {
      const double pA = v(0), pB = v(1), pC = v(2), pD = v(3);
      const double den = (1 - b) * (3 * b + 1);
      return std::array<double, 4>{
          ((1 - b) * a + b * pD + b * pC + b * pB - 2 * b * pA - pA) / den,
          ((1 - b) * a + b * pD + b * pC - 2 * b * pB - pB + b * pA) / den,
          ((1 - b) * a + b * pD - 2 * b * pC - pC + b * pB + b * pA) / den,
          ((1 - b) * a - 2 * b * pD - pD + b * pC + b * pB + b * pA) / den};
    });
  }
  SUBCASE("QQPP") {
    check_coefficients("QQPP", [](double a, double b, const Vector& v) {
      const double xA = v(0), xB = v(1), pC = v(2), pD = v(3);
      const double bb = b * b;
      return std::array<double, 4>{
          (bb * xB - b * xB + 2 * bb * xA - b * xA - xA + b * pD + b * pC - a * b + a) / (b + 1),
          (2 * bb * xB - b * xB - xB + bb * xA - b * xA + b * pD + b * pC - a * b + a) / (b + 1),
          (bb * xB - b * xB + bb * xA - b * xA + b * pD - pC - a * b + a) / ((1 - b) * (b + 1)),
          (bb * xB - b * xB + bb * xA - b * xA - pD + b * pC - a * b + a) / ((1 - b) * (b + 1))};
    });
  }
}

TEST_CASE("property: quantity -> price -> quantity round trip") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const MarketParams p = testing::random_params(rng);
    const DemandSystem sys = build_demand_system(p);
    const Vector x = testing::random_strategy(p, rng);
    CHECK((sys.quantities(sys.prices(x)) - x).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("property: resolution agrees with the brute-force elimination") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const MarketParams p = testing::random_params(rng);
    const DemandSystem sys = build_demand_system(p);
    const Pattern pattern = testing::random_pattern(p.n, rng);
    const Vector v = testing::random_strategy(p, rng);
    const OutcomeProfile o = resolve_outcome(p, build_pattern_map(sys, pattern), v);
    const oracle::Outcome ref = oracle::naive_outcome(pattern.str(), testing::to_std(v), p.a, p.b);
    for (int i = 0; i < p.n; ++i) {
      CHECK(o.quantities(i) == doctest::Approx(ref.x[i]).epsilon(1e-10));
      CHECK(o.prices(i) == doctest::Approx(ref.p[i]).epsilon(1e-10));
    }
    CHECK(demand_residual(sys, o) < 1e-10);
  }
}

TEST_CASE("property: one outcome encoded in any two patterns resolves identically") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const MarketParams p = testing::random_params(rng);
    const DemandSystem sys = build_demand_system(p);
    const Vector x = testing::random_strategy(p, rng);
    const OutcomeProfile truth = resolve_outcome(p, build_pattern_map(sys, Pattern::uniform(p.n, Variable::kQuantity)), x);
    const Pattern p1 = testing::random_pattern(p.n, rng);
    const Pattern p2 = testing::random_pattern(p.n, rng);
    const OutcomeProfile o1 =
        resolve_outcome(p, build_pattern_map(sys, p1), encode_strategy(p1, truth));
    const OutcomeProfile o2 =
        resolve_outcome(p, build_pattern_map(sys, p2), encode_strategy(p2, truth));
    CHECK((o1.quantities - o2.quantities).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((o1.prices - o2.prices).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((o1.quantities - truth.quantities).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("PPPQ reproduces a QQQQ outcome") {
  const MarketParams p = standard();
  const DemandSystem sys = build_demand_system(p);
  const std::array<double, 4> x{0.35, 0.33, 0.31, 0.22};
  const OutcomeProfile q = resolve_outcome(p, sys, Pattern::parse("QQQQ"), x);
  const Pattern mixed = Pattern::parse("PPPQ");
  const OutcomeProfile m = resolve_outcome(p, build_pattern_map(sys, mixed), encode_strategy(mixed, q));
  CHECK((m.quantities - q.quantities).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((m.absolute_profits - q.absolute_profits).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((m.relative_profits - q.relative_profits).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("property: relative profits of resolved outcomes sum to zero") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 300; ++trial) {
    const MarketParams p = testing::random_params(rng);
    const DemandSystem sys = build_demand_system(p);
    const Pattern pattern = testing::random_pattern(p.n, rng);
    const OutcomeProfile o =
        resolve_outcome(p, build_pattern_map(sys, pattern), testing::random_strategy(p, rng));
    CHECK(std::abs(o.relative_profits.sum()) < 1e-10);
  }
}

}  // namespace
}  // namespace relprofit
