// Copyright 2026 The privfair Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>
#include <vector>

#include <doctest.h>

#include "privfair/error.hpp"
#include "privfair/frontier.hpp"
#include "privfair/random.hpp"
#include "support/oracles.hpp"

namespace privfair {
namespace {

TradeoffPoint make_point(double epsilon, double utility, double violation) {
  TradeoffPoint pt;
  pt.epsilon = epsilon;
  pt.utility = utility;
  pt.fairness_violation = violation;
  pt.n = 100;
  pt.p = 0.5;
  pt.d = 1;
  return pt;
}

TEST_SUITE("frontier") {

TEST_CASE("mse lower bound decomposes into sampling and noise terms") {
  // sigma^2/n + l1^2/(eps^2 n) with easy numbers: 4/100 + 9/(4*100).
  CHECK(mse_lower_bound(4.0, 100.0, {3.0}, 2.0) ==
        doctest::Approx(0.04 + 0.0225).epsilon(1e-15));
  // Noise term vanishes as epsilon grows.
  CHECK(mse_lower_bound(4.0, 100.0, {3.0}, 1e9) ==
        doctest::Approx(0.04).epsilon(1e-9));
  CHECK_THROWS_AS(mse_lower_bound(-1.0, 100.0, {1.0}, 1.0), Error);
}

TEST_CASE("group noise standard error reproduces the rounded figures") {
  CHECK(group_noise_se(5000.0, 1.0) ==
        doctest::Approx(0.014142135623730951).epsilon(1e-15));
  CHECK(group_noise_se(500.0, 1.0) ==
        doctest::Approx(0.04472135954999579).epsilon(1e-15));
  const double ratio = group_noise_se(500.0, 1.0) / group_noise_se(5000.0, 1.0);
  CHECK(ratio == doctest::Approx(3.1622776601683795).epsilon(1e-15));
}

TEST_CASE("fairness bound scales as the inverse square root of group size") {
  // 100 vs 10000 records at the same epsilon: exactly a factor 10.
  const double small = fairness_bound(1.0, 100.0, 0.1, {});
  const double large = fairness_bound(1.0, 10000.0, 0.1, {});
  CHECK(small / large == 10.0);
}

TEST_CASE("se ratio matches the closed forms") {
  const SeRatio r = se_ratio(0.25, 400.0, 0.5);
  CHECK(r.sampling == doctest::Approx(std::sqrt(0.25 * 0.75 / 400.0)));
  CHECK(r.dp_noise == doctest::Approx(std::sqrt(2.0) / (0.5 * 400.0)));
  CHECK(r.ratio == doctest::Approx(r.dp_noise / r.sampling));
  CHECK_THROWS_AS(se_ratio(0.0, 400.0, 0.5), Error);
  CHECK_THROWS_AS(se_ratio(1.0, 400.0, 0.5), Error);
}

TEST_CASE("utility bound approaches u0 with scale and privacy budget") {
  const double tight = utility_bound(0.9, 10, 1.0, 100.0, {});
  const double looser = utility_bound(0.9, 10, 1.0, 10000.0, {});
  CHECK(tight == doctest::Approx(0.9 - 10.0 / 100.0));
  CHECK(looser == doctest::Approx(0.9 - 10.0 / 10000.0));
  CHECK(looser > tight);
  CHECK(utility_bound(0.9, 10, 2.0, 100.0, {}) > tight);
}

TEST_CASE("critical sample size on the fairness-dominated example") {
  FeasibilitySpec spec;
  spec.u0 = 1.5;
  spec.f_target = 0.05;
  spec.d = 1;
  spec.p = 0.1;
  // max(1/(1*1), 1/(0.1*0.0025)) = max(1, 4000).
  CHECK(critical_sample_size(spec, 1.0, {}) ==
        doctest::Approx(4000.0).epsilon(1e-9));
}

TEST_CASE("critical sample size on the utility-dominated example") {
  FeasibilitySpec spec;
  spec.u0 = 0.6;
  spec.f_target = 1.0;
  spec.d = 1000000;
  spec.p = 0.5;
  // max(10^6/0.1, 2) = 10^7.
  CHECK(critical_sample_size(spec, 1.0, {}) ==
        doctest::Approx(1e7).epsilon(1e-9));
}

TEST_CASE("critical sample size is infeasible when u0 cannot clear the bar") {
  FeasibilitySpec spec;
  spec.u0 = 0.4;
  spec.f_target = 0.1;
  spec.d = 1;
  spec.p = 0.5;
  try {
    critical_sample_size(spec, 1.0, {});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInfeasible);
  }
}

TEST_CASE("critical sample size strictly decreases in epsilon, p, f_target") {
  FeasibilitySpec spec;
  spec.u0 = 1.0;
  spec.f_target = 0.05;
  spec.d = 3;
  spec.p = 0.2;
  const double base = critical_sample_size(spec, 1.0, {});
  CHECK(critical_sample_size(spec, 2.0, {}) < base);
  FeasibilitySpec more_p = spec;
  more_p.p = 0.4;
  CHECK(critical_sample_size(more_p, 1.0, {}) < base);
  FeasibilitySpec looser = spec;
  looser.f_target = 0.1;
  CHECK(critical_sample_size(looser, 1.0, {}) < base);
}

TEST_CASE("feasibility flips across the critical sample size") {
  Rng rng(2024);
  for (int i = 0; i < 200; ++i) {
    FeasibilitySpec spec;
    spec.u_threshold = 0.5;
    spec.u0 = 0.5 + 0.05 + rng.uniform() * 2.0;
    spec.f_target = 0.01 + rng.uniform() * 0.3;
    spec.d = 1 + static_cast<long>(rng.uniform() * 50.0);
    spec.p = 0.05 + rng.uniform() * 0.9;
    if (spec.p >= 1.0) spec.p = 0.95;
    const double epsilon = 0.1 + rng.uniform() * 3.0;
    const double n_star = critical_sample_size(spec, epsilon, {});
    CHECK_FALSE(feasible(spec, epsilon, n_star * (1.0 - 1e-3), {}));
    CHECK(feasible(spec, epsilon, n_star * (1.0 + 1e-3), {}));
  }
}

TEST_CASE("dominates requires no-worse everywhere and better somewhere") {
  const TradeoffPoint a = make_point(1.0, 0.8, 0.1);
  CHECK_FALSE(dominates(a, a));
  CHECK(dominates(a, make_point(1.0, 0.7, 0.1)));
  CHECK(dominates(a, make_point(2.0, 0.8, 0.1)));
  CHECK(dominates(a, make_point(1.0, 0.8, 0.2)));
  // Trade-offs in opposite directions do not dominate.
  CHECK_FALSE(dominates(a, make_point(0.5, 0.7, 0.1)));
  CHECK_FALSE(dominates(make_point(0.5, 0.7, 0.1), a));
}

TEST_CASE("pareto front keeps duplicates and preserves input order") {
  std::vector<TradeoffPoint> points;
  points.push_back(make_point(2.0, 0.9, 0.2));    // kept: best utility
  points.push_back(make_point(0.5, 0.4, 0.4));    // kept: lowest epsilon
  points.push_back(make_point(2.0, 0.8, 0.3));    // dominated by [0]
  points.push_back(make_point(2.0, 0.9, 0.2));    // duplicate of [0], kept
  points.push_back(make_point(1.0, 0.7, 0.1));    // kept
  points.push_back(make_point(2.0, 0.85, 0.05));  // kept: best violation at 2.0
  points.push_back(make_point(1.5, 0.7, 0.1));    // dominated by [4]
  const std::vector<std::size_t> front = pareto_front_indices(points);
  CHECK(front == std::vector<std::size_t>{0, 1, 3, 4, 5});

  const std::vector<TradeoffPoint> kept = pareto_front(points);
  REQUIRE(kept.size() == 5);
  CHECK(kept[0].utility == 0.9);
  CHECK(kept[1].utility == 0.4);
  CHECK(kept[4].fairness_violation == 0.05);
}

TEST_CASE("a single point is its own front") {
  const std::vector<TradeoffPoint> one = {make_point(1.0, 0.5, 0.5)};
  CHECK(pareto_front_indices(one) == std::vector<std::size_t>{0});
  CHECK_THROWS_AS(pareto_front_indices({}), Error);
}

TEST_CASE("points with out-of-range fields are rejected") {
  TradeoffPoint bad = make_point(0.0, 0.5, 0.1);
  CHECK_THROWS_AS(pareto_front_indices({bad}), Error);
  bad = make_point(1.0, 0.5, -0.1);
  CHECK_THROWS_AS(pareto_front_indices({bad}), Error);
  bad = make_point(1.0, 0.5, 0.1);
  bad.p = 1.0;
  CHECK_THROWS_AS(pareto_front_indices({bad}), Error);
  bad = make_point(1.0, 0.5, 0.1);
  bad.n = 0;
  CHECK_THROWS_AS(pareto_front_indices({bad}), Error);
}

TEST_CASE("pareto front matches the brute-force oracle on random instances") {
  Rng rng(515);
  for (int instance = 0; instance < 30; ++instance) {
    const int count = 1 + static_cast<int>(rng.uniform() * 80.0);
    std::vector<TradeoffPoint> points;
    points.reserve(count);
    for (int i = 0; i < count; ++i) {
      // A small value grid makes exact ties and duplicates common.
      const double eps = 0.5 + 0.5 * static_cast<int>(rng.uniform() * 4.0);
      const double util = 0.1 * static_cast<int>(rng.uniform() * 10.0);
      const double viol = 0.1 * static_cast<int>(rng.uniform() * 5.0);
      points.push_back(make_point(eps, util, viol));
    }
    CHECK(pareto_front_indices(points) ==
          testing::brute_force_pareto(points));
  }
}

}  // TEST_SUITE

}  // namespace
}  // namespace privfair
