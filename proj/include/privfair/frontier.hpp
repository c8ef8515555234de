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
//
// Closed-form privacy/utility/fairness tradeoff bounds and the Pareto
// structure they induce. Sample sizes enter these formulas as positive reals:
// callers may evaluate the bounds between integer dataset sizes (e.g. at a
// fractional critical size) even though concrete datasets have integer n.

#ifndef PRIVFAIR_FRONTIER_HPP_
#define PRIVFAIR_FRONTIER_HPP_

#include <cstddef>
#include <vector>

#include "privfair/mechanisms.hpp"

namespace privfair {

// Leading constants for the utility and fairness bounds. The asymptotic
// statements leave them unspecified; both default to 1.
struct BoundConstants {
  double c_utility = 1.0;
  double c_fairness = 1.0;
};

// Problem description for feasibility questions: can a model of dimension d,
// trained at privacy level epsilon on data with minority fraction p, exceed
// utility u_threshold while keeping fairness violation below f_target, given
// non-private utility u0?
struct FeasibilitySpec {
  double u0 = 0.0;
  double u_threshold = 0.5;
  double f_target = 0.0;
  long d = 1;
  double p = 0.0;
};

// One swept configuration and its achieved (or bounded) quality.
struct TradeoffPoint {
  double epsilon = 0.0;
  double utility = 0.0;
  double fairness_violation = 0.0;
  long n = 1;
  double p = 0.0;
  long d = 1;
};

// Minimax mean-squared-error floor for estimating a population parameter with
// prior variance sigma2_theta from n records under epsilon-DP with the given
// sensitivity: sigma2_theta / n + sens.l1^2 / (epsilon^2 * n). The first term
// is the sampling floor, the second the privacy floor.
double mse_lower_bound(double sigma2_theta, double n, SensitivityBound sens,
                       double epsilon);

// Achievable-utility ceiling u0 - c_utility * d / (epsilon * n).
double utility_bound(double u0, long d, double epsilon, double n,
                     BoundConstants consts = {});

// Fairness-violation floor c_fairness / (epsilon * sqrt(n * p)) induced by
// noise on the minority slice of the data.
double fairness_bound(double epsilon, double n, double p,
                      BoundConstants consts = {});

struct SeRatio {
  double sampling = 0.0;  // sqrt(q * (1 - q) / n_p)
  double dp_noise = 0.0;  // sqrt(2) / (epsilon * n_p)
  double ratio = 0.0;     // dp_noise / sampling
};

// Standard error of a subpopulation proportion estimate (true rate q over
// n_p records) versus the standard error added by Laplace noise at epsilon.
SeRatio se_ratio(double q, double n_p, double epsilon);

// Standard error 1 / (epsilon * sqrt(n_a)) of a noised group statistic over
// n_a records: smaller groups see proportionally larger relative noise.
double group_noise_se(double n_a, double epsilon);

// Both clauses strict: utility_bound(...) > u_threshold and
// fairness_bound(...) < f_target.
bool feasible(const FeasibilitySpec& spec, double epsilon, double n,
              BoundConstants consts = {});

// Smallest n at which both feasibility clauses hold, i.e. the larger of
//   c_utility * d / (epsilon * (u0 - u_threshold))        (utility clause)
//   c_fairness^2 / (epsilon^2 * p * f_target^2)           (fairness clause).
// Throws Infeasible when u0 <= u_threshold (no n can satisfy the utility
// clause). feasible(spec, epsilon, n) is false at the returned value and
// true strictly beyond it.
double critical_sample_size(const FeasibilitySpec& spec, double epsilon,
                            BoundConstants consts = {});

// a dominates b when a.epsilon <= b.epsilon, a.utility >= b.utility and
// a.fairness_violation <= b.fairness_violation, with at least one strict.
bool dominates(const TradeoffPoint& a, const TradeoffPoint& b);

// Indices of the nondominated points, in input order. Exact duplicates do
// not dominate each other, so duplicated optima are all retained. Implemented
// as an epsilon-sorted sweep over a utility/violation staircase rather than
// all-pairs comparison.
std::vector<std::size_t> pareto_front_indices(
    const std::vector<TradeoffPoint>& points);

// The nondominated points themselves, in input order.
std::vector<TradeoffPoint> pareto_front(
    const std::vector<TradeoffPoint>& points);

}  // namespace privfair

#endif  // PRIVFAIR_FRONTIER_HPP_
