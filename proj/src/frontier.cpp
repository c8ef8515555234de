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

#include "privfair/frontier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "privfair/error.hpp"

namespace privfair {
namespace {

void require_positive(double v, const char* what) {
  require(std::isfinite(v) && v > 0.0, ErrorCode::kInvalidArgument,
          std::string(what) + " must be finite and positive");
}

void validate_constants(const BoundConstants& consts) {
  require_positive(consts.c_utility, "c_utility");
  require_positive(consts.c_fairness, "c_fairness");
}

void validate_spec(const FeasibilitySpec& spec) {
  require(std::isfinite(spec.u0), ErrorCode::kInvalidArgument,
          "u0 must be finite");
  require(std::isfinite(spec.u_threshold), ErrorCode::kInvalidArgument,
          "u_threshold must be finite");
  require_positive(spec.f_target, "f_target");
  require(spec.d >= 1, ErrorCode::kInvalidArgument, "d must be at least 1");
  require(std::isfinite(spec.p) && spec.p > 0.0 && spec.p < 1.0,
          ErrorCode::kInvalidArgument, "p must lie in (0, 1)");
}

void validate_point(const TradeoffPoint& pt) {
  require_positive(pt.epsilon, "epsilon");
  require(std::isfinite(pt.utility), ErrorCode::kInvalidArgument,
          "utility must be finite");
  require(std::isfinite(pt.fairness_violation) && pt.fairness_violation >= 0.0,
          ErrorCode::kInvalidArgument,
          "fairness_violation must be finite and nonnegative");
  require(pt.n >= 1, ErrorCode::kInvalidArgument, "n must be at least 1");
  require(std::isfinite(pt.p) && pt.p > 0.0 && pt.p < 1.0,
          ErrorCode::kInvalidArgument, "p must lie in (0, 1)");
  require(pt.d >= 1, ErrorCode::kInvalidArgument, "d must be at least 1");
}

// Minimal set of (utility, violation) pairs from already-processed points at
// strictly smaller epsilon. Kept entries are pairwise incomparable, which
// makes the stored violation values ascend with utility; a point is covered
// iff the first entry at-or-above its utility has violation at or below its
// violation.
class Staircase {
 public:
  bool covers(double utility, double violation) const {
    auto it = entries_.lower_bound(utility);
    return it != entries_.end() && it->second <= violation;
  }

  void insert(double utility, double violation) {
    if (covers(utility, violation)) return;
    // Entries made redundant by the new pair sit just below it in utility
    // with a violation at or above the new one.
    auto it = entries_.upper_bound(utility);
    while (it != entries_.begin()) {
      auto prev = std::prev(it);
      if (prev->second < violation) break;
      it = entries_.erase(prev);
    }
    entries_.emplace(utility, violation);
  }

 private:
  std::map<double, double> entries_;
};

}  // namespace

double mse_lower_bound(double sigma2_theta, double n, SensitivityBound sens,
                       double epsilon) {
  require(std::isfinite(sigma2_theta) && sigma2_theta >= 0.0,
          ErrorCode::kInvalidArgument, "sigma2_theta must be nonnegative");
  require_positive(n, "n");
  validate_sensitivity(sens);
  require_positive(epsilon, "epsilon");
  return sigma2_theta / n + (sens.l1 * sens.l1) / (epsilon * epsilon * n);
}

double utility_bound(double u0, long d, double epsilon, double n,
                     BoundConstants consts) {
  require(std::isfinite(u0), ErrorCode::kInvalidArgument, "u0 must be finite");
  require(d >= 1, ErrorCode::kInvalidArgument, "d must be at least 1");
  require_positive(epsilon, "epsilon");
  require_positive(n, "n");
  validate_constants(consts);
  return u0 - consts.c_utility * static_cast<double>(d) / (epsilon * n);
}

double fairness_bound(double epsilon, double n, double p,
                      BoundConstants consts) {
  require_positive(epsilon, "epsilon");
  require_positive(n, "n");
  require(std::isfinite(p) && p > 0.0 && p <= 1.0, ErrorCode::kInvalidArgument,
          "p must lie in (0, 1]");
  validate_constants(consts);
  return consts.c_fairness / (epsilon * std::sqrt(n * p));
}

SeRatio se_ratio(double q, double n_p, double epsilon) {
  require(std::isfinite(q) && q > 0.0 && q < 1.0, ErrorCode::kInvalidArgument,
          "q must lie in (0, 1)");
  require_positive(n_p, "n_p");
  require_positive(epsilon, "epsilon");
  SeRatio r;
  r.sampling = std::sqrt(q * (1.0 - q) / n_p);
  r.dp_noise = std::sqrt(2.0) / (epsilon * n_p);
  r.ratio = r.dp_noise / r.sampling;
  return r;
}

double group_noise_se(double n_a, double epsilon) {
  require_positive(n_a, "n_a");
  require_positive(epsilon, "epsilon");
  return 1.0 / (epsilon * std::sqrt(n_a));
}

bool feasible(const FeasibilitySpec& spec, double epsilon, double n,
              BoundConstants consts) {
  validate_spec(spec);
  require_positive(epsilon, "epsilon");
  require_positive(n, "n");
  validate_constants(consts);
  return utility_bound(spec.u0, spec.d, epsilon, n, consts) > spec.u_threshold &&
         fairness_bound(epsilon, n, spec.p, consts) < spec.f_target;
}

double critical_sample_size(const FeasibilitySpec& spec, double epsilon,
                            BoundConstants consts) {
  validate_spec(spec);
  require_positive(epsilon, "epsilon");
  validate_constants(consts);
  require(spec.u0 > spec.u_threshold, ErrorCode::kInfeasible,
          "u0 must exceed u_threshold for any sample size to be feasible");
  double utility_clause = consts.c_utility * static_cast<double>(spec.d) /
                          (epsilon * (spec.u0 - spec.u_threshold));
  double fairness_clause = consts.c_fairness * consts.c_fairness /
                           (epsilon * epsilon * spec.p *
                            spec.f_target * spec.f_target);
  return std::max(utility_clause, fairness_clause);
}

bool dominates(const TradeoffPoint& a, const TradeoffPoint& b) {
  bool no_worse = a.epsilon <= b.epsilon && a.utility >= b.utility &&
                  a.fairness_violation <= b.fairness_violation;
  bool somewhere_better = a.epsilon < b.epsilon || a.utility > b.utility ||
                          a.fairness_violation < b.fairness_violation;
  return no_worse && somewhere_better;
}

std::vector<std::size_t> pareto_front_indices(
    const std::vector<TradeoffPoint>& points) {
  require(!points.empty(), ErrorCode::kInvalidArgument, "no points given");
  for (const TradeoffPoint& pt : points) validate_point(pt);

  std::vector<std::size_t> order(points.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return points[a].epsilon < points[b].epsilon;
  });

  std::vector<bool> dominated(points.size(), false);
  Staircase seen;  // points at strictly smaller epsilon

  std::size_t start = 0;
  while (start < order.size()) {
    // One batch of equal-epsilon points.
    std::size_t end = start;
    while (end < order.size() &&
           points[order[end]].epsilon == points[order[start]].epsilon) {
      ++end;
    }

    // Against smaller-epsilon points the epsilon coordinate is already
    // strictly better, so coverage alone decides domination.
    for (std::size_t i = start; i < end; ++i) {
      const TradeoffPoint& pt = points[order[i]];
      if (seen.covers(pt.utility, pt.fairness_violation)) {
        dominated[order[i]] = true;
      }
    }

    // Within the batch epsilon ties, so domination needs a strict edge in
    // utility or violation: a 2D skyline sweep in utility-descending order.
    std::vector<std::size_t> batch(order.begin() + start, order.begin() + end);
    std::sort(batch.begin(), batch.end(), [&](std::size_t a, std::size_t b) {
      if (points[a].utility != points[b].utility)
        return points[a].utility > points[b].utility;
      return points[a].fairness_violation < points[b].fairness_violation;
    });
    double best_violation_above = std::numeric_limits<double>::infinity();
    std::size_t i = 0;
    while (i < batch.size()) {
      std::size_t j = i;
      double run_utility = points[batch[i]].utility;
      double run_min_violation = points[batch[i]].fairness_violation;
      while (j < batch.size() && points[batch[j]].utility == run_utility) {
        const TradeoffPoint& pt = points[batch[j]];
        if (best_violation_above <= pt.fairness_violation ||
            run_min_violation < pt.fairness_violation) {
          dominated[batch[j]] = true;
        }
        ++j;
      }
      best_violation_above = std::min(best_violation_above, run_min_violation);
      i = j;
    }

    for (std::size_t k = start; k < end; ++k) {
      const TradeoffPoint& pt = points[order[k]];
      seen.insert(pt.utility, pt.fairness_violation);
    }
    start = end;
  }

  std::vector<std::size_t> front;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!dominated[i]) front.push_back(i);
  }
  return front;
}

std::vector<TradeoffPoint> pareto_front(
    const std::vector<TradeoffPoint>& points) {
  std::vector<TradeoffPoint> front;
  for (std::size_t i : pareto_front_indices(points)) front.push_back(points[i]);
  return front;
}

}  // namespace privfair
