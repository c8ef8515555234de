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

#include "privfair/mechanisms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "privfair/error.hpp"

namespace privfair {
namespace {

void require_finite(double v, const char* what) {
  require(std::isfinite(v), ErrorCode::kInvalidArgument,
          std::string(what) + " must be finite");
}

void require_positive(double v, const char* what) {
  require_finite(v, what);
  require(v > 0.0, ErrorCode::kInvalidArgument,
          std::string(what) + " must be positive");
}

}  // namespace

void validate_budget(const PrivacyBudget& budget) {
  require_positive(budget.epsilon, "epsilon");
  require_finite(budget.delta, "delta");
  require(budget.delta >= 0.0 && budget.delta < 1.0, ErrorCode::kInvalidArgument,
          "delta must lie in [0, 1)");
}

void validate_sensitivity(const SensitivityBound& sens) {
  require_finite(sens.l1, "sensitivity");
  require(sens.l1 >= 0.0, ErrorCode::kInvalidArgument,
          "sensitivity must be nonnegative");
}

const char* mechanism_kind_name(MechanismKind kind) {
  switch (kind) {
    case MechanismKind::kLaplace:
      return "laplace";
    case MechanismKind::kGaussian:
      return "gaussian";
    case MechanismKind::kSampleAggregate:
      return "sample_aggregate";
  }
  return "unknown";
}

double laplace_density(double eta, double scale) {
  require_positive(scale, "scale");
  require_finite(eta, "eta");
  return std::exp(-std::abs(eta) / scale) / (2.0 * scale);
}

double sample_laplace(double scale, Rng& rng) {
  require_positive(scale, "scale");
  // Inverse CDF of one uniform on (0, 1): an open interval keeps both log
  // arguments strictly positive.
  double u = rng.uniform_open();
  if (u < 0.5) return scale * std::log(2.0 * u);
  return -scale * std::log(2.0 * (1.0 - u));
}

NoisyValue laplace_mechanism(double true_answer, SensitivityBound sens,
                             double epsilon, Rng& rng) {
  require_finite(true_answer, "true_answer");
  validate_sensitivity(sens);
  require_positive(epsilon, "epsilon");
  double value = true_answer;
  if (sens.l1 > 0.0) value += sample_laplace(sens.l1 / epsilon, rng);
  return {value, MechanismKind::kLaplace, {epsilon, 0.0}};
}

double gaussian_sigma(double epsilon, double delta, SensitivityBound sens) {
  require_positive(epsilon, "epsilon");
  require_finite(delta, "delta");
  require(delta > 0.0 && delta < 1.0, ErrorCode::kInvalidArgument,
          "delta must lie in (0, 1)");
  validate_sensitivity(sens);
  return std::sqrt(2.0 * std::log(1.25 / delta)) * sens.l1 / epsilon;
}

NoisyValue gaussian_mechanism(double true_answer, SensitivityBound sens,
                              PrivacyBudget budget, Rng& rng) {
  require_finite(true_answer, "true_answer");
  validate_budget(budget);
  require(budget.delta > 0.0, ErrorCode::kInvalidArgument,
          "gaussian mechanism requires delta > 0");
  double sigma = gaussian_sigma(budget.epsilon, budget.delta, sens);
  double value = true_answer;
  if (sigma > 0.0) value += sigma * rng.gaussian();
  return {value, MechanismKind::kGaussian, budget};
}

Candidate exponential_mechanism(const std::vector<Candidate>& candidates,
                                double utility_sensitivity, double epsilon,
                                Rng& rng) {
  require(!candidates.empty(), ErrorCode::kInvalidArgument,
          "candidate set is empty");
  require_positive(utility_sensitivity, "utility_sensitivity");
  require_positive(epsilon, "epsilon");

  double max_utility = -std::numeric_limits<double>::infinity();
  for (const Candidate& c : candidates) {
    require_finite(c.utility, "utility");
    max_utility = std::max(max_utility, c.utility);
  }

  // Weights are shifted by the maximum utility so every exponent is <= 0;
  // this changes all weights by a common factor only.
  std::vector<double> cumulative(candidates.size());
  double total = 0.0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    total += std::exp(epsilon * (candidates[i].utility - max_utility) /
                      (2.0 * utility_sensitivity));
    cumulative[i] = total;
  }

  double x = rng.uniform() * total;
  for (std::size_t i = 0; i < cumulative.size(); ++i) {
    if (x < cumulative[i]) return candidates[i];
  }
  return candidates.back();
}

SparseVectorResult sparse_vector(const std::vector<double>& answers,
                                 double threshold, double epsilon,
                                 int max_reports, Rng& rng) {
  require_finite(threshold, "threshold");
  require_positive(epsilon, "epsilon");
  require(max_reports >= 1, ErrorCode::kInvalidArgument,
          "max_reports must be at least 1");
  for (double a : answers) require_finite(a, "answer");

  double noisy_threshold = threshold + sample_laplace(2.0 / epsilon, rng);
  double query_scale = 4.0 * static_cast<double>(max_reports) / epsilon;

  SparseVectorResult result;
  result.charged = {epsilon, 0.0};
  int reported = 0;
  for (double answer : answers) {
    bool above = answer + sample_laplace(query_scale, rng) >= noisy_threshold;
    result.flags.push_back(above);
    if (above && ++reported == max_reports) break;
  }
  return result;
}

NoisyValue sample_and_aggregate(std::span<const double> records,
                                int block_count, const BlockFn& block_fn,
                                double lo, double hi, double epsilon,
                                Rng& rng) {
  require(block_count >= 1, ErrorCode::kInvalidArgument,
          "block_count must be at least 1");
  require(static_cast<std::size_t>(block_count) <= records.size(),
          ErrorCode::kInvalidArgument,
          "block_count exceeds the number of records");
  require_finite(lo, "lo");
  require_finite(hi, "hi");
  require(lo < hi, ErrorCode::kInvalidArgument, "requires lo < hi");
  require_positive(epsilon, "epsilon");
  require(block_fn != nullptr, ErrorCode::kInvalidArgument,
          "block_fn must be callable");

  // Block i covers [i*n/k, (i+1)*n/k): contiguous, disjoint, sizes within one.
  std::size_t n = records.size();
  std::size_t k = static_cast<std::size_t>(block_count);
  double sum = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t begin = i * n / k;
    std::size_t end = (i + 1) * n / k;
    double out = block_fn(records.subspan(begin, end - begin));
    require(!std::isnan(out), ErrorCode::kInvalidArgument,
            "block_fn produced NaN");
    sum += std::clamp(out, lo, hi);
  }
  double average = sum / static_cast<double>(k);
  double scale = (hi - lo) / (static_cast<double>(k) * epsilon);
  double value = average + sample_laplace(scale, rng);
  return {value, MechanismKind::kSampleAggregate, {epsilon, 0.0}};
}

}  // namespace privfair
