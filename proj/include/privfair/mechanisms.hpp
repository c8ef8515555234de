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
// Randomized release mechanisms for scalar queries. Every mechanism draws all
// of its randomness from a caller-supplied Rng, so identical seeds and inputs
// reproduce identical outputs.

#ifndef PRIVFAIR_MECHANISMS_HPP_
#define PRIVFAIR_MECHANISMS_HPP_

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "privfair/random.hpp"

namespace privfair {

// An (epsilon, delta) privacy guarantee. delta = 0 is the pure-epsilon case.
struct PrivacyBudget {
  double epsilon = 0.0;
  double delta = 0.0;
};

// Worst-case L1 change of the query value when one record is added to or
// removed from the data.
struct SensitivityBound {
  double l1 = 0.0;
};

// Throw InvalidArgument unless epsilon > 0 and 0 <= delta < 1.
void validate_budget(const PrivacyBudget& budget);

// Throw InvalidArgument unless l1 >= 0 and finite.
void validate_sensitivity(const SensitivityBound& sens);

enum class MechanismKind {
  kLaplace,
  kGaussian,
  kSampleAggregate,
};

const char* mechanism_kind_name(MechanismKind kind);

// A privatized scalar release together with the budget it consumed.
struct NoisyValue {
  double value = 0.0;
  MechanismKind mechanism = MechanismKind::kLaplace;
  PrivacyBudget charged;
};

// Density of the zero-centered Laplace distribution with the given scale:
// f(eta) = exp(-|eta| / scale) / (2 * scale). Requires scale > 0.
double laplace_density(double eta, double scale);

// One draw from the zero-centered Laplace distribution via the inverse CDF of
// a single uniform. Exposed so tests can target the sampler directly.
double sample_laplace(double scale, Rng& rng);

// Releases true_answer + Laplace(sens.l1 / epsilon). sens.l1 = 0 degenerates
// to the exact answer. Charges (epsilon, 0).
NoisyValue laplace_mechanism(double true_answer, SensitivityBound sens,
                             double epsilon, Rng& rng);

// Noise standard deviation for the Gaussian mechanism:
// sigma = sqrt(2 * ln(1.25 / delta)) * sens.l1 / epsilon.
// Requires epsilon > 0 and delta in (0, 1). The closed form is the standard
// calibration; it is conventionally quoted for moderate epsilon (<= 1), and
// callers wanting tighter noise at large epsilon need a different analysis.
double gaussian_sigma(double epsilon, double delta, SensitivityBound sens);

// Releases true_answer + Normal(0, gaussian_sigma(...)^2). Requires
// budget.delta > 0. sens.l1 = 0 degenerates to the exact answer. Charges
// (budget.epsilon, budget.delta).
NoisyValue gaussian_mechanism(double true_answer, SensitivityBound sens,
                              PrivacyBudget budget, Rng& rng);

// A discrete choice with a real-valued utility score.
struct Candidate {
  std::string id;
  double utility = 0.0;
};

// Selects one candidate with probability proportional to
// exp(epsilon * utility / (2 * utility_sensitivity)). Sampling inverts the
// cumulative weights of exp-shifted utilities (shifted by the maximum for
// overflow safety), so candidates with equal utility are tied only through
// the uniform draw, never by index order. Requires a nonempty candidate set,
// finite utilities, utility_sensitivity > 0, epsilon > 0.
Candidate exponential_mechanism(const std::vector<Candidate>& candidates,
                                double utility_sensitivity, double epsilon,
                                Rng& rng);

struct SparseVectorResult {
  // flags[i] answers "was query i reported above threshold?" for every query
  // that was processed; processing halts right after the max_reports-th
  // positive, so flags may be shorter than the query stream.
  std::vector<bool> flags;
  PrivacyBudget charged;
};

// Above-threshold scan over a stream of query answers, each with sensitivity
// 1. The threshold is noised once with Laplace(2 / epsilon); every answer is
// noised with Laplace(4 * max_reports / epsilon); the scan stops after
// max_reports positives. Total charge is epsilon for the whole stream.
SparseVectorResult sparse_vector(const std::vector<double>& answers,
                                 double threshold, double epsilon,
                                 int max_reports, Rng& rng);

using BlockFn = std::function<double(std::span<const double>)>;

// Splits records into block_count contiguous disjoint blocks (sizes differing
// by at most one), applies block_fn to each, clamps the block outputs into
// [lo, hi], averages them, and adds Laplace((hi - lo) / (block_count *
// epsilon)) noise: one record influences one block, and that block moves the
// clamped average by at most (hi - lo) / block_count. Charges (epsilon, 0).
// Requires 1 <= block_count <= records.size() and lo < hi.
NoisyValue sample_and_aggregate(std::span<const double> records,
                                int block_count, const BlockFn& block_fn,
                                double lo, double hi, double epsilon, Rng& rng);

}  // namespace privfair

#endif  // PRIVFAIR_MECHANISMS_HPP_
