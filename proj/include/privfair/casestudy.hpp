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
// Synthetic two-group classification pipeline: one majority and one minority
// group, logistic regression trained four ways (plain, fairness-penalized,
// privately, privately with the penalty), evaluated per group. The pipeline
// exists to measure directions, not benchmark numbers: how privacy noise and
// the fairness penalty move per-group accuracy and the parity gaps.

#ifndef PRIVFAIR_CASESTUDY_HPP_
#define PRIVFAIR_CASESTUDY_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "privfair/accountant.hpp"
#include "privfair/dataset.hpp"
#include "privfair/random.hpp"

namespace privfair {

// Two-group synthetic population. Group g's features are class-conditional
// spherical unit Gaussians whose means sit class_separation apart along a
// direction owned by that group: group 0's signal lives in the first half of
// the coordinates, group 1's in the second half. A shared linear model must
// therefore spend separate weight mass on each group's direction, and the
// minority direction is learned from n1 examples only. That is the size
// asymmetry the privacy noise later amplifies.
struct SyntheticSpec {
  long n0 = 5000;
  long n1 = 500;
  double base_rate0 = 0.30;
  double base_rate1 = 0.45;
  long d = 4;
  double class_separation = 2.4;
};

void validate_synthetic_spec(const SyntheticSpec& spec);

// Knobs shared by all training variants. target_epsilon unset means no
// privacy noise; batch_size unset means full-batch gradient descent.
struct TrainConfig {
  double learning_rate = 0.5;
  long epochs = 60;
  std::optional<long> batch_size;
  double clip_norm = 1.0;
  std::optional<double> target_epsilon;
  double target_delta = 1e-5;
  double fairness_lambda = 0.0;
  std::uint64_t seed = 42;
};

// Logistic model over d features; weights holds the d coefficients followed
// by the bias.
struct Model {
  std::vector<double> weights;

  double score(std::span<const double> features) const;

  // Scores at or above the threshold classify positive. The tie rule (exact
  // threshold counts as positive) is part of the reproducibility contract.
  int predict(std::span<const double> features, double threshold = 0.5) const;
};

// Facts a caller cannot recover from the returned model: how many gradient
// steps ran, the solved per-step noise multiplier, and the largest
// per-example gradient norm that survived clipping (must never exceed
// clip_norm).
struct TrainStats {
  long steps = 0;
  double noise_multiplier = 0.0;
  double max_clipped_norm = 0.0;
};

// Draws n0 + n1 records (group 0 block first). Labels are Bernoulli at the
// group's base rate; features follow the group's class-conditional Gaussians.
LabeledDataset generate_synthetic(const SyntheticSpec& spec, Rng& rng);

// Mean penalized logistic objective at the given weights over the whole
// dataset, writing the exact gradient into grad_out (size dimension + 1).
// The penalty is fairness_lambda times the squared gap between the group
// means of the predicted probabilities; records of a group absent from the
// data contribute no penalty. Exposed so tests can difference the objective
// numerically against the gradient used in training.
double objective_and_gradient(const LabeledDataset& data,
                              std::span<const double> weights,
                              double fairness_lambda,
                              std::span<double> grad_out);

// Plain mini-batch gradient descent on the mean logistic loss. Requires
// target_epsilon unset and fairness_lambda = 0. Deterministic given
// config.seed (which drives the batch shuffle).
Model train_logistic(const LabeledDataset& data, const TrainConfig& config,
                     TrainStats* stats = nullptr);

// As train_logistic plus the squared-gap fairness penalty; fairness_lambda
// may be any non-negative value (0 degenerates to train_logistic).
Model train_fair(const LabeledDataset& data, const TrainConfig& config,
                 TrainStats* stats = nullptr);

// Differentially private training: per-example gradients clipped to
// clip_norm, averaged, then perturbed with Gaussian noise of standard
// deviation clip_norm * noise_multiplier / batch. The multiplier is solved
// from an even split of the budget: each of the S steps runs the Gaussian
// mechanism at (target_epsilon / S, target_delta / S) and charges the ledger
// accordingly, so after training the ledger holds exactly target_epsilon
// more spend (the final step charges the remainder, absorbing rounding).
// Requires target_epsilon set and fairness_lambda = 0. Noise is drawn from
// rng; the shuffle still follows config.seed, so shrinking the noise
// recovers the train_logistic trajectory.
Model train_dp(const LabeledDataset& data, const TrainConfig& config,
               BudgetLedger& ledger, Rng& rng, TrainStats* stats = nullptr);

// train_dp with the fairness penalty folded into each per-example gradient
// before clipping (the penalty's exact per-example decomposition, so the
// unclipped batch mean equals objective_and_gradient's gradient).
// fairness_lambda may be 0, which reproduces train_dp bit for bit.
Model train_dp_fair(const LabeledDataset& data, const TrainConfig& config,
                    BudgetLedger& ledger, Rng& rng,
                    TrainStats* stats = nullptr);

enum class FairnessTarget {
  kDemographicParity,
  kEqualizedOdds,
};

const char* fairness_target_name(FairnessTarget target);

struct GroupThresholds {
  double t0 = 0.5;
  double t1 = 0.5;
  double gap = 0.0;       // achieved value of the chosen metric
  double accuracy = 0.0;  // overall accuracy at (t0, t1)
};

// Searches one decision threshold per group over all midpoints between
// consecutive distinct scores within the group, plus {0, 0.5, 1}. Minimizes
// the chosen gap; among minimizers takes maximal overall accuracy; remaining
// ties resolve to the lexicographically smallest (t0, t1). Pure
// post-processing: consumes no privacy budget.
GroupThresholds threshold_postprocess(const std::vector<double>& scores,
                                      const LabeledDataset& data,
                                      FairnessTarget target);

// Per-group error profile of a model on a dataset.
struct EvalReport {
  double accuracy0 = 0.0;
  double accuracy1 = 0.0;
  double fpr0 = 0.0;
  double fpr1 = 0.0;
  double tpr0 = 0.0;
  double tpr1 = 0.0;
  double demographic_parity_gap = 0.0;
  double equalized_odds_gap = 0.0;
  double epsilon_spent = 0.0;
};

// Thresholds the model's scores (at 0.5, or per-group when thresholds are
// given), computes per-group rates and both gaps, and attaches the ledger's
// spent epsilon.
EvalReport evaluate(const Model& model, const LabeledDataset& data,
                    const BudgetLedger& ledger,
                    const std::optional<GroupThresholds>& thresholds = {});

nlohmann::ordered_json eval_report_json(const EvalReport& report);

enum class Variant {
  kPlain,
  kFair,
  kDp,
  kDpFair,
};

const char* variant_name(Variant variant);
Variant variant_from_name(const std::string& name);

struct CasestudyResult {
  Model model;
  EvalReport report;
  TrainStats stats;
};

// End-to-end run of one variant: generate data from config.seed, train,
// evaluate at threshold 0.5. The DP variants require config.target_epsilon;
// the fair variants use config.fairness_lambda as given. Bit-reproducible
// from (spec, config, variant).
CasestudyResult run_casestudy(const SyntheticSpec& spec,
                              const TrainConfig& config, Variant variant);

// Runs every (seed, variant) pair (config.seed is overridden per row) and
// emits CSV with header seed,variant,epsilon,acc0,acc1,fpr0,fpr1,dp_gap,
// eo_gap, where epsilon is the spent budget (0 for the non-private
// variants). Seeds vary in the outer loop.
std::string seed_sweep_csv(const SyntheticSpec& spec,
                           const TrainConfig& config,
                           const std::vector<Variant>& variants,
                           const std::vector<std::uint64_t>& seeds);

}  // namespace privfair

#endif  // PRIVFAIR_CASESTUDY_HPP_
