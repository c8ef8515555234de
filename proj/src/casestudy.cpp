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

#include "privfair/casestudy.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <limits>
#include <numeric>
#include <utility>

#include "privfair/error.hpp"
#include "privfair/fairness.hpp"
#include "privfair/mechanisms.hpp"

namespace privfair {

namespace {

double sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

// log(1 + exp(z)) without overflow for large |z|.
double softplus(double z) {
  if (z > 0.0) return z + std::log1p(std::exp(-z));
  return std::log1p(std::exp(z));
}

void validate_train_config(const TrainConfig& config, std::size_t n) {
  require(std::isfinite(config.learning_rate) && config.learning_rate > 0.0,
          ErrorCode::kInvalidArgument, "learning_rate must be > 0");
  require(config.epochs >= 1, ErrorCode::kInvalidArgument,
          "epochs must be >= 1");
  require(std::isfinite(config.clip_norm) && config.clip_norm >= 0.0,
          ErrorCode::kInvalidArgument, "clip_norm must be >= 0");
  require(std::isfinite(config.fairness_lambda) &&
              config.fairness_lambda >= 0.0,
          ErrorCode::kInvalidArgument, "fairness_lambda must be >= 0");
  if (config.batch_size) {
    require(*config.batch_size >= 1 &&
                static_cast<std::size_t>(*config.batch_size) <= n,
            ErrorCode::kInvalidArgument,
            "batch_size must be in [1, dataset size]");
  }
  if (config.target_epsilon) {
    require(std::isfinite(*config.target_epsilon) &&
                *config.target_epsilon > 0.0,
            ErrorCode::kInvalidArgument, "target_epsilon must be > 0");
    require(std::isfinite(config.target_delta) && config.target_delta > 0.0 &&
                config.target_delta < 1.0,
            ErrorCode::kInvalidArgument,
            "target_delta must be in (0, 1) when target_epsilon is set");
  }
}

// Dataset flattened for the inner loop: features with a trailing 1 for the
// bias, plus each row's norm (reused every time a gradient is clipped, since
// every per-example gradient here is a scalar multiple of the row).
struct Flattened {
  std::vector<double> rows;   // n * p, bias column included
  std::vector<double> norms;  // n
  std::vector<int> labels;
  std::vector<int> groups;
  std::size_t n = 0;
  std::size_t p = 0;
};

Flattened flatten(const LabeledDataset& data) {
  Flattened flat;
  flat.n = data.size();
  flat.p = data.dimension() + 1;
  flat.rows.resize(flat.n * flat.p);
  flat.norms.resize(flat.n);
  flat.labels.resize(flat.n);
  flat.groups.resize(flat.n);
  for (std::size_t i = 0; i < flat.n; ++i) {
    const Record& rec = data.records()[i];
    double* row = &flat.rows[i * flat.p];
    double sq = 1.0;  // bias coordinate
    for (std::size_t j = 0; j + 1 < flat.p; ++j) {
      row[j] = rec.features[j];
      sq += row[j] * row[j];
    }
    row[flat.p - 1] = 1.0;
    flat.norms[i] = std::sqrt(sq);
    flat.labels[i] = rec.label;
    flat.groups[i] = rec.group;
  }
  return flat;
}

double dot_row(const double* row, std::span<const double> w, std::size_t p) {
  double z = 0.0;
  for (std::size_t j = 0; j < p; ++j) z += row[j] * w[j];
  return z;
}

void check_finite_weights(const std::vector<double>& weights) {
  for (double w : weights) {
    require(std::isfinite(w), ErrorCode::kNonFinite,
            "training diverged to non-finite weights");
  }
}

// One training engine serves all four variants; the branches are "is there a
// fairness penalty" and "is there clipping plus noise plus accounting".
Model fit(const LabeledDataset& data, const TrainConfig& config, bool private_,
          BudgetLedger* ledger, Rng* noise_rng, TrainStats* stats) {
  require(data.size() >= 1, ErrorCode::kInvalidArgument, "empty dataset");
  validate_train_config(config, data.size());

  const Flattened flat = flatten(data);
  const std::size_t n = flat.n;
  const std::size_t p = flat.p;
  const std::size_t batch =
      config.batch_size ? static_cast<std::size_t>(*config.batch_size) : n;
  const std::size_t steps_per_epoch = (n + batch - 1) / batch;
  const long total_steps =
      config.epochs * static_cast<long>(steps_per_epoch);
  const double lambda = config.fairness_lambda;

  double step_epsilon = 0.0;
  double step_delta = 0.0;
  double noise_multiplier = 0.0;
  if (private_) {
    step_epsilon = *config.target_epsilon / static_cast<double>(total_steps);
    step_delta = config.target_delta / static_cast<double>(total_steps);
    noise_multiplier =
        gaussian_sigma(step_epsilon, step_delta, SensitivityBound{1.0});
  }

  std::vector<double> weights(p, 0.0);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng shuffle_rng(config.seed);

  std::vector<double> grad(p);
  std::vector<double> pen(p);
  double max_clipped_norm = 0.0;
  long steps_done = 0;
  // Running totals of what this call has charged, accumulated in the same
  // order as the ledger adds them so the final top-up lands exactly on the
  // target.
  double charged_epsilon = 0.0;
  double charged_delta = 0.0;

  for (long epoch = 0; epoch < config.epochs; ++epoch) {
    for (std::size_t i = n; i > 1; --i) {
      const std::size_t j = shuffle_rng.next_u64() % i;
      std::swap(order[i - 1], order[j]);
    }
    for (std::size_t start = 0; start < n; start += batch) {
      const std::size_t end = std::min(start + batch, n);
      const std::size_t b = end - start;

      // Forward pass plus the batch parity gap if the penalty is active.
      std::vector<double> prob(b);
      std::array<double, 2> prob_sum = {0.0, 0.0};
      std::array<std::size_t, 2> group_n = {0, 0};
      for (std::size_t k = 0; k < b; ++k) {
        const std::size_t i = order[start + k];
        prob[k] = sigmoid(dot_row(&flat.rows[i * p], weights, p));
        prob_sum[flat.groups[i]] += prob[k];
        ++group_n[flat.groups[i]];
      }
      const bool penalty =
          lambda > 0.0 && group_n[0] > 0 && group_n[1] > 0;
      double gap = 0.0;
      if (penalty) {
        gap = prob_sum[0] / static_cast<double>(group_n[0]) -
              prob_sum[1] / static_cast<double>(group_n[1]);
      }

      // The penalty gradient couples the whole batch, so it is computed once
      // and treated as every example's common share. Splitting it per group
      // instead would let clipping saturate the smaller group's examples and
      // tilt the balance between the two group-mean pushes.
      std::fill(pen.begin(), pen.end(), 0.0);
      double pen_sq = 0.0;
      if (penalty) {
        for (std::size_t k = 0; k < b; ++k) {
          const std::size_t i = order[start + k];
          const double sign = flat.groups[i] == 0 ? 1.0 : -1.0;
          const double weight = 2.0 * lambda * gap * sign * prob[k] *
                                (1.0 - prob[k]) /
                                static_cast<double>(group_n[flat.groups[i]]);
          const double* row = &flat.rows[i * p];
          for (std::size_t j = 0; j < p; ++j) pen[j] += weight * row[j];
        }
        for (std::size_t j = 0; j < p; ++j) pen_sq += pen[j] * pen[j];
      }

      // Per-example gradient: loss coefficient times the row, plus the common
      // penalty share. Without the penalty this stays rank one and clipping
      // only rescales the coefficient.
      std::fill(grad.begin(), grad.end(), 0.0);
      double scale_sum = 0.0;
      for (std::size_t k = 0; k < b; ++k) {
        const std::size_t i = order[start + k];
        double coeff = prob[k] - flat.labels[i];
        double scale = 1.0;
        if (private_) {
          double norm = std::abs(coeff) * flat.norms[i];
          if (penalty) {
            const double* row = &flat.rows[i * p];
            double cross = 0.0;
            for (std::size_t j = 0; j < p; ++j) cross += row[j] * pen[j];
            norm = std::sqrt(std::max(
                0.0, norm * norm + 2.0 * coeff * cross + pen_sq));
          }
          if (norm > config.clip_norm) scale = config.clip_norm / norm;
          max_clipped_norm =
              std::max(max_clipped_norm, std::min(norm, config.clip_norm));
        }
        scale_sum += scale;
        const double scaled = scale * coeff;
        const double* row = &flat.rows[i * p];
        for (std::size_t j = 0; j < p; ++j) grad[j] += scaled * row[j];
      }
      const double inv_b = 1.0 / static_cast<double>(b);
      for (std::size_t j = 0; j < p; ++j) {
        grad[j] = (grad[j] + scale_sum * pen[j]) * inv_b;
      }

      if (private_) {
        const double noise_std = config.clip_norm * noise_multiplier * inv_b;
        for (std::size_t j = 0; j < p; ++j) {
          grad[j] += noise_std * noise_rng->gaussian();
        }
        ++steps_done;
        double eps = step_epsilon;
        double del = step_delta;
        if (steps_done == total_steps) {
          eps = std::max(0.0, *config.target_epsilon - charged_epsilon);
          del = std::max(0.0, config.target_delta - charged_delta);
        }
        *ledger = charge(*ledger, eps, del, "dp_sgd_step");
        charged_epsilon += eps;
        charged_delta += del;
      }

      for (std::size_t j = 0; j < p; ++j) {
        weights[j] -= config.learning_rate * grad[j];
      }
      check_finite_weights(weights);
    }
  }

  if (stats != nullptr) {
    stats->steps = total_steps;
    stats->noise_multiplier = noise_multiplier;
    stats->max_clipped_norm = max_clipped_norm;
  }
  Model model;
  model.weights = std::move(weights);
  return model;
}

}  // namespace

void validate_synthetic_spec(const SyntheticSpec& spec) {
  require(spec.n0 >= 1 && spec.n1 >= 1, ErrorCode::kInvalidArgument,
          "group sizes must be >= 1");
  require(std::isfinite(spec.base_rate0) && spec.base_rate0 > 0.0 &&
              spec.base_rate0 < 1.0,
          ErrorCode::kInvalidArgument, "base_rate0 must be in (0, 1)");
  require(std::isfinite(spec.base_rate1) && spec.base_rate1 > 0.0 &&
              spec.base_rate1 < 1.0,
          ErrorCode::kInvalidArgument, "base_rate1 must be in (0, 1)");
  require(spec.d >= 1, ErrorCode::kInvalidArgument, "d must be >= 1");
  require(std::isfinite(spec.class_separation) && spec.class_separation >= 0.0,
          ErrorCode::kInvalidArgument, "class_separation must be >= 0");
}

double Model::score(std::span<const double> features) const {
  require(features.size() + 1 == weights.size(), ErrorCode::kInvalidArgument,
          "feature dimension does not match model");
  double z = weights.back();
  for (std::size_t j = 0; j < features.size(); ++j) {
    z += weights[j] * features[j];
  }
  return sigmoid(z);
}

int Model::predict(std::span<const double> features, double threshold) const {
  return score(features) >= threshold ? 1 : 0;
}

LabeledDataset generate_synthetic(const SyntheticSpec& spec, Rng& rng) {
  validate_synthetic_spec(spec);
  const std::size_t d = static_cast<std::size_t>(spec.d);
  // Group 0 owns the first ceil(d/2) coordinates, group 1 the rest. With a
  // single feature both groups share it.
  const std::size_t half = (d + 1) / 2;
  const std::size_t begin[2] = {0, d > 1 ? half : 0};
  const std::size_t end[2] = {d > 1 ? half : d, d};

  std::vector<Record> records;
  records.reserve(static_cast<std::size_t>(spec.n0 + spec.n1));
  const double rates[2] = {spec.base_rate0, spec.base_rate1};
  const long counts[2] = {spec.n0, spec.n1};
  for (int g = 0; g < 2; ++g) {
    const double width = static_cast<double>(end[g] - begin[g]);
    const double shift = spec.class_separation / (2.0 * std::sqrt(width));
    for (long i = 0; i < counts[g]; ++i) {
      Record rec;
      rec.group = g;
      rec.label = rng.bernoulli(rates[g]) ? 1 : 0;
      const double mean = rec.label == 1 ? shift : -shift;
      rec.features.resize(d);
      for (std::size_t j = 0; j < d; ++j) {
        rec.features[j] = rng.gaussian();
        if (j >= begin[g] && j < end[g]) rec.features[j] += mean;
      }
      records.push_back(std::move(rec));
    }
  }
  return LabeledDataset::from_records(std::move(records));
}

double objective_and_gradient(const LabeledDataset& data,
                              std::span<const double> weights,
                              double fairness_lambda,
                              std::span<double> grad_out) {
  require(data.size() >= 1, ErrorCode::kInvalidArgument, "empty dataset");
  require(weights.size() == data.dimension() + 1 &&
              grad_out.size() == weights.size(),
          ErrorCode::kInvalidArgument,
          "weights and grad_out must have dimension + 1 entries");
  require(std::isfinite(fairness_lambda) && fairness_lambda >= 0.0,
          ErrorCode::kInvalidArgument, "fairness_lambda must be >= 0");

  const std::size_t n = data.size();
  const std::size_t p = weights.size();
  const double inv_n = 1.0 / static_cast<double>(n);

  std::fill(grad_out.begin(), grad_out.end(), 0.0);
  std::vector<double> prob(n);
  std::array<double, 2> prob_sum = {0.0, 0.0};
  std::array<std::size_t, 2> group_n = {0, 0};
  double loss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Record& rec = data.records()[i];
    double z = weights[p - 1];
    for (std::size_t j = 0; j + 1 < p; ++j) z += weights[j] * rec.features[j];
    prob[i] = sigmoid(z);
    prob_sum[rec.group] += prob[i];
    ++group_n[rec.group];
    loss += softplus(z) - rec.label * z;
    const double coeff = (prob[i] - rec.label) * inv_n;
    for (std::size_t j = 0; j + 1 < p; ++j) {
      grad_out[j] += coeff * rec.features[j];
    }
    grad_out[p - 1] += coeff;
  }
  loss *= inv_n;

  if (fairness_lambda > 0.0 && group_n[0] > 0 && group_n[1] > 0) {
    const double gap = prob_sum[0] / static_cast<double>(group_n[0]) -
                       prob_sum[1] / static_cast<double>(group_n[1]);
    loss += fairness_lambda * gap * gap;
    for (std::size_t i = 0; i < n; ++i) {
      const Record& rec = data.records()[i];
      const double sign = rec.group == 0 ? 1.0 : -1.0;
      const double coeff = 2.0 * fairness_lambda * gap * sign * prob[i] *
                           (1.0 - prob[i]) /
                           static_cast<double>(group_n[rec.group]);
      for (std::size_t j = 0; j + 1 < p; ++j) {
        grad_out[j] += coeff * rec.features[j];
      }
      grad_out[p - 1] += coeff;
    }
  }
  return loss;
}

Model train_logistic(const LabeledDataset& data, const TrainConfig& config,
                     TrainStats* stats) {
  require(!config.target_epsilon, ErrorCode::kInvalidArgument,
          "train_logistic does not take target_epsilon; use train_dp");
  require(config.fairness_lambda == 0.0, ErrorCode::kInvalidArgument,
          "train_logistic does not take a fairness penalty; use train_fair");
  return fit(data, config, false, nullptr, nullptr, stats);
}

Model train_fair(const LabeledDataset& data, const TrainConfig& config,
                 TrainStats* stats) {
  require(!config.target_epsilon, ErrorCode::kInvalidArgument,
          "train_fair does not take target_epsilon; use train_dp_fair");
  return fit(data, config, false, nullptr, nullptr, stats);
}

Model train_dp(const LabeledDataset& data, const TrainConfig& config,
               BudgetLedger& ledger, Rng& rng, TrainStats* stats) {
  require(config.target_epsilon.has_value(), ErrorCode::kInvalidArgument,
          "train_dp requires target_epsilon");
  require(config.fairness_lambda == 0.0, ErrorCode::kInvalidArgument,
          "train_dp does not take a fairness penalty; use train_dp_fair");
  return fit(data, config, true, &ledger, &rng, stats);
}

Model train_dp_fair(const LabeledDataset& data, const TrainConfig& config,
                    BudgetLedger& ledger, Rng& rng, TrainStats* stats) {
  require(config.target_epsilon.has_value(), ErrorCode::kInvalidArgument,
          "train_dp_fair requires target_epsilon");
  return fit(data, config, true, &ledger, &rng, stats);
}

const char* fairness_target_name(FairnessTarget target) {
  switch (target) {
    case FairnessTarget::kDemographicParity:
      return "demographic_parity";
    case FairnessTarget::kEqualizedOdds:
      return "equalized_odds";
  }
  return "unknown";
}

namespace {

// Per-group decision statistics for every candidate threshold, computed via
// suffix counts over the sorted scores.
struct ThresholdTable {
  std::vector<double> thresholds;  // ascending, deduplicated
  std::vector<double> positive_rate;
  std::vector<double> tpr;
  std::vector<double> fpr;
  std::vector<long> correct;
};

ThresholdTable build_table(std::vector<std::pair<double, int>> scored,
                           FairnessTarget target) {
  std::sort(scored.begin(), scored.end());
  const std::size_t m = scored.size();
  long total_pos = 0;
  for (const auto& [s, y] : scored) total_pos += y;
  const long total_neg = static_cast<long>(m) - total_pos;
  if (target == FairnessTarget::kEqualizedOdds) {
    require(total_pos > 0 && total_neg > 0, ErrorCode::kDegenerateLabels,
            "equalized odds needs both label classes in each group");
  }

  ThresholdTable table;
  table.thresholds = {0.0, 0.5, 1.0};
  for (std::size_t i = 0; i + 1 < m; ++i) {
    if (scored[i].first != scored[i + 1].first) {
      table.thresholds.push_back((scored[i].first + scored[i + 1].first) / 2.0);
    }
  }
  std::sort(table.thresholds.begin(), table.thresholds.end());
  table.thresholds.erase(
      std::unique(table.thresholds.begin(), table.thresholds.end()),
      table.thresholds.end());

  // pos_before[k] = positives among the k lowest scores.
  std::vector<long> pos_before(m + 1, 0);
  for (std::size_t i = 0; i < m; ++i) {
    pos_before[i + 1] = pos_before[i] + scored[i].second;
  }

  for (double t : table.thresholds) {
    const std::size_t k =
        std::lower_bound(scored.begin(), scored.end(),
                         std::make_pair(t, std::numeric_limits<int>::min())) -
        scored.begin();
    const long above = static_cast<long>(m - k);
    const long tp = total_pos - pos_before[k];
    const long fp = above - tp;
    table.positive_rate.push_back(static_cast<double>(above) /
                                  static_cast<double>(m));
    table.tpr.push_back(total_pos > 0
                            ? static_cast<double>(tp) /
                                  static_cast<double>(total_pos)
                            : 0.0);
    table.fpr.push_back(total_neg > 0
                            ? static_cast<double>(fp) /
                                  static_cast<double>(total_neg)
                            : 0.0);
    table.correct.push_back(tp + (total_neg - fp));
  }
  return table;
}

}  // namespace

GroupThresholds threshold_postprocess(const std::vector<double>& scores,
                                      const LabeledDataset& data,
                                      FairnessTarget target) {
  require(scores.size() == data.size(), ErrorCode::kInvalidArgument,
          "scores length must match record count");
  for (double s : scores) {
    require(std::isfinite(s) && s >= 0.0 && s <= 1.0,
            ErrorCode::kInvalidArgument, "scores must lie in [0, 1]");
  }
  std::vector<std::pair<double, int>> scored[2];
  for (std::size_t i = 0; i < scores.size(); ++i) {
    const Record& rec = data.records()[i];
    scored[rec.group].emplace_back(scores[i], rec.label);
  }
  for (int g = 0; g < 2; ++g) {
    require(!scored[g].empty(), ErrorCode::kEmptyGroup,
            std::string("group ") + std::to_string(g) + " has no records");
  }
  const ThresholdTable table0 = build_table(std::move(scored[0]), target);
  const ThresholdTable table1 = build_table(std::move(scored[1]), target);
  const double total = static_cast<double>(data.size());

  GroupThresholds best;
  bool have_best = false;
  for (std::size_t a = 0; a < table0.thresholds.size(); ++a) {
    for (std::size_t b = 0; b < table1.thresholds.size(); ++b) {
      double gap;
      if (target == FairnessTarget::kDemographicParity) {
        gap = std::abs(table0.positive_rate[a] - table1.positive_rate[b]);
      } else {
        gap = std::max(std::abs(table0.tpr[a] - table1.tpr[b]),
                       std::abs(table0.fpr[a] - table1.fpr[b]));
      }
      const double accuracy =
          static_cast<double>(table0.correct[a] + table1.correct[b]) / total;
      // Thresholds iterate in ascending lexicographic order, so keeping the
      // incumbent on exact ties resolves ties lexicographically.
      if (!have_best || gap < best.gap ||
          (gap == best.gap && accuracy > best.accuracy)) {
        best.t0 = table0.thresholds[a];
        best.t1 = table1.thresholds[b];
        best.gap = gap;
        best.accuracy = accuracy;
        have_best = true;
      }
    }
  }
  return best;
}

EvalReport evaluate(const Model& model, const LabeledDataset& data,
                    const BudgetLedger& ledger,
                    const std::optional<GroupThresholds>& thresholds) {
  require(model.weights.size() == data.dimension() + 1,
          ErrorCode::kInvalidArgument, "model dimension does not match data");
  const double t[2] = {thresholds ? thresholds->t0 : 0.5,
                       thresholds ? thresholds->t1 : 0.5};
  std::vector<int> predictions;
  predictions.reserve(data.size());
  for (const Record& rec : data.records()) {
    predictions.push_back(model.predict(rec.features, t[rec.group]));
  }
  const GroupConfusion confusion = confusion_by_group(predictions, data);

  EvalReport report;
  report.accuracy0 = confusion.for_group(0).accuracy();
  report.accuracy1 = confusion.for_group(1).accuracy();
  report.fpr0 = confusion.for_group(0).fpr();
  report.fpr1 = confusion.for_group(1).fpr();
  report.tpr0 = confusion.for_group(0).tpr();
  report.tpr1 = confusion.for_group(1).tpr();
  report.demographic_parity_gap = demographic_parity_gap(predictions, data);
  report.equalized_odds_gap = equalized_odds_gap(predictions, data);
  report.epsilon_spent = ledger.spent_epsilon();
  return report;
}

nlohmann::ordered_json eval_report_json(const EvalReport& report) {
  nlohmann::ordered_json j;
  j["accuracy0"] = report.accuracy0;
  j["accuracy1"] = report.accuracy1;
  j["fpr0"] = report.fpr0;
  j["fpr1"] = report.fpr1;
  j["tpr0"] = report.tpr0;
  j["tpr1"] = report.tpr1;
  j["demographic_parity_gap"] = report.demographic_parity_gap;
  j["equalized_odds_gap"] = report.equalized_odds_gap;
  j["epsilon_spent"] = report.epsilon_spent;
  return j;
}

const char* variant_name(Variant variant) {
  switch (variant) {
    case Variant::kPlain:
      return "plain";
    case Variant::kFair:
      return "fair";
    case Variant::kDp:
      return "dp";
    case Variant::kDpFair:
      return "dp_fair";
  }
  return "unknown";
}

Variant variant_from_name(const std::string& name) {
  if (name == "plain") return Variant::kPlain;
  if (name == "fair") return Variant::kFair;
  if (name == "dp") return Variant::kDp;
  if (name == "dp_fair") return Variant::kDpFair;
  fail(ErrorCode::kInvalidArgument,
       "unknown variant '" + name + "' (plain, fair, dp, dp_fair)");
}

CasestudyResult run_casestudy(const SyntheticSpec& spec,
                              const TrainConfig& config, Variant variant) {
  const bool private_ = variant == Variant::kDp || variant == Variant::kDpFair;
  if (private_) {
    require(config.target_epsilon.has_value(), ErrorCode::kInvalidArgument,
            std::string(variant_name(variant)) +
                " variant requires target_epsilon");
  }

  Rng root(config.seed);
  Rng data_rng = root.derive(1);
  Rng noise_rng = root.derive(2);
  const LabeledDataset data = generate_synthetic(spec, data_rng);

  TrainConfig effective = config;
  if (variant == Variant::kPlain || variant == Variant::kDp) {
    effective.fairness_lambda = 0.0;
  }
  if (!private_) effective.target_epsilon.reset();

  BudgetLedger ledger(private_
                          ? PrivacyBudget{*effective.target_epsilon,
                                          effective.target_delta}
                          : PrivacyBudget{1.0, 0.0});

  CasestudyResult result;
  switch (variant) {
    case Variant::kPlain:
      result.model = train_logistic(data, effective, &result.stats);
      break;
    case Variant::kFair:
      result.model = train_fair(data, effective, &result.stats);
      break;
    case Variant::kDp:
      result.model = train_dp(data, effective, ledger, noise_rng,
                              &result.stats);
      break;
    case Variant::kDpFair:
      result.model = train_dp_fair(data, effective, ledger, noise_rng,
                                   &result.stats);
      break;
  }
  result.report = evaluate(result.model, data, ledger);
  return result;
}

std::string seed_sweep_csv(const SyntheticSpec& spec,
                           const TrainConfig& config,
                           const std::vector<Variant>& variants,
                           const std::vector<std::uint64_t>& seeds) {
  require(!variants.empty() && !seeds.empty(), ErrorCode::kInvalidArgument,
          "seed sweep needs at least one variant and one seed");
  std::string out =
      "seed,variant,epsilon,acc0,acc1,fpr0,fpr1,dp_gap,eo_gap\n";
  char buf[200];
  for (std::uint64_t seed : seeds) {
    TrainConfig run_config = config;
    run_config.seed = seed;
    for (Variant variant : variants) {
      const CasestudyResult result =
          run_casestudy(spec, run_config, variant);
      const EvalReport& r = result.report;
      out += std::to_string(seed);
      out += ',';
      out += variant_name(variant);
      std::snprintf(buf, sizeof buf,
                    ",%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g\n",
                    r.epsilon_spent, r.accuracy0, r.accuracy1, r.fpr0, r.fpr1,
                    r.demographic_parity_gap, r.equalized_odds_gap);
      out += buf;
    }
  }
  return out;
}

}  // namespace privfair
