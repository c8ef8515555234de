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
// C ABI shim. Exceptions stop here: every entry point catches domain errors
// and maps them onto pf_status, stashing the message in a thread-local slot
// for pf_last_error.

#include "privfair.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <new>
#include <span>
#include <string>
#include <vector>

#include "privfair/accountant.hpp"
#include "privfair/attack.hpp"
#include "privfair/casestudy.hpp"
#include "privfair/dataset.hpp"
#include "privfair/error.hpp"
#include "privfair/fairness.hpp"
#include "privfair/frontier.hpp"
#include "privfair/mechanisms.hpp"
#include "privfair/random.hpp"
#include "privfair/sweep.hpp"

struct pf_rng {
  privfair::Rng impl;
};

struct pf_ledger {
  privfair::BudgetLedger impl;
};

struct pf_dataset {
  privfair::LabeledDataset impl;
};

namespace {

thread_local std::string t_last_error;

pf_status map_code(privfair::ErrorCode code) {
  using privfair::ErrorCode;
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return PF_INVALID_ARGUMENT;
    case ErrorCode::kBudgetExhausted:
      return PF_BUDGET_EXHAUSTED;
    case ErrorCode::kUnknownGroup:
      return PF_UNKNOWN_GROUP;
    case ErrorCode::kEmptyGroup:
      return PF_EMPTY_GROUP;
    case ErrorCode::kDegenerateLabels:
      return PF_DEGENERATE_LABELS;
    case ErrorCode::kInfeasible:
      return PF_INFEASIBLE;
    case ErrorCode::kNonFinite:
      return PF_NON_FINITE;
    case ErrorCode::kBothLikelihoodsZero:
      return PF_BOTH_LIKELIHOODS_ZERO;
    case ErrorCode::kParse:
      return PF_PARSE;
    case ErrorCode::kIo:
      return PF_IO;
  }
  return PF_INTERNAL;
}

template <typename Fn>
pf_status guarded(Fn&& fn) {
  try {
    fn();
    return PF_OK;
  } catch (const privfair::Error& e) {
    t_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return PF_INTERNAL;
  } catch (...) {
    t_last_error = "unknown failure";
    return PF_INTERNAL;
  }
}

pf_status arg_error(const char* message) {
  t_last_error = message;
  return PF_INVALID_ARGUMENT;
}

// Allocated with malloc so pf_free_string stays free()-compatible.
char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

privfair::ReleaseKind parse_release(const char* name) {
  const std::string s = name;
  if (s == "deterministic") return privfair::ReleaseKind::kDeterministic;
  if (s == "laplace") return privfair::ReleaseKind::kLaplace;
  privfair::fail(privfair::ErrorCode::kInvalidArgument,
                 "release must be 'deterministic' or 'laplace'");
}

privfair::Scenario parse_scenario(const char* name) {
  const std::string s = name;
  if (s == "default") return privfair::Scenario{};
  if (s == "whole_town") return privfair::Scenario::whole_town();
  privfair::fail(privfair::ErrorCode::kInvalidArgument,
                 "scenario must be 'default' or 'whole_town'");
}

privfair::TrainConfig make_train_config(double epsilon, double delta,
                                        double fairness_lambda, long epochs,
                                        double learning_rate, double clip_norm,
                                        long batch_size, std::uint64_t seed) {
  privfair::TrainConfig config;
  config.learning_rate = learning_rate;
  config.epochs = epochs;
  if (batch_size > 0) config.batch_size = batch_size;
  config.clip_norm = clip_norm;
  if (epsilon > 0.0) config.target_epsilon = epsilon;
  config.target_delta = delta;
  config.fairness_lambda = fairness_lambda;
  config.seed = seed;
  return config;
}

std::vector<privfair::Variant> parse_variant_list(const char* csv) {
  std::vector<privfair::Variant> variants;
  std::string item;
  for (const char* c = csv;; ++c) {
    if (*c == ',' || *c == '\0') {
      privfair::require(!item.empty(), privfair::ErrorCode::kInvalidArgument,
                        "empty entry in variant list");
      variants.push_back(privfair::variant_from_name(item));
      item.clear();
      if (*c == '\0') break;
    } else {
      item += *c;
    }
  }
  return variants;
}

}  // namespace

extern "C" {

const char* pf_version(void) { return "0.1.0"; }

const char* pf_status_name(pf_status status) {
  switch (status) {
    case PF_OK:
      return "ok";
    case PF_INVALID_ARGUMENT:
      return "invalid_argument";
    case PF_BUDGET_EXHAUSTED:
      return "budget_exhausted";
    case PF_UNKNOWN_GROUP:
      return "unknown_group";
    case PF_EMPTY_GROUP:
      return "empty_group";
    case PF_DEGENERATE_LABELS:
      return "degenerate_labels";
    case PF_INFEASIBLE:
      return "infeasible";
    case PF_NON_FINITE:
      return "non_finite";
    case PF_BOTH_LIKELIHOODS_ZERO:
      return "both_likelihoods_zero";
    case PF_PARSE:
      return "parse";
    case PF_IO:
      return "io";
    case PF_INTERNAL:
      return "internal";
  }
  return "unknown";
}

const char* pf_last_error(void) { return t_last_error.c_str(); }

void pf_free_string(char* s) { std::free(s); }

pf_rng* pf_rng_new(uint64_t seed) {
  return new (std::nothrow) pf_rng{privfair::Rng(seed)};
}

void pf_rng_free(pf_rng* rng) { delete rng; }

pf_status pf_rng_uniform(pf_rng* rng, double* out) {
  if (rng == nullptr || out == nullptr) return arg_error("null pointer");
  return guarded([&] { *out = rng->impl.uniform(); });
}

pf_status pf_rng_gaussian(pf_rng* rng, double* out) {
  if (rng == nullptr || out == nullptr) return arg_error("null pointer");
  return guarded([&] { *out = rng->impl.gaussian(); });
}

pf_status pf_laplace_mechanism(double true_answer, double sensitivity_l1,
                               double epsilon, pf_rng* rng, double* out) {
  if (rng == nullptr || out == nullptr) return arg_error("null pointer");
  return guarded([&] {
    *out = privfair::laplace_mechanism(true_answer,
                                       privfair::SensitivityBound{sensitivity_l1},
                                       epsilon, rng->impl)
               .value;
  });
}

pf_status pf_gaussian_sigma(double epsilon, double delta,
                            double sensitivity_l1, double* out) {
  if (out == nullptr) return arg_error("null pointer");
  return guarded([&] {
    *out = privfair::gaussian_sigma(epsilon, delta,
                                    privfair::SensitivityBound{sensitivity_l1});
  });
}

pf_status pf_gaussian_mechanism(double true_answer, double sensitivity_l1,
                                double epsilon, double delta, pf_rng* rng,
                                double* out) {
  if (rng == nullptr || out == nullptr) return arg_error("null pointer");
  return guarded([&] {
    *out = privfair::gaussian_mechanism(
               true_answer, privfair::SensitivityBound{sensitivity_l1},
               privfair::PrivacyBudget{epsilon, delta}, rng->impl)
               .value;
  });
}

pf_status pf_exponential_mechanism(const double* utilities, size_t count,
                                   double utility_sensitivity, double epsilon,
                                   pf_rng* rng, size_t* chosen_index) {
  if (utilities == nullptr || rng == nullptr || chosen_index == nullptr) {
    return arg_error("null pointer");
  }
  return guarded([&] {
    std::vector<privfair::Candidate> candidates(count);
    for (size_t i = 0; i < count; ++i) {
      candidates[i].id = std::to_string(i);
      candidates[i].utility = utilities[i];
    }
    const privfair::Candidate chosen = privfair::exponential_mechanism(
        candidates, utility_sensitivity, epsilon, rng->impl);
    *chosen_index = static_cast<size_t>(std::stoull(chosen.id));
  });
}

pf_status pf_sparse_vector(const double* answers, size_t count,
                           double threshold, double epsilon, int max_reports,
                           pf_rng* rng, int* flags, size_t* flags_len) {
  if (answers == nullptr || rng == nullptr || flags == nullptr ||
      flags_len == nullptr) {
    return arg_error("null pointer");
  }
  return guarded([&] {
    const privfair::SparseVectorResult result = privfair::sparse_vector(
        std::vector<double>(answers, answers + count), threshold, epsilon,
        max_reports, rng->impl);
    for (size_t i = 0; i < result.flags.size(); ++i) {
      flags[i] = result.flags[i] ? 1 : 0;
    }
    *flags_len = result.flags.size();
  });
}

pf_status pf_sample_and_aggregate(const double* records, size_t count,
                                  int block_count,
                                  double (*block_fn)(const double* block,
                                                     size_t block_len,
                                                     void* ctx),
                                  void* ctx, double lo, double hi,
                                  double epsilon, pf_rng* rng, double* out) {
  if (records == nullptr || block_fn == nullptr || rng == nullptr ||
      out == nullptr) {
    return arg_error("null pointer");
  }
  return guarded([&] {
    *out = privfair::sample_and_aggregate(
               std::span<const double>(records, count), block_count,
               [&](std::span<const double> block) {
                 return block_fn(block.data(), block.size(), ctx);
               },
               lo, hi, epsilon, rng->impl)
               .value;
  });
}

pf_status pf_ledger_new(double epsilon_cap, double delta_cap,
                        pf_ledger** out) {
  if (out == nullptr) return arg_error("null pointer");
  return guarded([&] {
    *out = new pf_ledger{privfair::BudgetLedger(
        privfair::PrivacyBudget{epsilon_cap, delta_cap})};
  });
}

void pf_ledger_free(pf_ledger* ledger) { delete ledger; }

pf_status pf_ledger_charge(pf_ledger* ledger, double epsilon, double delta,
                           const char* label) {
  if (ledger == nullptr || label == nullptr) return arg_error("null pointer");
  return guarded(
      [&] { ledger->impl = privfair::charge(ledger->impl, epsilon, delta, label); });
}

pf_status pf_ledger_spent(const pf_ledger* ledger, double* epsilon,
                          double* delta) {
  if (ledger == nullptr || epsilon == nullptr || delta == nullptr) {
    return arg_error("null pointer");
  }
  *epsilon = ledger->impl.spent_epsilon();
  *delta = ledger->impl.spent_delta();
  return PF_OK;
}

pf_status pf_ledger_remaining(const pf_ledger* ledger, double* epsilon,
                              double* delta) {
  if (ledger == nullptr || epsilon == nullptr || delta == nullptr) {
    return arg_error("null pointer");
  }
  *epsilon = ledger->impl.remaining_epsilon();
  *delta = ledger->impl.remaining_delta();
  return PF_OK;
}

pf_status pf_ledger_to_json(const pf_ledger* ledger, char** out) {
  if (ledger == nullptr || out == nullptr) return arg_error("null pointer");
  return guarded([&] { *out = dup_string(ledger->impl.to_json().dump(2)); });
}

pf_status pf_ledger_from_json(const char* json, pf_ledger** out) {
  if (json == nullptr || out == nullptr) return arg_error("null pointer");
  return guarded([&] {
    nlohmann::json parsed;
    try {
      parsed = nlohmann::json::parse(json);
    } catch (const nlohmann::json::exception& e) {
      privfair::fail(privfair::ErrorCode::kParse, e.what());
    }
    *out = new pf_ledger{privfair::BudgetLedger::from_json(parsed)};
  });
}

pf_status pf_dataset_from_csv(const char* path, pf_dataset** out) {
  if (path == nullptr || out == nullptr) return arg_error("null pointer");
  return guarded(
      [&] { *out = new pf_dataset{privfair::LabeledDataset::from_csv(path)}; });
}

void pf_dataset_free(pf_dataset* dataset) { delete dataset; }

pf_status pf_dataset_size(const pf_dataset* dataset, size_t* n,
                          size_t* dimension) {
  if (dataset == nullptr || n == nullptr || dimension == nullptr) {
    return arg_error("null pointer");
  }
  *n = dataset->impl.size();
  *dimension = dataset->impl.dimension();
  return PF_OK;
}

pf_status pf_demographic_parity_gap(const pf_dataset* dataset,
                                    const int* predictions, size_t len,
                                    double* out) {
  if (dataset == nullptr || predictions == nullptr || out == nullptr) {
    return arg_error("null pointer");
  }
  return guarded([&] {
    *out = privfair::demographic_parity_gap(
        std::vector<int>(predictions, predictions + len), dataset->impl);
  });
}

pf_status pf_equalized_odds_gap(const pf_dataset* dataset,
                                const int* predictions, size_t len,
                                double* out) {
  if (dataset == nullptr || predictions == nullptr || out == nullptr) {
    return arg_error("null pointer");
  }
  return guarded([&] {
    *out = privfair::equalized_odds_gap(
        std::vector<int>(predictions, predictions + len), dataset->impl);
  });
}

pf_status pf_mse_lower_bound(double sigma2_theta, double n,
                             double sensitivity_l1, double epsilon,
                             double* out) {
  if (out == nullptr) return arg_error("null pointer");
  return guarded([&] {
    *out = privfair::mse_lower_bound(
        sigma2_theta, n, privfair::SensitivityBound{sensitivity_l1}, epsilon);
  });
}

pf_status pf_utility_bound(double u0, long d, double epsilon, double n,
                           double c_utility, double* out) {
  if (out == nullptr) return arg_error("null pointer");
  return guarded([&] {
    privfair::BoundConstants consts;
    consts.c_utility = c_utility;
    *out = privfair::utility_bound(u0, d, epsilon, n, consts);
  });
}

pf_status pf_fairness_bound(double epsilon, double n, double p,
                            double c_fairness, double* out) {
  if (out == nullptr) return arg_error("null pointer");
  return guarded([&] {
    privfair::BoundConstants consts;
    consts.c_fairness = c_fairness;
    *out = privfair::fairness_bound(epsilon, n, p, consts);
  });
}

pf_status pf_group_noise_se(double n_a, double epsilon, double* out) {
  if (out == nullptr) return arg_error("null pointer");
  return guarded([&] { *out = privfair::group_noise_se(n_a, epsilon); });
}

pf_status pf_se_ratio(double q, double n_p, double epsilon, double* sampling,
                      double* dp_noise, double* ratio) {
  if (sampling == nullptr || dp_noise == nullptr || ratio == nullptr) {
    return arg_error("null pointer");
  }
  return guarded([&] {
    const privfair::SeRatio r = privfair::se_ratio(q, n_p, epsilon);
    *sampling = r.sampling;
    *dp_noise = r.dp_noise;
    *ratio = r.ratio;
  });
}

pf_status pf_feasible(double u0, double u_threshold, double f_target, long d,
                      double p, double epsilon, double n, double c_utility,
                      double c_fairness, int* out) {
  if (out == nullptr) return arg_error("null pointer");
  return guarded([&] {
    const privfair::FeasibilitySpec spec{u0, u_threshold, f_target, d, p};
    const privfair::BoundConstants consts{c_utility, c_fairness};
    *out = privfair::feasible(spec, epsilon, n, consts) ? 1 : 0;
  });
}

pf_status pf_critical_sample_size(double u0, double u_threshold,
                                  double f_target, long d, double p,
                                  double epsilon, double c_utility,
                                  double c_fairness, double* out) {
  if (out == nullptr) return arg_error("null pointer");
  return guarded([&] {
    const privfair::FeasibilitySpec spec{u0, u_threshold, f_target, d, p};
    const privfair::BoundConstants consts{c_utility, c_fairness};
    *out = privfair::critical_sample_size(spec, epsilon, consts);
  });
}

pf_status pf_membership_posterior(double prior, double likelihood_in,
                                  double likelihood_out, double* out) {
  if (out == nullptr) return arg_error("null pointer");
  return guarded([&] {
    *out = privfair::membership_posterior(prior, likelihood_in, likelihood_out);
  });
}

pf_status pf_run_mech(const char* csv_path, int column, const char* stat,
                      const char* mechanism, double epsilon, double delta,
                      double lo, double hi, int blocks, uint64_t seed,
                      char** out_json) {
  if (csv_path == nullptr || stat == nullptr || mechanism == nullptr ||
      out_json == nullptr) {
    return arg_error("null pointer");
  }
  return guarded([&] {
    using privfair::ErrorCode;
    const std::string stat_name = stat;
    const std::string mech_name = mechanism;
    privfair::require(stat_name == "count" || stat_name == "mean",
                      ErrorCode::kInvalidArgument,
                      "stat must be 'count' or 'mean'");

    const std::vector<double> values =
        privfair::read_csv_column(csv_path, column, true);
    privfair::Rng rng(seed);
    privfair::NoisyValue noisy;

    if (mech_name == "sample_aggregate") {
      privfair::require(stat_name == "mean", ErrorCode::kInvalidArgument,
                        "sample_aggregate releases a mean, not a count");
      noisy = privfair::sample_and_aggregate(
          values, blocks,
          [](std::span<const double> block) {
            double sum = 0.0;
            for (double v : block) sum += v;
            return sum / static_cast<double>(block.size());
          },
          lo, hi, epsilon, rng);
    } else {
      double answer;
      privfair::SensitivityBound sens;
      if (stat_name == "count") {
        answer = static_cast<double>(values.size());
        sens.l1 = 1.0;
      } else {
        privfair::require(std::isfinite(lo) && std::isfinite(hi) && lo < hi,
                          ErrorCode::kInvalidArgument,
                          "mean release needs clamp bounds lo < hi");
        privfair::require(!values.empty(), ErrorCode::kInvalidArgument,
                          "mean of an empty column");
        double sum = 0.0;
        for (double v : values) sum += std::clamp(v, lo, hi);
        answer = sum / static_cast<double>(values.size());
        sens.l1 = (hi - lo) / static_cast<double>(values.size());
      }
      if (mech_name == "laplace") {
        noisy = privfair::laplace_mechanism(answer, sens, epsilon, rng);
      } else if (mech_name == "gaussian") {
        noisy = privfair::gaussian_mechanism(
            answer, sens, privfair::PrivacyBudget{epsilon, delta}, rng);
      } else {
        privfair::fail(ErrorCode::kInvalidArgument,
                       "mechanism must be 'laplace', 'gaussian', or "
                       "'sample_aggregate'");
      }
    }

    nlohmann::ordered_json j;
    j["value"] = noisy.value;
    j["mechanism"] = privfair::mechanism_kind_name(noisy.mechanism);
    j["charged"]["epsilon"] = noisy.charged.epsilon;
    j["charged"]["delta"] = noisy.charged.delta;
    j["stat"] = stat_name;
    j["rows"] = values.size();
    j["seed"] = seed;
    *out_json = dup_string(j.dump(2));
  });
}

pf_status pf_run_bounds(double u0, double u_threshold, double f_target,
                        long d, double p, double epsilon, int has_n, double n,
                        double c_utility, double c_fairness, char** out_json) {
  if (out_json == nullptr) return arg_error("null pointer");
  return guarded([&] {
    const privfair::FeasibilitySpec spec{u0, u_threshold, f_target, d, p};
    const privfair::BoundConstants consts{c_utility, c_fairness};
    nlohmann::ordered_json j;
    j["epsilon"] = epsilon;
    j["u0"] = u0;
    j["u_threshold"] = u_threshold;
    j["f_target"] = f_target;
    j["d"] = d;
    j["p"] = p;
    if (has_n != 0) {
      j["n"] = n;
      j["utility_bound"] = privfair::utility_bound(u0, d, epsilon, n, consts);
      j["fairness_bound"] = privfair::fairness_bound(epsilon, n, p, consts);
      j["feasible"] = privfair::feasible(spec, epsilon, n, consts);
    }
    j["critical_n"] = privfair::critical_sample_size(spec, epsilon, consts);
    *out_json = dup_string(j.dump(2));
  });
}

pf_status pf_run_sweep(const char* grid_json, double u0, double u_threshold,
                       double f_target, long d, double p, double c_utility,
                       double c_fairness, const char* evaluator, long seeds,
                       uint64_t seed, char** out_csv) {
  if (grid_json == nullptr || evaluator == nullptr || out_csv == nullptr) {
    return arg_error("null pointer");
  }
  return guarded([&] {
    using privfair::ErrorCode;
    nlohmann::json parsed;
    try {
      parsed = nlohmann::json::parse(grid_json);
    } catch (const nlohmann::json::exception& e) {
      privfair::fail(ErrorCode::kParse, e.what());
    }
    const privfair::SweepGrid grid = privfair::grid_from_json(parsed);
    const privfair::FeasibilitySpec spec{u0, u_threshold, f_target, d, p};
    const privfair::BoundConstants consts{c_utility, c_fairness};

    const std::string eval_name = evaluator;
    privfair::SweepEvaluator eval;
    if (eval_name == "analytic") {
      eval = privfair::SweepEvaluator::kAnalytic;
    } else if (eval_name == "empirical") {
      eval = privfair::SweepEvaluator::kEmpirical;
    } else {
      privfair::fail(ErrorCode::kInvalidArgument,
                     "evaluator must be 'analytic' or 'empirical'");
    }

    privfair::EmpiricalSweepConfig empirical;
    empirical.seeds = seeds;
    empirical.train.seed = seed;
    const std::vector<privfair::SweepRow> rows =
        privfair::sweep(grid, spec, eval, consts, empirical);
    *out_csv = dup_string(privfair::sweep_to_csv(rows));
  });
}

pf_status pf_run_attack_demo(const char* scenario, const char* release,
                             double epsilon, long trials, long resamples,
                             uint64_t seed, char** out_json) {
  if (scenario == nullptr || release == nullptr || out_json == nullptr) {
    return arg_error("null pointer");
  }
  return guarded([&] {
    const privfair::Scenario scn = parse_scenario(scenario);
    const privfair::ReleaseKind kind = parse_release(release);
    privfair::Rng rng(seed);
    const privfair::PosteriorReport report =
        privfair::smoking_demo(scn, kind, epsilon, rng, trials, resamples);
    *out_json = dup_string(privfair::report_json(report, seed).dump(2));
  });
}

pf_status pf_run_casestudy(const char* variant, double epsilon, double delta,
                           double fairness_lambda, long epochs,
                           double learning_rate, double clip_norm,
                           long batch_size, uint64_t seed, char** out_json) {
  if (variant == nullptr || out_json == nullptr) {
    return arg_error("null pointer");
  }
  return guarded([&] {
    const privfair::Variant v = privfair::variant_from_name(variant);
    const privfair::TrainConfig config =
        make_train_config(epsilon, delta, fairness_lambda, epochs,
                          learning_rate, clip_norm, batch_size, seed);
    const privfair::CasestudyResult result =
        privfair::run_casestudy(privfair::SyntheticSpec{}, config, v);

    nlohmann::ordered_json j;
    j["variant"] = privfair::variant_name(v);
    j["report"] = privfair::eval_report_json(result.report);
    j["steps"] = result.stats.steps;
    j["noise_multiplier"] = result.stats.noise_multiplier;
    j["seed"] = seed;
    *out_json = dup_string(j.dump(2));
  });
}

pf_status pf_run_casestudy_seed_sweep(const char* variants, long seed_count,
                                      double epsilon, double delta,
                                      double fairness_lambda, long epochs,
                                      double learning_rate, double clip_norm,
                                      long batch_size, uint64_t first_seed,
                                      char** out_csv) {
  if (variants == nullptr || out_csv == nullptr) {
    return arg_error("null pointer");
  }
  return guarded([&] {
    privfair::require(seed_count >= 1, privfair::ErrorCode::kInvalidArgument,
                      "seed_count must be >= 1");
    const std::vector<privfair::Variant> variant_list =
        parse_variant_list(variants);
    std::vector<std::uint64_t> seeds(static_cast<std::size_t>(seed_count));
    for (long i = 0; i < seed_count; ++i) {
      seeds[static_cast<std::size_t>(i)] =
          first_seed + static_cast<std::uint64_t>(i);
    }
    const privfair::TrainConfig config =
        make_train_config(epsilon, delta, fairness_lambda, epochs,
                          learning_rate, clip_norm, batch_size, first_seed);
    *out_csv = dup_string(privfair::seed_sweep_csv(privfair::SyntheticSpec{},
                                                   config, variant_list,
                                                   seeds));
  });
}

}  // extern "C"
