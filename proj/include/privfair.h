/* Copyright 2026 The privfair Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the privfair shared library.
 *
 * Conventions:
 *   - Every fallible call returns a pf_status; PF_OK is 0. On failure the
 *     out-parameters are left untouched and pf_last_error() returns a
 *     human-readable message (thread-local, valid until the next failing
 *     call on the same thread).
 *   - Handles (pf_rng, pf_ledger, pf_dataset) are created by the _new and
 *     _from_ constructors and released by the matching _free, which
 *     tolerates NULL.
 *   - Strings returned through char** out-parameters are heap-allocated and
 *     must be released with pf_free_string.
 *   - All randomized operations draw from an explicit pf_rng, so a fixed
 *     seed reproduces results bit for bit.
 */

#ifndef PRIVFAIR_H_
#define PRIVFAIR_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pf_status {
  PF_OK = 0,
  PF_INVALID_ARGUMENT = 1,
  PF_BUDGET_EXHAUSTED = 2,
  PF_UNKNOWN_GROUP = 3,
  PF_EMPTY_GROUP = 4,
  PF_DEGENERATE_LABELS = 5,
  PF_INFEASIBLE = 6,
  PF_NON_FINITE = 7,
  PF_BOTH_LIKELIHOODS_ZERO = 8,
  PF_PARSE = 9,
  PF_IO = 10,
  PF_INTERNAL = 11
} pf_status;

const char* pf_version(void);
const char* pf_status_name(pf_status status);
const char* pf_last_error(void);
void pf_free_string(char* s);

/* ---- Random streams ---- */

typedef struct pf_rng pf_rng;

pf_rng* pf_rng_new(uint64_t seed);
void pf_rng_free(pf_rng* rng);
pf_status pf_rng_uniform(pf_rng* rng, double* out);
pf_status pf_rng_gaussian(pf_rng* rng, double* out);

/* ---- Release mechanisms ---- */

/* true_answer + Laplace(sensitivity_l1 / epsilon). */
pf_status pf_laplace_mechanism(double true_answer, double sensitivity_l1,
                               double epsilon, pf_rng* rng, double* out);

/* Noise standard deviation of the Gaussian mechanism:
 * sqrt(2 ln(1.25/delta)) * sensitivity_l1 / epsilon. */
pf_status pf_gaussian_sigma(double epsilon, double delta,
                            double sensitivity_l1, double* out);

/* true_answer + Normal(0, pf_gaussian_sigma(...)^2); delta must be > 0. */
pf_status pf_gaussian_mechanism(double true_answer, double sensitivity_l1,
                                double epsilon, double delta, pf_rng* rng,
                                double* out);

/* Picks an index with probability proportional to
 * exp(epsilon * utilities[i] / (2 * utility_sensitivity)). */
pf_status pf_exponential_mechanism(const double* utilities, size_t count,
                                   double utility_sensitivity, double epsilon,
                                   pf_rng* rng, size_t* chosen_index);

/* Above-threshold scan; flags must hold count ints. flags[i] = 1 marks a
 * reported-above query. Halts after max_reports positives; *flags_len is the
 * number of processed queries. Total privacy cost is epsilon. */
pf_status pf_sparse_vector(const double* answers, size_t count,
                           double threshold, double epsilon, int max_reports,
                           pf_rng* rng, int* flags, size_t* flags_len);

/* Block-decomposed release of block_fn: records are split into block_count
 * contiguous blocks, block_fn is applied to each, outputs are clamped to
 * [lo, hi], averaged, and Laplace((hi - lo)/(block_count * epsilon)) noise
 * is added. ctx is passed through to block_fn. */
pf_status pf_sample_and_aggregate(const double* records, size_t count,
                                  int block_count,
                                  double (*block_fn)(const double* block,
                                                     size_t block_len,
                                                     void* ctx),
                                  void* ctx, double lo, double hi,
                                  double epsilon, pf_rng* rng, double* out);

/* ---- Privacy budget ledger ---- */

typedef struct pf_ledger pf_ledger;

pf_status pf_ledger_new(double epsilon_cap, double delta_cap,
                        pf_ledger** out);
void pf_ledger_free(pf_ledger* ledger);

/* Appends a spend; PF_BUDGET_EXHAUSTED (ledger unchanged) if the additive
 * totals would exceed the cap. */
pf_status pf_ledger_charge(pf_ledger* ledger, double epsilon, double delta,
                           const char* label);
pf_status pf_ledger_spent(const pf_ledger* ledger, double* epsilon,
                          double* delta);
pf_status pf_ledger_remaining(const pf_ledger* ledger, double* epsilon,
                              double* delta);
pf_status pf_ledger_to_json(const pf_ledger* ledger, char** out);
pf_status pf_ledger_from_json(const char* json, pf_ledger** out);

/* ---- Datasets and fairness metrics ---- */

typedef struct pf_dataset pf_dataset;

/* CSV with header f1,...,fd,label,group; label and group binary. */
pf_status pf_dataset_from_csv(const char* path, pf_dataset** out);
void pf_dataset_free(pf_dataset* dataset);
pf_status pf_dataset_size(const pf_dataset* dataset, size_t* n,
                          size_t* dimension);

/* predictions holds len 0/1 entries aligned with the dataset's records. */
pf_status pf_demographic_parity_gap(const pf_dataset* dataset,
                                    const int* predictions, size_t len,
                                    double* out);
pf_status pf_equalized_odds_gap(const pf_dataset* dataset,
                                const int* predictions, size_t len,
                                double* out);

/* ---- Tradeoff bounds ---- */

pf_status pf_mse_lower_bound(double sigma2_theta, double n,
                             double sensitivity_l1, double epsilon,
                             double* out);
pf_status pf_utility_bound(double u0, long d, double epsilon, double n,
                           double c_utility, double* out);
pf_status pf_fairness_bound(double epsilon, double n, double p,
                            double c_fairness, double* out);

/* Standard error of a DP-noised proportion for a group of n_a records:
 * 1 / (epsilon * sqrt(n_a)). */
pf_status pf_group_noise_se(double n_a, double epsilon, double* out);

/* Sampling noise vs privacy noise for a proportion q over n_p records. */
pf_status pf_se_ratio(double q, double n_p, double epsilon, double* sampling,
                      double* dp_noise, double* ratio);

/* Both clauses strict: utility above u_threshold and fairness violation
 * below f_target. *out is 1 or 0. */
pf_status pf_feasible(double u0, double u_threshold, double f_target, long d,
                      double p, double epsilon, double n, double c_utility,
                      double c_fairness, int* out);

/* Smallest real n making both clauses satisfiable; PF_INFEASIBLE when
 * u0 <= u_threshold. */
pf_status pf_critical_sample_size(double u0, double u_threshold,
                                  double f_target, long d, double p,
                                  double epsilon, double c_utility,
                                  double c_fairness, double* out);

/* ---- Membership inference ---- */

pf_status pf_membership_posterior(double prior, double likelihood_in,
                                  double likelihood_out, double* out);

/* ---- Whole-pipeline runners (JSON/CSV out, free with pf_free_string) ----
 *
 * These are the library-side implementations of the CLI subcommands, exposed
 * so other frontends get identical behavior byte for byte.
 */

/* Applies a mechanism to a statistic of one CSV column (0-based index,
 * header skipped). stat is "count" (sensitivity 1) or "mean" (values clamped
 * to [lo, hi], sensitivity (hi - lo)/rows). mechanism is "laplace",
 * "gaussian" (delta must be > 0), or "sample_aggregate" (mean only; blocks
 * of the column, block means clamped to [lo, hi]). Writes a NoisyValue as
 * JSON. */
pf_status pf_run_mech(const char* csv_path, int column, const char* stat,
                      const char* mechanism, double epsilon, double delta,
                      double lo, double hi, int blocks, uint64_t seed,
                      char** out_json);

/* Closed-form bound report. When has_n is 0 the n-dependent fields are
 * omitted and only the critical sample size is reported. */
pf_status pf_run_bounds(double u0, double u_threshold, double f_target,
                        long d, double p, double epsilon, int has_n, double n,
                        double c_utility, double c_fairness, char** out_json);

/* Grid sweep; grid_json is {"epsilon": [...], "n": [...]}, evaluator is
 * "analytic" or "empirical" (seeds per cell apply to the latter). Writes the
 * sweep CSV. */
pf_status pf_run_sweep(const char* grid_json, double u0, double u_threshold,
                       double f_target, long d, double p, double c_utility,
                       double c_fairness, const char* evaluator, long seeds,
                       uint64_t seed, char** out_csv);

/* Membership-inference demo. scenario is "default" (strongly separating) or
 * "whole_town"; release is "deterministic" or "laplace" (epsilon
 * required). Writes a PosteriorReport as JSON. */
pf_status pf_run_attack_demo(const char* scenario, const char* release,
                             double epsilon, long trials, long resamples,
                             uint64_t seed, char** out_json);

/* One case-study variant ("plain", "fair", "dp", "dp_fair") on the default
 * synthetic population. epsilon <= 0 means no privacy target (required > 0
 * for the dp variants); batch_size 0 means full batch. Writes the evaluation
 * report as JSON. */
pf_status pf_run_casestudy(const char* variant, double epsilon, double delta,
                           double fairness_lambda, long epochs,
                           double learning_rate, double clip_norm,
                           long batch_size, uint64_t seed, char** out_json);

/* Repeated case-study runs over seed_count consecutive seeds starting at
 * first_seed, for each variant in the comma-separated list. Writes CSV with
 * header seed,variant,epsilon,acc0,acc1,fpr0,fpr1,dp_gap,eo_gap. */
pf_status pf_run_casestudy_seed_sweep(const char* variants, long seed_count,
                                      double epsilon, double delta,
                                      double fairness_lambda, long epochs,
                                      double learning_rate, double clip_norm,
                                      long batch_size, uint64_t first_seed,
                                      char** out_csv);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PRIVFAIR_H_ */
