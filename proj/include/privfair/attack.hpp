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
// Membership inference against an aggregate release. A database of smokers
// and non-smokers publishes its smoker count; an attacker who knows that a
// target person carries a marker making them smoke with high probability asks
// how much the release reveals about whether the target is in the database.
// With an exact release the posterior can approach certainty; with a Laplace
// release the posterior-to-prior odds provably stay within e^epsilon.

#ifndef PRIVFAIR_ATTACK_HPP_
#define PRIVFAIR_ATTACK_HPP_

#include <nlohmann/json.hpp>

#include "privfair/random.hpp"

namespace privfair {

// World being simulated. The two membership hypotheses hold the database size
// fixed: the target either occupies one slot or that slot is filled by one
// more draw from the background population, so the hypotheses differ by a
// single record either way.
//
// The defaults are a strongly separating instance: the background smoking
// rate is so low that the target's presence shifts the released count
// detectably. A variant that keeps the separation small is available as
// whole_town().
struct Scenario {
  long population_size = 1000;
  long database_size = 10;
  double marker_smoking_rate = 0.99;
  double background_smoking_rate = 1e-4;
  double target_in_database_prior = 0.5;
  // Realized smoking status of the target in the simulated world. The
  // attacker's model is unaffected: it always treats the target's status as
  // Bernoulli(marker_smoking_rate).
  bool target_smokes = true;

  // Large database, common smoking habit: the single-record shift drowns in
  // background variation and the release reveals little.
  static Scenario whole_town();
};

void validate_scenario(const Scenario& scenario);

enum class ReleaseKind {
  kDeterministic,  // exact smoker count
  kLaplace,        // smoker count + Laplace(1 / epsilon)
};

const char* release_kind_name(ReleaseKind kind);

struct PosteriorReport {
  double prior = 0.0;
  double posterior = 0.0;    // mean over trials
  double odds_ratio = 0.0;   // posterior odds / prior odds, from the mean
  bool epsilon_bound_satisfied = false;
  double max_odds_ratio = 0.0;  // worst trial
  ReleaseKind release = ReleaseKind::kDeterministic;
  double epsilon = 0.0;  // meaningful only for the Laplace release
  long trials = 0;
  long resamples = 0;
};

// Bayes update for membership: prior * L_in / (prior * L_in + (1 - prior) *
// L_out). Degenerate priors (0 or 1) return unchanged; both likelihoods zero
// is an error (the observation is impossible under the caller's model).
double membership_posterior(double prior, double likelihood_in,
                            double likelihood_out);

// Runs the attack for `trials` simulated worlds (the target in the database,
// smoking per scenario.target_smokes). Each trial estimates the likelihood of
// the observed release under both membership hypotheses by Monte-Carlo over
// `resamples` redraws of the non-target records, scoring both hypotheses on
// the same redraws. For the Laplace release that pairing bounds every trial's
// posterior odds within e^epsilon by construction, mirroring the guarantee
// being demonstrated. A trial whose observation none of the redraws can
// explain under either hypothesis contributes the prior (uninformative).
//
// epsilon is required for the Laplace release and ignored otherwise.
// epsilon_bound_satisfied reports whether every trial's odds ratio stayed
// within [e^-epsilon, e^epsilon] (allowing 1e-9 relative rounding headroom);
// it is always false for the deterministic release, where no such bound is
// in force.
PosteriorReport smoking_demo(const Scenario& scenario, ReleaseKind release,
                             double epsilon, Rng& rng, long trials = 10000,
                             long resamples = 10000);

// JSON form of the report. Non-finite odds ratios (a posterior saturated at
// 0 or 1) serialize as null.
nlohmann::ordered_json report_json(const PosteriorReport& report,
                                   std::uint64_t seed);

}  // namespace privfair

#endif  // PRIVFAIR_ATTACK_HPP_
