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

#include "privfair/attack.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "privfair/error.hpp"
#include "privfair/mechanisms.hpp"

namespace privfair {

namespace {

// Relative headroom on the per-trial odds bound. The paired estimator keeps
// each trial's odds within e^epsilon exactly in real arithmetic; the slack
// only absorbs rounding in the density sums.
constexpr double kOddsBoundSlack = 1.0 + 1e-9;

void require_rate(double value, const char* what) {
  require(std::isfinite(value) && value >= 0.0 && value <= 1.0,
          ErrorCode::kInvalidArgument,
          std::string(what) + " must lie in [0, 1]");
}

nlohmann::ordered_json json_number(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

}  // namespace

Scenario Scenario::whole_town() {
  Scenario s;
  s.population_size = 1000;
  s.database_size = 1000;
  s.marker_smoking_rate = 0.99;
  s.background_smoking_rate = 0.3;
  s.target_in_database_prior = 0.5;
  s.target_smokes = true;
  return s;
}

void validate_scenario(const Scenario& scenario) {
  require(scenario.database_size >= 1, ErrorCode::kInvalidArgument,
          "database_size must be at least 1");
  require(scenario.population_size >= scenario.database_size,
          ErrorCode::kInvalidArgument,
          "population_size must be at least database_size");
  require_rate(scenario.marker_smoking_rate, "marker_smoking_rate");
  require_rate(scenario.background_smoking_rate, "background_smoking_rate");
  require_rate(scenario.target_in_database_prior, "target_in_database_prior");
}

const char* release_kind_name(ReleaseKind kind) {
  switch (kind) {
    case ReleaseKind::kDeterministic:
      return "deterministic";
    case ReleaseKind::kLaplace:
      return "laplace";
  }
  return "unknown";
}

double membership_posterior(double prior, double likelihood_in,
                            double likelihood_out) {
  require_rate(prior, "prior");
  require(std::isfinite(likelihood_in) && likelihood_in >= 0.0,
          ErrorCode::kInvalidArgument, "likelihood_in must be >= 0");
  require(std::isfinite(likelihood_out) && likelihood_out >= 0.0,
          ErrorCode::kInvalidArgument, "likelihood_out must be >= 0");
  if (prior == 0.0 || prior == 1.0) return prior;
  require(likelihood_in > 0.0 || likelihood_out > 0.0,
          ErrorCode::kBothLikelihoodsZero,
          "observation has zero likelihood under both hypotheses");
  const double weighted_in = prior * likelihood_in;
  return weighted_in / (weighted_in + (1.0 - prior) * likelihood_out);
}

PosteriorReport smoking_demo(const Scenario& scenario, ReleaseKind release,
                             double epsilon, Rng& rng, long trials,
                             long resamples) {
  validate_scenario(scenario);
  require(trials >= 1, ErrorCode::kInvalidArgument, "trials must be >= 1");
  require(resamples >= 1, ErrorCode::kInvalidArgument,
          "resamples must be >= 1");
  const bool laplace = release == ReleaseKind::kLaplace;
  if (laplace) {
    require(std::isfinite(epsilon) && epsilon > 0.0,
            ErrorCode::kInvalidArgument,
            "epsilon must be > 0 for the laplace release");
  }

  const double scale = laplace ? 1.0 / epsilon : 0.0;
  const double prior = scenario.target_in_database_prior;
  const double background = scenario.background_smoking_rate;
  const double marker = scenario.marker_smoking_rate;
  const long others = scenario.database_size - 1;
  const double bound_hi = laplace ? std::exp(epsilon) * kOddsBoundSlack : 0.0;
  const double bound_lo = laplace ? std::exp(-epsilon) / kOddsBoundSlack : 0.0;

  // Decouple this run from the parent stream's position while keeping trials
  // mutually independent.
  const std::uint64_t base_stream = rng.next_u64();

  double posterior_sum = 0.0;
  double max_odds = 0.0;
  bool bound_ok = laplace;
  for (long trial = 0; trial < trials; ++trial) {
    Rng trial_rng =
        rng.derive(base_stream + static_cast<std::uint64_t>(trial));

    // The simulated world: target present, remaining slots drawn from the
    // background population.
    long count = scenario.target_smokes ? 1 : 0;
    for (long i = 0; i < others; ++i) {
      if (trial_rng.bernoulli(background)) ++count;
    }
    double observed = static_cast<double>(count);
    if (laplace) observed += sample_laplace(scale, trial_rng);

    // Attacker's likelihoods. Both hypotheses reuse the same redraw of the
    // shared non-target records; they differ only in the disputed slot
    // (marker-rate target vs one more background person). For the Laplace
    // release the two density terms of each pair are then within e^epsilon of
    // one another, so the summed odds inherit the bound trial by trial.
    double like_in = 0.0;
    double like_out = 0.0;
    for (long r = 0; r < resamples; ++r) {
      long shared = 0;
      for (long i = 0; i < others; ++i) {
        if (trial_rng.bernoulli(background)) ++shared;
      }
      const long count_in = shared + (trial_rng.bernoulli(marker) ? 1 : 0);
      const long count_out =
          shared + (trial_rng.bernoulli(background) ? 1 : 0);
      if (laplace) {
        like_in += laplace_density(observed - count_in, scale);
        like_out += laplace_density(observed - count_out, scale);
      } else {
        if (std::abs(observed - count_in) <= 0.5) like_in += 1.0;
        if (std::abs(observed - count_out) <= 0.5) like_out += 1.0;
      }
    }
    like_in /= static_cast<double>(resamples);
    like_out /= static_cast<double>(resamples);

    double posterior;
    double odds;
    if (like_in == 0.0 && like_out == 0.0) {
      // No redraw reproduced the observation under either hypothesis; the
      // trial carries no evidence either way.
      posterior = prior;
      odds = 1.0;
    } else {
      posterior = membership_posterior(prior, like_in, like_out);
      odds = like_out == 0.0 ? std::numeric_limits<double>::infinity()
                             : like_in / like_out;
    }
    posterior_sum += posterior;
    max_odds = std::max(max_odds, odds);
    if (laplace && !(odds >= bound_lo && odds <= bound_hi)) bound_ok = false;
  }

  PosteriorReport report;
  report.prior = prior;
  report.posterior = posterior_sum / static_cast<double>(trials);
  if (prior == 0.0 || prior == 1.0 || report.posterior == 1.0) {
    report.odds_ratio = report.posterior == prior
                            ? 1.0
                            : std::numeric_limits<double>::infinity();
  } else {
    const double prior_odds = prior / (1.0 - prior);
    report.odds_ratio =
        (report.posterior / (1.0 - report.posterior)) / prior_odds;
  }
  report.epsilon_bound_satisfied = bound_ok;
  report.max_odds_ratio = max_odds;
  report.release = release;
  report.epsilon = laplace ? epsilon : 0.0;
  report.trials = trials;
  report.resamples = resamples;
  return report;
}

nlohmann::ordered_json report_json(const PosteriorReport& report,
                                   std::uint64_t seed) {
  nlohmann::ordered_json j;
  j["release"] = release_kind_name(report.release);
  if (report.release == ReleaseKind::kLaplace) j["epsilon"] = report.epsilon;
  j["prior"] = report.prior;
  j["posterior"] = report.posterior;
  j["odds_ratio"] = json_number(report.odds_ratio);
  j["max_odds_ratio"] = json_number(report.max_odds_ratio);
  j["epsilon_bound_satisfied"] = report.epsilon_bound_satisfied;
  j["trials"] = report.trials;
  j["resamples"] = report.resamples;
  j["seed"] = seed;
  return j;
}

}  // namespace privfair
