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

#ifndef PRIVFAIR_SWEEP_HPP_
#define PRIVFAIR_SWEEP_HPP_

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "privfair/casestudy.hpp"
#include "privfair/frontier.hpp"

namespace privfair {

// Cartesian grid over privacy levels and sample sizes.
struct SweepGrid {
  std::vector<double> epsilons;
  std::vector<long> ns;
};

// Parses {"epsilon": [...], "n": [...]}; n entries must be positive integers.
SweepGrid grid_from_json(const nlohmann::json& j);

enum class SweepEvaluator {
  kAnalytic,   // closed-form utility and fairness-violation bounds
  kEmpirical,  // DP case-study runs, averaged over seeds
};

// Knobs for the empirical evaluator. Grid cells override the synthetic group
// sizes (n split by the feasibility spec's minority fraction) and the
// training target_epsilon; everything else is taken as configured here.
struct EmpiricalSweepConfig {
  SyntheticSpec synthetic;
  TrainConfig train;
  long seeds = 5;
};

struct SweepRow {
  TradeoffPoint point;
  bool feasible = false;
  bool pareto = false;
};

// Evaluates every (epsilon, n) cell, in grid order (epsilon outer, n inner).
// The feasible flag always comes from the closed-form clauses; the pareto
// flag marks the nondominated rows of this sweep. The empirical evaluator
// derives each cell's run seeds from (train.seed, cell index, seed index),
// so results do not depend on evaluation order.
std::vector<SweepRow> sweep(const SweepGrid& grid, const FeasibilitySpec& spec,
                            SweepEvaluator evaluator,
                            const BoundConstants& consts,
                            const EmpiricalSweepConfig& empirical = {});

// CSV with header epsilon,n,p,d,utility,fairness_violation,feasible,pareto;
// one row per cell, flags as 0/1, numbers at 9 significant digits.
std::string sweep_to_csv(const std::vector<SweepRow>& rows);

}  // namespace privfair

#endif  // PRIVFAIR_SWEEP_HPP_
