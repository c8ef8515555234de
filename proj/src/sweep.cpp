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

#include "privfair/sweep.hpp"

#include <cmath>
#include <cstdio>

#include "privfair/error.hpp"

namespace privfair {

namespace {

std::vector<double> parse_number_list(const nlohmann::json& j,
                                      const char* key) {
  require(j.contains(key) && j.at(key).is_array() && !j.at(key).empty(),
          ErrorCode::kParse,
          std::string("grid JSON needs a nonempty array '") + key + "'");
  std::vector<double> values;
  for (const auto& v : j.at(key)) {
    require(v.is_number(), ErrorCode::kParse,
            std::string("grid '") + key + "' entries must be numbers");
    values.push_back(v.get<double>());
  }
  return values;
}

// Mean DP case-study metrics for one grid cell.
TradeoffPoint empirical_cell(double epsilon, long n,
                             const FeasibilitySpec& spec,
                             const EmpiricalSweepConfig& config,
                             std::size_t cell_index) {
  const long n1 = std::lround(static_cast<double>(n) * spec.p);
  const long n0 = n - n1;
  require(n0 >= 1 && n1 >= 1, ErrorCode::kInvalidArgument,
          "grid cell splits into an empty group; adjust n or p");

  SyntheticSpec synthetic = config.synthetic;
  synthetic.n0 = n0;
  synthetic.n1 = n1;
  TrainConfig train = config.train;
  train.target_epsilon = epsilon;
  require(config.seeds >= 1, ErrorCode::kInvalidArgument,
          "empirical sweep needs at least one seed");

  const Rng cell_rng = Rng(config.train.seed).derive(cell_index);
  double accuracy_sum = 0.0;
  double gap_sum = 0.0;
  for (long s = 0; s < config.seeds; ++s) {
    train.seed = cell_rng.derive(static_cast<std::uint64_t>(s)).seed();
    const CasestudyResult result =
        run_casestudy(synthetic, train, Variant::kDp);
    const double overall =
        (result.report.accuracy0 * static_cast<double>(n0) +
         result.report.accuracy1 * static_cast<double>(n1)) /
        static_cast<double>(n);
    accuracy_sum += overall;
    gap_sum += result.report.demographic_parity_gap;
  }

  TradeoffPoint point;
  point.epsilon = epsilon;
  point.utility = accuracy_sum / static_cast<double>(config.seeds);
  point.fairness_violation = gap_sum / static_cast<double>(config.seeds);
  point.n = n;
  point.p = spec.p;
  point.d = spec.d;
  return point;
}

void append_number(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  out += buf;
}

}  // namespace

SweepGrid grid_from_json(const nlohmann::json& j) {
  require(j.is_object(), ErrorCode::kParse, "grid JSON must be an object");
  SweepGrid grid;
  grid.epsilons = parse_number_list(j, "epsilon");
  for (double e : grid.epsilons) {
    require(std::isfinite(e) && e > 0.0, ErrorCode::kParse,
            "grid epsilons must be positive");
  }
  for (double v : parse_number_list(j, "n")) {
    require(std::isfinite(v) && v >= 1.0 && v == std::floor(v),
            ErrorCode::kParse, "grid n entries must be positive integers");
    grid.ns.push_back(static_cast<long>(v));
  }
  return grid;
}

std::vector<SweepRow> sweep(const SweepGrid& grid, const FeasibilitySpec& spec,
                            SweepEvaluator evaluator,
                            const BoundConstants& consts,
                            const EmpiricalSweepConfig& empirical) {
  require(!grid.epsilons.empty() && !grid.ns.empty(),
          ErrorCode::kInvalidArgument, "sweep grid must be nonempty");

  std::vector<SweepRow> rows;
  rows.reserve(grid.epsilons.size() * grid.ns.size());
  std::size_t cell_index = 0;
  for (double epsilon : grid.epsilons) {
    for (long n : grid.ns) {
      SweepRow row;
      if (evaluator == SweepEvaluator::kAnalytic) {
        row.point.epsilon = epsilon;
        row.point.utility = utility_bound(spec.u0, spec.d, epsilon,
                                          static_cast<double>(n), consts);
        row.point.fairness_violation = fairness_bound(
            epsilon, static_cast<double>(n), spec.p, consts);
        row.point.n = n;
        row.point.p = spec.p;
        row.point.d = spec.d;
      } else {
        row.point =
            empirical_cell(epsilon, n, spec, empirical, cell_index);
      }
      row.feasible =
          feasible(spec, epsilon, static_cast<double>(n), consts);
      rows.push_back(row);
      ++cell_index;
    }
  }

  std::vector<TradeoffPoint> points;
  points.reserve(rows.size());
  for (const SweepRow& row : rows) points.push_back(row.point);
  for (std::size_t idx : pareto_front_indices(points)) {
    rows[idx].pareto = true;
  }
  return rows;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  std::string out = "epsilon,n,p,d,utility,fairness_violation,feasible,pareto\n";
  for (const SweepRow& row : rows) {
    append_number(out, row.point.epsilon);
    out += ',';
    out += std::to_string(row.point.n);
    out += ',';
    append_number(out, row.point.p);
    out += ',';
    out += std::to_string(row.point.d);
    out += ',';
    append_number(out, row.point.utility);
    out += ',';
    append_number(out, row.point.fairness_violation);
    out += ',';
    out += row.feasible ? '1' : '0';
    out += ',';
    out += row.pareto ? '1' : '0';
    out += '\n';
  }
  return out;
}

}  // namespace privfair
