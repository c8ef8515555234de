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

#include "support/oracles.hpp"

#include <algorithm>
#include <cmath>

namespace privfair::testing {

std::vector<std::size_t> brute_force_pareto(
    const std::vector<TradeoffPoint>& points) {
  std::vector<std::size_t> front;
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < points.size() && !dominated; ++j) {
      if (j != i) dominated = dominates(points[j], points[i]);
    }
    if (!dominated) front.push_back(i);
  }
  return front;
}

std::vector<double> finite_difference_gradient(
    const std::function<double(std::span<const double>)>& f,
    std::span<const double> x, double h) {
  std::vector<double> point(x.begin(), x.end());
  std::vector<double> grad(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double saved = point[j];
    point[j] = saved + h;
    const double up = f(point);
    point[j] = saved - h;
    const double down = f(point);
    point[j] = saved;
    grad[j] = (up - down) / (2.0 * h);
  }
  return grad;
}

double max_relative_error(std::span<const double> got,
                          std::span<const double> want) {
  double worst = 0.0;
  for (std::size_t j = 0; j < got.size(); ++j) {
    const double scale = std::max(1.0, std::abs(want[j]));
    worst = std::max(worst, std::abs(got[j] - want[j]) / scale);
  }
  return worst;
}

}  // namespace privfair::testing
