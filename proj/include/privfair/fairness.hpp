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
// Group fairness metrics over binary predictions. All rates are plug-in
// estimates from counts; nothing is smoothed, so degenerate slices surface
// as errors instead of silently producing 0/0.

#ifndef PRIVFAIR_FAIRNESS_HPP_
#define PRIVFAIR_FAIRNESS_HPP_

#include <vector>

#include "privfair/dataset.hpp"

namespace privfair {

struct ConfusionCounts {
  long tp = 0;
  long fp = 0;
  long tn = 0;
  long fn = 0;

  long total() const { return tp + fp + tn + fn; }
  double accuracy() const;
  double positive_rate() const;
  // fpr/tpr throw DegenerateLabels when their label class is absent.
  double fpr() const;
  double tpr() const;
};

struct GroupConfusion {
  ConfusionCounts group[2];

  const ConfusionCounts& for_group(int g) const { return group[g]; }
};

// Confusion counts per group. Throws InvalidArgument on a length mismatch or
// non-binary prediction, EmptyGroup if either group has no records.
GroupConfusion confusion_by_group(const std::vector<int>& predictions,
                                  const LabeledDataset& data);

// |Pr[pred = 1 | group 0] - Pr[pred = 1 | group 1]|.
double demographic_parity_gap(const std::vector<int>& predictions,
                              const LabeledDataset& data);

// Alias used in some of the reporting surfaces.
double risk_difference(const std::vector<int>& predictions,
                       const LabeledDataset& data);

// max over true label y of |Pr[pred = 1 | y, group 0] - Pr[pred = 1 | y,
// group 1]|, i.e. the larger of the TPR gap and the FPR gap. Throws
// DegenerateLabels if either group lacks one of the label classes.
double equalized_odds_gap(const std::vector<int>& predictions,
                          const LabeledDataset& data);

}  // namespace privfair

#endif  // PRIVFAIR_FAIRNESS_HPP_
