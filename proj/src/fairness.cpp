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

#include "privfair/fairness.hpp"

#include <algorithm>
#include <cmath>

#include "privfair/error.hpp"

namespace privfair {

double ConfusionCounts::accuracy() const {
  return static_cast<double>(tp + tn) / static_cast<double>(total());
}

double ConfusionCounts::positive_rate() const {
  return static_cast<double>(tp + fp) / static_cast<double>(total());
}

double ConfusionCounts::fpr() const {
  require(fp + tn > 0, ErrorCode::kDegenerateLabels,
          "no negative-label records in group");
  return static_cast<double>(fp) / static_cast<double>(fp + tn);
}

double ConfusionCounts::tpr() const {
  require(tp + fn > 0, ErrorCode::kDegenerateLabels,
          "no positive-label records in group");
  return static_cast<double>(tp) / static_cast<double>(tp + fn);
}

GroupConfusion confusion_by_group(const std::vector<int>& predictions,
                                  const LabeledDataset& data) {
  require(predictions.size() == data.size(), ErrorCode::kInvalidArgument,
          "predictions and dataset differ in length");

  GroupConfusion confusion;
  for (std::size_t i = 0; i < data.size(); ++i) {
    int pred = predictions[i];
    require(pred == 0 || pred == 1, ErrorCode::kInvalidArgument,
            "predictions must be 0 or 1");
    const Record& r = data.records()[i];
    ConfusionCounts& c = confusion.group[r.group];
    if (r.label == 1) {
      (pred == 1 ? c.tp : c.fn) += 1;
    } else {
      (pred == 1 ? c.fp : c.tn) += 1;
    }
  }
  for (int g = 0; g < 2; ++g) {
    require(confusion.group[g].total() > 0, ErrorCode::kEmptyGroup,
            "group " + std::to_string(g) + " has no records");
  }
  return confusion;
}

double demographic_parity_gap(const std::vector<int>& predictions,
                              const LabeledDataset& data) {
  GroupConfusion c = confusion_by_group(predictions, data);
  return std::abs(c.group[0].positive_rate() - c.group[1].positive_rate());
}

double risk_difference(const std::vector<int>& predictions,
                       const LabeledDataset& data) {
  return demographic_parity_gap(predictions, data);
}

double equalized_odds_gap(const std::vector<int>& predictions,
                          const LabeledDataset& data) {
  GroupConfusion c = confusion_by_group(predictions, data);
  double tpr_gap = std::abs(c.group[0].tpr() - c.group[1].tpr());
  double fpr_gap = std::abs(c.group[0].fpr() - c.group[1].fpr());
  return std::max(tpr_gap, fpr_gap);
}

}  // namespace privfair
