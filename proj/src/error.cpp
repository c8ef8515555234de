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

#include "privfair/error.hpp"

namespace privfair {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "invalid_argument";
    case ErrorCode::kBudgetExhausted:
      return "budget_exhausted";
    case ErrorCode::kUnknownGroup:
      return "unknown_group";
    case ErrorCode::kEmptyGroup:
      return "empty_group";
    case ErrorCode::kDegenerateLabels:
      return "degenerate_labels";
    case ErrorCode::kInfeasible:
      return "infeasible";
    case ErrorCode::kNonFinite:
      return "non_finite";
    case ErrorCode::kBothLikelihoodsZero:
      return "both_likelihoods_zero";
    case ErrorCode::kParse:
      return "parse";
    case ErrorCode::kIo:
      return "io";
  }
  return "unknown";
}

}  // namespace privfair
