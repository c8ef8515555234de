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

#include "privfair/accountant.hpp"

#include <cmath>
#include <utility>

#include "privfair/error.hpp"

namespace privfair {

BudgetLedger::BudgetLedger(PrivacyBudget cap) : cap_(cap) {
  validate_budget(cap_);
}

nlohmann::ordered_json BudgetLedger::to_json() const {
  nlohmann::ordered_json j;
  j["cap"] = {{"epsilon", cap_.epsilon}, {"delta", cap_.delta}};
  j["entries"] = nlohmann::ordered_json::array();
  for (const LedgerEntry& e : entries_) {
    j["entries"].push_back(
        {{"label", e.label}, {"epsilon", e.epsilon}, {"delta", e.delta}});
  }
  return j;
}

BudgetLedger BudgetLedger::from_json(const nlohmann::json& j) {
  try {
    PrivacyBudget cap{j.at("cap").at("epsilon").get<double>(),
                      j.at("cap").at("delta").get<double>()};
    BudgetLedger ledger(cap);
    for (const auto& e : j.at("entries")) {
      ledger = charge(ledger, e.at("epsilon").get<double>(),
                      e.at("delta").get<double>(),
                      e.at("label").get<std::string>());
    }
    return ledger;
  } catch (const nlohmann::json::exception& ex) {
    fail(ErrorCode::kParse, std::string("malformed ledger JSON: ") + ex.what());
  } catch (const Error& ex) {
    // Re-tag validation failures: a stored ledger that breaks its own
    // invariants is a corrupt document, not a runtime budget event.
    fail(ErrorCode::kParse, std::string("invalid ledger JSON: ") + ex.what());
  }
}

BudgetLedger charge(const BudgetLedger& ledger, double epsilon, double delta,
                    std::string_view label) {
  require(std::isfinite(epsilon) && epsilon >= 0.0, ErrorCode::kInvalidArgument,
          "charge epsilon must be finite and nonnegative");
  require(std::isfinite(delta) && delta >= 0.0, ErrorCode::kInvalidArgument,
          "charge delta must be finite and nonnegative");

  double new_epsilon = ledger.spent_epsilon() + epsilon;
  double new_delta = ledger.spent_delta() + delta;
  if (new_epsilon > ledger.cap().epsilon || new_delta > ledger.cap().delta) {
    fail(ErrorCode::kBudgetExhausted,
         "charge (" + std::to_string(epsilon) + ", " + std::to_string(delta) +
             ") would exceed cap (" + std::to_string(ledger.cap().epsilon) +
             ", " + std::to_string(ledger.cap().delta) + "); spent (" +
             std::to_string(ledger.spent_epsilon()) + ", " +
             std::to_string(ledger.spent_delta()) + ")");
  }

  BudgetLedger next = ledger;
  next.entries_.push_back({std::string(label), epsilon, delta});
  next.spent_epsilon_ = new_epsilon;
  next.spent_delta_ = new_delta;
  return next;
}

void GroupBudgetPolicy::set(const std::string& group, double epsilon) {
  require(std::isfinite(epsilon) && epsilon > 0.0, ErrorCode::kInvalidArgument,
          "group epsilon must be finite and positive");
  per_group_[group] = epsilon;
}

bool GroupBudgetPolicy::has(const std::string& group) const {
  return per_group_.count(group) != 0;
}

double group_epsilon(const GroupBudgetPolicy& policy,
                     const std::string& group) {
  auto it = policy.assignments().find(group);
  require(it != policy.assignments().end(), ErrorCode::kUnknownGroup,
          "no epsilon assigned to group \"" + group + "\"");
  return it->second;
}

}  // namespace privfair
