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
// Privacy budget accounting under basic composition: spends add up, and a
// ledger never admits a charge that would push the additive total past its
// cap. Tighter composition analyses are deliberately out of scope.

#ifndef PRIVFAIR_ACCOUNTANT_HPP_
#define PRIVFAIR_ACCOUNTANT_HPP_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "privfair/mechanisms.hpp"

namespace privfair {

struct LedgerEntry {
  std::string label;
  double epsilon = 0.0;
  double delta = 0.0;
};

// Append-only record of privacy spends against a fixed cap. Charging is a
// value operation (see charge below): it produces a new ledger and never
// mutates the input, so a rejected charge cannot corrupt shared state.
class BudgetLedger {
 public:
  explicit BudgetLedger(PrivacyBudget cap);

  const PrivacyBudget& cap() const { return cap_; }
  const std::vector<LedgerEntry>& entries() const { return entries_; }

  // Additive totals over the entries (basic composition).
  double spent_epsilon() const { return spent_epsilon_; }
  double spent_delta() const { return spent_delta_; }

  double remaining_epsilon() const { return cap_.epsilon - spent_epsilon_; }
  double remaining_delta() const { return cap_.delta - spent_delta_; }

  // Serialization schema:
  //   {"cap": {"epsilon": E, "delta": D},
  //    "entries": [{"label": L, "epsilon": e, "delta": d}, ...]}
  nlohmann::ordered_json to_json() const;
  static BudgetLedger from_json(const nlohmann::json& j);

 private:
  friend BudgetLedger charge(const BudgetLedger&, double, double,
                             std::string_view);

  PrivacyBudget cap_;
  std::vector<LedgerEntry> entries_;
  double spent_epsilon_ = 0.0;
  double spent_delta_ = 0.0;
};

// Returns a copy of the ledger with one more entry appended. Throws
// BudgetExhausted (leaving the input untouched) if the new additive totals
// would exceed the cap in either component. Zero charges are accepted.
BudgetLedger charge(const BudgetLedger& ledger, double epsilon, double delta,
                    std::string_view label);

// Group-specific epsilon assignments, e.g. a looser budget for a group whose
// statistics would otherwise drown in noise. Each assignment funds its own
// ledger; there is no global cap the per-group budgets draw down.
class GroupBudgetPolicy {
 public:
  GroupBudgetPolicy() = default;

  void set(const std::string& group, double epsilon);
  bool has(const std::string& group) const;
  const std::map<std::string, double>& assignments() const { return per_group_; }

 private:
  std::map<std::string, double> per_group_;
};

// Epsilon assigned to the group; throws UnknownGroup when absent.
double group_epsilon(const GroupBudgetPolicy& policy, const std::string& group);

}  // namespace privfair

#endif  // PRIVFAIR_ACCOUNTANT_HPP_
