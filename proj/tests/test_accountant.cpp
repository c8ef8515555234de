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

#include <string>

#include <doctest.h>
#include <nlohmann/json.hpp>

#include "privfair/accountant.hpp"
#include "privfair/error.hpp"

namespace privfair {
namespace {

TEST_SUITE("accountant") {

TEST_CASE("charging appends entries and accumulates totals") {
  BudgetLedger ledger({1.0, 1e-4});
  ledger = charge(ledger, 0.25, 0.0, "query_a");
  ledger = charge(ledger, 0.5, 5e-5, "query_b");
  CHECK(ledger.entries().size() == 2);
  CHECK(ledger.entries()[0].label == "query_a");
  CHECK(ledger.entries()[1].label == "query_b");
  CHECK(ledger.spent_epsilon() == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(ledger.spent_delta() == doctest::Approx(5e-5).epsilon(1e-15));
  CHECK(ledger.remaining_epsilon() == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("charge is a value operation, the input ledger is unchanged") {
  const BudgetLedger base({1.0, 0.0});
  const BudgetLedger charged = charge(base, 0.7, 0.0, "q");
  CHECK(base.entries().empty());
  CHECK(base.spent_epsilon() == 0.0);
  CHECK(charged.spent_epsilon() == 0.7);
}

TEST_CASE("a rejected charge throws and leaves state behind the cap") {
  BudgetLedger ledger({1.0, 0.0});
  ledger = charge(ledger, 1.0, 0.0, "all_of_it");
  try {
    charge(ledger, 0.1, 0.0, "too_much");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kBudgetExhausted);
  }
  CHECK(ledger.spent_epsilon() == 1.0);
  CHECK(ledger.entries().size() == 1);
}

TEST_CASE("charges summing exactly to the cap are accepted") {
  BudgetLedger ledger({1.0, 0.0});
  ledger = charge(ledger, 0.5, 0.0, "a");
  ledger = charge(ledger, 0.25, 0.0, "b");
  ledger = charge(ledger, 0.25, 0.0, "c");
  CHECK(ledger.spent_epsilon() == 1.0);
  CHECK(ledger.remaining_epsilon() == 0.0);
  CHECK_THROWS_AS(charge(ledger, 1e-9, 0.0, "over"), Error);
}

TEST_CASE("delta overruns are rejected independently of epsilon") {
  BudgetLedger ledger({10.0, 1e-5});
  ledger = charge(ledger, 0.1, 1e-5, "spends_all_delta");
  CHECK_THROWS_AS(charge(ledger, 0.1, 1e-9, "delta_overrun"), Error);
  CHECK_NOTHROW(charge(ledger, 0.1, 0.0, "epsilon_only"));
}

TEST_CASE("zero charges are accepted and recorded") {
  BudgetLedger ledger({1.0, 0.0});
  ledger = charge(ledger, 0.0, 0.0, "free");
  CHECK(ledger.entries().size() == 1);
  CHECK(ledger.spent_epsilon() == 0.0);
}

TEST_CASE("negative or non-finite charges are invalid") {
  const BudgetLedger ledger({1.0, 1e-4});
  CHECK_THROWS_AS(charge(ledger, -0.1, 0.0, "neg"), Error);
  CHECK_THROWS_AS(charge(ledger, 0.1, -1e-9, "neg_delta"), Error);
  CHECK_THROWS_AS(
      charge(ledger, std::numeric_limits<double>::infinity(), 0.0, "inf"),
      Error);
}

TEST_CASE("json round trip preserves cap, entries, and totals") {
  BudgetLedger ledger({2.0, 1e-4});
  ledger = charge(ledger, 0.5, 2e-5, "first");
  ledger = charge(ledger, 0.125, 0.0, "second");

  const nlohmann::ordered_json j = ledger.to_json();
  CHECK(j["cap"]["epsilon"] == 2.0);
  CHECK(j["cap"]["delta"] == 1e-4);
  REQUIRE(j["entries"].size() == 2);
  CHECK(j["entries"][0]["label"] == "first");
  CHECK(j["entries"][0]["epsilon"] == 0.5);
  CHECK(j["entries"][0]["delta"] == 2e-5);

  const BudgetLedger back = BudgetLedger::from_json(j);
  CHECK(back.cap().epsilon == ledger.cap().epsilon);
  CHECK(back.cap().delta == ledger.cap().delta);
  CHECK(back.spent_epsilon() == ledger.spent_epsilon());
  CHECK(back.spent_delta() == ledger.spent_delta());
  REQUIRE(back.entries().size() == 2);
  CHECK(back.entries()[1].label == "second");
  CHECK(back.entries()[1].epsilon == 0.125);
}

TEST_CASE("from_json rejects malformed documents") {
  CHECK_THROWS_AS(BudgetLedger::from_json(nlohmann::json::parse("{}")),
                  Error);
  CHECK_THROWS_AS(BudgetLedger::from_json(nlohmann::json::parse(
                      R"({"cap": {"epsilon": 1.0}})")),
                  Error);
  // Entries that overrun their own cap cannot reload.
  CHECK_THROWS_AS(BudgetLedger::from_json(nlohmann::json::parse(
                      R"({"cap": {"epsilon": 1.0, "delta": 0.0},
                          "entries": [{"label": "x", "epsilon": 2.0,
                                       "delta": 0.0}]})")),
                  Error);
}

TEST_CASE("ledger construction validates the cap") {
  CHECK_THROWS_AS(BudgetLedger({-1.0, 0.0}), Error);
  CHECK_THROWS_AS(BudgetLedger({1.0, 1.5}), Error);
  // A cap with nothing to spend is rejected outright, same as any other
  // degenerate budget.
  CHECK_THROWS_AS(BudgetLedger({0.0, 0.0}), Error);
}

TEST_CASE("group budget policy maps groups to budgets") {
  GroupBudgetPolicy policy;
  policy.set("adults", 0.5);
  policy.set("minors", 0.1);
  CHECK(policy.has("adults"));
  CHECK_FALSE(policy.has("seniors"));
  CHECK(group_epsilon(policy, "minors") == 0.1);
  try {
    group_epsilon(policy, "seniors");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kUnknownGroup);
  }
}

}  // TEST_SUITE

}  // namespace
}  // namespace privfair
