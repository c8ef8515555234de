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
// Command-line front end. Every subcommand is a thin flag parser over the
// pf_run_* entry points of the shared library, so the CLI and any other
// client of the C interface produce byte-identical output.
//
// Exit status: 0 success, 1 domain error (message on stderr carries the
// library error name), 2 usage error.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "privfair.h"

namespace {

constexpr std::uint64_t kDefaultSeed = 42;

// Flag beats PRIVFAIR_SEED beats the built-in default.
std::uint64_t resolve_seed(const CLI::Option* seed_opt, std::uint64_t flag) {
  if (seed_opt->count() > 0) return flag;
  if (const char* env = std::getenv("PRIVFAIR_SEED")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    std::cerr << "error: PRIVFAIR_SEED is not an unsigned integer: " << env
              << "\n";
    std::exit(2);
  }
  return kDefaultSeed;
}

int domain_error() {
  std::cerr << "error: " << pf_last_error() << "\n";
  return 1;
}

bool read_file(const std::string& path, std::string* out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  *out = buffer.str();
  return true;
}

// Emits to the --out file when given, stdout otherwise. File outputs get a
// one-line note on stdout naming the file and the seed that produced it.
int emit(const std::string& content, const std::string& out_path,
         bool note_seed, std::uint64_t seed) {
  std::string body = content;
  if (body.empty() || body.back() != '\n') body += '\n';
  if (out_path.empty()) {
    std::cout << body;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out || !(out << body)) {
    std::cerr << "error: io: cannot write " << out_path << "\n";
    return 1;
  }
  std::cout << "wrote " << out_path;
  if (note_seed) std::cout << " (seed " << seed << ")";
  std::cout << "\n";
  return 0;
}

// Owns a string allocated by the library.
struct OutString {
  char* value = nullptr;
  ~OutString() { pf_free_string(value); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Differential-privacy mechanisms and the privacy-utility-"
               "fairness tradeoff toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", pf_version());

  // ---- mech ----
  std::string mech_csv;
  int mech_column = 0;
  std::string mech_stat = "count";
  std::string mech_kind = "laplace";
  double mech_epsilon = 1.0;
  double mech_delta = 0.0;
  double mech_lo = 0.0;
  double mech_hi = 1.0;
  int mech_blocks = 10;
  std::uint64_t mech_seed = kDefaultSeed;
  std::string mech_out;
  CLI::App* mech = app.add_subcommand(
      "mech", "Apply a release mechanism to a statistic of one CSV column");
  mech->add_option("--in", mech_csv, "input CSV (header line skipped)")
      ->required();
  mech->add_option("--column", mech_column, "0-based column index");
  mech->add_option("--stat", mech_stat, "count or mean")
      ->check(CLI::IsMember({"count", "mean"}));
  mech->add_option("--mechanism", mech_kind,
                   "laplace, gaussian, or sample_aggregate")
      ->check(CLI::IsMember({"laplace", "gaussian", "sample_aggregate"}));
  mech->add_option("--epsilon", mech_epsilon, "privacy budget")->required();
  mech->add_option("--delta", mech_delta, "privacy failure probability");
  mech->add_option("--lo", mech_lo, "clamp lower bound for mean");
  mech->add_option("--hi", mech_hi, "clamp upper bound for mean");
  mech->add_option("--blocks", mech_blocks, "sample_aggregate block count");
  const CLI::Option* mech_seed_opt =
      mech->add_option("--seed", mech_seed, "random seed");
  mech->add_option("--out", mech_out, "output path (default stdout)");

  // ---- budget ----
  double budget_cap_epsilon = 1.0;
  double budget_cap_delta = 0.0;
  std::vector<double> budget_charges;
  std::string budget_in;
  std::string budget_out;
  CLI::App* budget = app.add_subcommand(
      "budget", "Create or load a privacy ledger and apply charges");
  CLI::Option* cap_opt = budget->add_option(
      "--cap-epsilon", budget_cap_epsilon, "epsilon cap for a new ledger");
  budget->add_option("--cap-delta", budget_cap_delta,
                     "delta cap for a new ledger");
  budget->add_option("--charge", budget_charges,
                     "epsilon charge, repeatable, applied in order");
  budget->add_option("--in", budget_in, "load ledger JSON instead of creating")
      ->excludes(cap_opt);
  budget->add_option("--out", budget_out, "write ledger JSON here");

  // ---- bounds ----
  double bounds_u0 = 0.0;
  double bounds_u_threshold = 0.5;
  double bounds_f_target = 0.0;
  long bounds_d = 1;
  double bounds_p = 0.0;
  double bounds_epsilon = 1.0;
  double bounds_n = 0.0;
  double bounds_cu = 1.0;
  double bounds_cf = 1.0;
  std::string bounds_out;
  CLI::App* bounds = app.add_subcommand(
      "bounds", "Closed-form tradeoff bounds and the critical sample size");
  bounds->add_option("--u0", bounds_u0, "noiseless utility")->required();
  bounds->add_option("--u-threshold", bounds_u_threshold,
                     "required utility level");
  bounds->add_option("--f-target", bounds_f_target,
                     "required fairness-violation level")
      ->required();
  bounds->add_option("--d", bounds_d, "model dimension")->required();
  bounds->add_option("--p", bounds_p, "minority fraction")->required();
  bounds->add_option("--epsilon", bounds_epsilon, "privacy budget")
      ->required();
  CLI::Option* bounds_n_opt =
      bounds->add_option("--n", bounds_n, "sample size to evaluate at");
  bounds->add_option("--c-utility", bounds_cu, "utility bound constant");
  bounds->add_option("--c-fairness", bounds_cf, "fairness bound constant");
  bounds->add_option("--out", bounds_out, "output path (default stdout)");

  // ---- sweep ----
  std::string sweep_grid;
  double sweep_u0 = 0.0;
  double sweep_u_threshold = 0.5;
  double sweep_f_target = 0.0;
  long sweep_d = 1;
  double sweep_p = 0.0;
  double sweep_cu = 1.0;
  double sweep_cf = 1.0;
  std::string sweep_evaluator = "analytic";
  long sweep_seeds = 5;
  std::uint64_t sweep_seed = kDefaultSeed;
  std::string sweep_out;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Evaluate a privacy/sample-size grid and emit the frontier CSV");
  sweep->add_option("--grid", sweep_grid,
                    "JSON file {\"epsilon\": [...], \"n\": [...]}")
      ->required();
  sweep->add_option("--u0", sweep_u0, "noiseless utility")->required();
  sweep->add_option("--u-threshold", sweep_u_threshold,
                    "required utility level");
  sweep->add_option("--f-target", sweep_f_target,
                    "required fairness-violation level")
      ->required();
  sweep->add_option("--d", sweep_d, "model dimension")->required();
  sweep->add_option("--p", sweep_p, "minority fraction")->required();
  sweep->add_option("--c-utility", sweep_cu, "utility bound constant");
  sweep->add_option("--c-fairness", sweep_cf, "fairness bound constant");
  sweep->add_option("--evaluator", sweep_evaluator, "analytic or empirical")
      ->check(CLI::IsMember({"analytic", "empirical"}));
  sweep->add_option("--seeds", sweep_seeds, "runs per cell (empirical)");
  const CLI::Option* sweep_seed_opt =
      sweep->add_option("--seed", sweep_seed, "random seed");
  sweep->add_option("--out", sweep_out, "output path (default stdout)");

  // ---- attack-demo ----
  std::string attack_scenario = "default";
  std::string attack_release = "deterministic";
  double attack_epsilon = 0.0;
  long attack_trials = 10000;
  long attack_resamples = 10000;
  std::uint64_t attack_seed = kDefaultSeed;
  std::string attack_out;
  CLI::App* attack = app.add_subcommand(
      "attack-demo",
      "Membership-inference posterior for an aggregate release");
  attack->add_option("--scenario", attack_scenario,
                     "default or whole_town")
      ->check(CLI::IsMember({"default", "whole_town"}));
  attack->add_option("--release", attack_release,
                     "deterministic or laplace")
      ->check(CLI::IsMember({"deterministic", "laplace"}));
  attack->add_option("--epsilon", attack_epsilon,
                     "privacy budget (laplace release)");
  attack->add_option("--trials", attack_trials, "simulated worlds");
  attack->add_option("--resamples", attack_resamples,
                     "attacker redraws per trial");
  const CLI::Option* attack_seed_opt =
      attack->add_option("--seed", attack_seed, "random seed");
  attack->add_option("--out", attack_out, "output path (default stdout)");

  // ---- casestudy ----
  std::string case_variant = "plain";
  double case_epsilon = 0.0;
  double case_delta = 1e-5;
  double case_lambda = 0.0;
  long case_epochs = 60;
  double case_lr = 0.5;
  double case_clip = 1.0;
  long case_batch = 0;
  long case_seeds = 1;
  std::uint64_t case_seed = kDefaultSeed;
  std::string case_out;
  CLI::App* casestudy = app.add_subcommand(
      "casestudy",
      "Train and evaluate the synthetic two-group pipeline");
  casestudy->add_option("--variant", case_variant,
                        "plain, fair, dp, or dp_fair (comma-separated list "
                        "allowed with --seeds > 1)");
  casestudy->add_option("--epsilon", case_epsilon,
                        "privacy target for dp variants (0 = none)");
  casestudy->add_option("--delta", case_delta, "privacy failure probability");
  casestudy->add_option("--lambda", case_lambda, "fairness penalty weight");
  casestudy->add_option("--epochs", case_epochs, "training epochs");
  casestudy->add_option("--lr", case_lr, "learning rate");
  casestudy->add_option("--clip", case_clip, "per-example gradient clip norm");
  casestudy->add_option("--batch", case_batch, "batch size (0 = full batch)");
  casestudy->add_option("--seeds", case_seeds,
                        "consecutive seeds; > 1 switches to CSV output");
  const CLI::Option* case_seed_opt =
      casestudy->add_option("--seed", case_seed, "first random seed");
  casestudy->add_option("--out", case_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  if (mech->parsed()) {
    const std::uint64_t seed = resolve_seed(mech_seed_opt, mech_seed);
    OutString out;
    if (pf_run_mech(mech_csv.c_str(), mech_column, mech_stat.c_str(),
                    mech_kind.c_str(), mech_epsilon, mech_delta, mech_lo,
                    mech_hi, mech_blocks, seed, &out.value) != PF_OK) {
      return domain_error();
    }
    return emit(out.value, mech_out, true, seed);
  }

  if (budget->parsed()) {
    pf_ledger* ledger = nullptr;
    if (!budget_in.empty()) {
      std::string text;
      if (!read_file(budget_in, &text)) {
        std::cerr << "error: io: cannot read " << budget_in << "\n";
        return 1;
      }
      if (pf_ledger_from_json(text.c_str(), &ledger) != PF_OK) {
        return domain_error();
      }
    } else if (pf_ledger_new(budget_cap_epsilon, budget_cap_delta, &ledger) !=
               PF_OK) {
      return domain_error();
    }

    int status = 0;
    for (std::size_t i = 0; i < budget_charges.size(); ++i) {
      const std::string label = "charge_" + std::to_string(i + 1);
      if (pf_ledger_charge(ledger, budget_charges[i], 0.0, label.c_str()) !=
          PF_OK) {
        std::cerr << "error: " << pf_last_error() << "\n";
        status = 1;
        break;
      }
    }
    OutString out;
    if (pf_ledger_to_json(ledger, &out.value) != PF_OK) {
      pf_ledger_free(ledger);
      return domain_error();
    }
    pf_ledger_free(ledger);
    const int emit_status = emit(out.value, budget_out, false, 0);
    return status != 0 ? status : emit_status;
  }

  if (bounds->parsed()) {
    OutString out;
    if (pf_run_bounds(bounds_u0, bounds_u_threshold, bounds_f_target,
                      bounds_d, bounds_p, bounds_epsilon,
                      bounds_n_opt->count() > 0 ? 1 : 0, bounds_n, bounds_cu,
                      bounds_cf, &out.value) != PF_OK) {
      return domain_error();
    }
    return emit(out.value, bounds_out, false, 0);
  }

  if (sweep->parsed()) {
    const std::uint64_t seed = resolve_seed(sweep_seed_opt, sweep_seed);
    std::string grid_text;
    if (!read_file(sweep_grid, &grid_text)) {
      std::cerr << "error: io: cannot read " << sweep_grid << "\n";
      return 1;
    }
    OutString out;
    if (pf_run_sweep(grid_text.c_str(), sweep_u0, sweep_u_threshold,
                     sweep_f_target, sweep_d, sweep_p, sweep_cu, sweep_cf,
                     sweep_evaluator.c_str(), sweep_seeds, seed,
                     &out.value) != PF_OK) {
      return domain_error();
    }
    return emit(out.value, sweep_out, sweep_evaluator == "empirical", seed);
  }

  if (attack->parsed()) {
    const std::uint64_t seed = resolve_seed(attack_seed_opt, attack_seed);
    OutString out;
    if (pf_run_attack_demo(attack_scenario.c_str(), attack_release.c_str(),
                           attack_epsilon, attack_trials, attack_resamples,
                           seed, &out.value) != PF_OK) {
      return domain_error();
    }
    return emit(out.value, attack_out, true, seed);
  }

  if (casestudy->parsed()) {
    const std::uint64_t seed = resolve_seed(case_seed_opt, case_seed);
    OutString out;
    if (case_seeds > 1) {
      if (pf_run_casestudy_seed_sweep(case_variant.c_str(), case_seeds,
                                      case_epsilon, case_delta, case_lambda,
                                      case_epochs, case_lr, case_clip,
                                      case_batch, seed, &out.value) != PF_OK) {
        return domain_error();
      }
    } else if (pf_run_casestudy(case_variant.c_str(), case_epsilon,
                                case_delta, case_lambda, case_epochs, case_lr,
                                case_clip, case_batch, seed,
                                &out.value) != PF_OK) {
      return domain_error();
    }
    return emit(out.value, case_out, true, seed);
  }

  std::cerr << "usage error: no subcommand given\n";
  return 2;
}
