// Copyright 2026 The FrugalSim Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frugal/generators.hpp"
#include "frugal/mechanisms.hpp"
#include "frugal/thresholds.hpp"
#include "frugal/types.hpp"

namespace frugal {

struct Deviation {
  DeclaredProfile declared;
  double utility = 0.0;
  double gain = 0.0;  // utility - truthful utility, exact arithmetic
};

struct DeviationReport {
  UserId user_id = 0;
  double truthful_utility = 0.0;
  std::vector<Deviation> deviations;
  double max_gain = 0.0;  // max over deviations, 0 for an empty grid
};

// Bids to probe for one user: multiplicative factors of the true cost plus
// values straddling every posted price observed in the truthful run. The
// outcome map is piecewise constant in the bid with breakpoints exactly at
// those prices, so straddling them covers the whole continuum.
std::vector<double> default_bid_grid(MechanismKind kind, const std::vector<UserProfile>& users,
                                     const MechanismParams& params, UserId user_id);

// Feasible (arrival, departure) reports spanning the user's true window:
// corners, midpoints and one-sided shrinks, deduplicated.
std::vector<std::pair<int, int>> default_time_grid(const UserProfile& truth);

// Replays the full auction once per deviated bid, everyone else fixed to
// `fixed_declarations` (defaults to truthful). Utilities are measured
// against the user's true cost.
DeviationReport test_cost_truthfulness(
    MechanismKind kind, const std::vector<UserProfile>& users, const MechanismParams& params,
    UserId user_id, const std::vector<double>& bid_grid,
    const std::optional<std::vector<DeclaredProfile>>& fixed_declarations = std::nullopt);

// Replays the general-interval auction once per (arrival, departure) report.
// Throws on a report outside the user's true window.
DeviationReport test_time_truthfulness(const std::vector<UserProfile>& users,
                                       const MechanismParams& params, UserId user_id,
                                       const std::vector<std::pair<int, int>>& time_grid);

struct IrViolation {
  UserId user_id = 0;
  std::string detail;
};

struct IrReport {
  bool pass = true;
  std::vector<IrViolation> violations;
};

// For a truthful outcome: every utility is non-negative and every winner's
// price covers its bid.
IrReport check_individual_rationality(const AuctionOutcome& outcome,
                                      const std::vector<UserProfile>& truths);

enum class SovereigntyResult { Pass, Fail, Vacuous };

// Drops the user's bid to the posted price it faced and replays; the user
// must win at least one task unless the stage quota was already exhausted at
// its decision (reported vacuous).
SovereigntyResult probe_consumer_sovereignty(MechanismKind kind,
                                             const std::vector<UserProfile>& users,
                                             const MechanismParams& params, UserId user_id);

// Most tasks purchasable paying each user its own bid within the budget
// (greedy over ascending bids; exact for this linear problem).
int max_tasks_under_budget(double budget, SampleSet sample);

// Half-supply guarantee of the proportional-share price: tasks purchasable
// at the returned price within the budget reach at least half the oracle
// maximum. Vacuously true when nothing is affordable.
bool check_bfm_half_supply(double budget, const SampleSet& sample);

struct ExperimentRow {
  std::uint64_t seed = 0;
  std::string mechanism;
  int horizon = 0;
  int tasks = 0;
  double lambda = 0.0;
  double delta = 0.0;
  double beta = 0.0;
  double total_payment = 0.0;
  double tasks_completed = 0.0;
  double price_per_task = 0.0;
  std::optional<double> opt_cost_L;
  std::optional<double> opt_cost_2L;
  std::optional<double> idealistic_ratio;
  std::optional<double> realistic_ratio;
  double winner_cost = 0.0;  // sum of f_i * c_i over winners (social efficiency)
};

struct ExperimentResult {
  std::vector<ExperimentRow> rows;

  double mean(const std::string& mechanism, double ExperimentRow::* field) const;
  double mean_opt(const std::string& mechanism,
                  std::optional<double> ExperimentRow::* field) const;
  double fraction_completed(const std::string& mechanism, int tasks) const;
};

struct ExperimentPlan {
  std::vector<MechanismKind> mechanisms;
  bool include_random = false;
  int random_trials = 50;
  double delta = 2.0;
  double beta = 10.0;
};

// Runs every planned mechanism on one concrete user population
// (zero-interval reports for the arrival-decided mechanisms, full windows
// for the general one), prices the offline optimum at L and 2L, and
// optionally averages the random comparator. One row per mechanism.
std::vector<ExperimentRow> evaluate_instance(const std::vector<UserProfile>& users, int tasks,
                                             int horizon, double lambda,
                                             std::uint64_t seed_label, const ExperimentPlan& plan);

// evaluate_instance over generated populations, one per seed, in parallel.
// Rows come out in (seed, mechanism) order regardless of scheduling.
ExperimentResult run_experiment(const InstanceConfig& config, const ExperimentPlan& plan,
                                const std::vector<std::uint64_t>& seeds);

}  // namespace frugal
