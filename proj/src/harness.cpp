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

#include "frugal/harness.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "frugal/baselines.hpp"
#include "frugal/util.hpp"

namespace frugal {

namespace {

// Arrival-decided mechanisms see collapsed windows; the general-interval
// mechanism sees the full truthful reports.
std::vector<DeclaredProfile> mechanism_declarations(MechanismKind kind,
                                                    const std::vector<UserProfile>& users) {
  if (kind == MechanismKind::HeteroOmg) return truthful_declarations(users);
  return zero_interval_declarations(users);
}

const UserProfile& find_user(const std::vector<UserProfile>& users, UserId user_id) {
  for (const auto& u : users)
    if (u.id == user_id) return u;
  throw std::invalid_argument("unknown user id " + std::to_string(user_id));
}

std::size_t find_declaration(const std::vector<DeclaredProfile>& stream, UserId user_id) {
  for (std::size_t i = 0; i < stream.size(); ++i)
    if (stream[i].user_id == user_id) return i;
  throw std::invalid_argument("unknown user id " + std::to_string(user_id));
}

}  // namespace

std::vector<double> default_bid_grid(MechanismKind kind, const std::vector<UserProfile>& users,
                                     const MechanismParams& params, UserId user_id) {
  const UserProfile& truth = find_user(users, user_id);
  AuctionOutcome truthful = run_mechanism(kind, mechanism_declarations(kind, users), params);

  std::set<double> grid;
  for (double factor : {0.25, 0.5, 0.9, 0.99, 1.01, 1.1, 2.0, 4.0})
    grid.insert(factor * truth.unit_cost);

  // The outcome is piecewise constant in the bid with breakpoints at the
  // posted prices, so probing each price and a value just past it covers
  // every bid the continuum could offer.
  std::set<double> prices{truthful.initial_threshold};
  for (const auto& e : truthful.log)
    if (e.kind == LogEventKind::Boundary) prices.insert(e.threshold);
  for (double p : prices) {
    if (p <= 0) continue;
    grid.insert(p);
    grid.insert(p * (1.0 - 1e-9));
    grid.insert(p * (1.0 + 1e-9));
  }

  std::vector<double> out;
  for (double b : grid)
    if (b > 0) out.push_back(b);
  return out;
}

std::vector<std::pair<int, int>> default_time_grid(const UserProfile& truth) {
  int a = truth.arrival;
  int d = truth.departure;
  int mid = a + (d - a) / 2;
  std::set<std::pair<int, int>> grid{{a, d},     {a, a},   {d, d},        {mid, d},
                                     {a, mid},   {mid, mid}};
  if (a + 1 <= d) {
    grid.insert({a + 1, d});
    grid.insert({a, d - 1});
  }
  return {grid.begin(), grid.end()};
}

DeviationReport test_cost_truthfulness(
    MechanismKind kind, const std::vector<UserProfile>& users, const MechanismParams& params,
    UserId user_id, const std::vector<double>& bid_grid,
    const std::optional<std::vector<DeclaredProfile>>& fixed_declarations) {
  const UserProfile& truth = find_user(users, user_id);
  std::vector<DeclaredProfile> base =
      fixed_declarations ? *fixed_declarations : mechanism_declarations(kind, users);
  std::size_t slot = find_declaration(base, user_id);

  AuctionOutcome baseline = run_mechanism(kind, base, params);
  DeviationReport report;
  report.user_id = user_id;
  report.truthful_utility =
      utility(truth.unit_cost, baseline.allocation_of(user_id), baseline.price_of(user_id));

  for (double bid : bid_grid) {
    std::vector<DeclaredProfile> deviated = base;
    deviated[slot].bid = bid;
    AuctionOutcome outcome = run_mechanism(kind, deviated, params);
    Deviation dev;
    dev.declared = deviated[slot];
    dev.utility =
        utility(truth.unit_cost, outcome.allocation_of(user_id), outcome.price_of(user_id));
    dev.gain = dev.utility - report.truthful_utility;
    report.max_gain = std::max(report.max_gain, dev.gain);
    report.deviations.push_back(dev);
  }
  return report;
}

DeviationReport test_time_truthfulness(const std::vector<UserProfile>& users,
                                       const MechanismParams& params, UserId user_id,
                                       const std::vector<std::pair<int, int>>& time_grid) {
  const UserProfile& truth = find_user(users, user_id);
  std::vector<DeclaredProfile> base = truthful_declarations(users);
  std::size_t slot = find_declaration(base, user_id);

  AuctionOutcome baseline = hetero_omg(base, params);
  DeviationReport report;
  report.user_id = user_id;
  report.truthful_utility =
      utility(truth.unit_cost, baseline.allocation_of(user_id), baseline.price_of(user_id));

  for (auto [arrival, departure] : time_grid) {
    DeclaredProfile candidate{user_id, arrival, departure, truth.capacity, truth.unit_cost};
    validate_declaration(candidate, truth);
    std::vector<DeclaredProfile> deviated = base;
    deviated[slot] = candidate;
    AuctionOutcome outcome = hetero_omg(deviated, params);
    Deviation dev;
    dev.declared = candidate;
    dev.utility =
        utility(truth.unit_cost, outcome.allocation_of(user_id), outcome.price_of(user_id));
    dev.gain = dev.utility - report.truthful_utility;
    report.max_gain = std::max(report.max_gain, dev.gain);
    report.deviations.push_back(dev);
  }
  return report;
}

IrReport check_individual_rationality(const AuctionOutcome& outcome,
                                      const std::vector<UserProfile>& truths) {
  IrReport report;
  for (const auto& u : truths) {
    int tasks = outcome.allocation_of(u.id);
    double price = outcome.price_of(u.id);
    double util = utility(u.unit_cost, tasks, price);
    if (util < 0) {
      report.pass = false;
      report.violations.push_back(
          {u.id, "negative utility " + fmt_number(util) + " at price " + fmt_number(price)});
    }
    if (tasks > 0 && price < u.unit_cost) {
      report.pass = false;
      report.violations.push_back({u.id, "price " + fmt_number(price) + " below bid " +
                                             fmt_number(u.unit_cost)});
    }
  }
  return report;
}

SovereigntyResult probe_consumer_sovereignty(MechanismKind kind,
                                             const std::vector<UserProfile>& users,
                                             const MechanismParams& params, UserId user_id) {
  std::vector<DeclaredProfile> base = mechanism_declarations(kind, users);
  std::size_t slot = find_declaration(base, user_id);

  AuctionOutcome truthful = run_mechanism(kind, base, params);
  const LogEvent* decision = nullptr;
  for (const auto& e : truthful.log) {
    if (e.kind == LogEventKind::Decision && e.user_id == user_id) {
      decision = &e;
      break;
    }
  }
  if (decision == nullptr) return SovereigntyResult::Vacuous;
  if (!(decision->residual_before > 0)) return SovereigntyResult::Vacuous;

  std::vector<DeclaredProfile> lowered = base;
  lowered[slot].bid = decision->threshold;
  AuctionOutcome replay = run_mechanism(kind, lowered, params);
  return replay.allocation_of(user_id) >= 1 ? SovereigntyResult::Pass : SovereigntyResult::Fail;
}

int max_tasks_under_budget(double budget, SampleSet sample) {
  std::sort(sample.begin(), sample.end(), [](const SampleEntry& a, const SampleEntry& b) {
    if (a.bid != b.bid) return a.bid < b.bid;
    return a.user_id < b.user_id;
  });
  double remaining = budget;
  int tasks = 0;
  for (const auto& entry : sample) {
    if (remaining < entry.bid) break;
    int take = std::min(entry.capacity, static_cast<int>(std::floor(remaining / entry.bid)));
    tasks += take;
    remaining -= take * entry.bid;
  }
  return tasks;
}

bool check_bfm_half_supply(double budget, const SampleSet& sample) {
  if (budget < 0) throw std::invalid_argument("budget must be >= 0");
  int oracle_max = max_tasks_under_budget(budget, sample);
  if (oracle_max == 0) return true;

  // Sentinel fallback is unreachable once anything is affordable.
  double price = budget_feasible_price(budget, sample, -1.0);
  if (price < 0) return false;

  int cap = static_cast<int>(std::floor(budget / price));
  SampleSet sorted = sample;
  std::sort(sorted.begin(), sorted.end(), [](const SampleEntry& a, const SampleEntry& b) {
    if (a.bid != b.bid) return a.bid < b.bid;
    return a.user_id < b.user_id;
  });
  int purchasable = 0;
  for (const auto& entry : sorted) {
    if (entry.bid > price || purchasable >= cap) break;
    purchasable += std::min(entry.capacity, cap - purchasable);
  }
  return purchasable >= (oracle_max + 1) / 2;
}

double ExperimentResult::mean(const std::string& mechanism,
                              double ExperimentRow::* field) const {
  double sum = 0.0;
  int count = 0;
  for (const auto& row : rows) {
    if (row.mechanism != mechanism) continue;
    sum += row.*field;
    ++count;
  }
  return count == 0 ? 0.0 : sum / count;
}

double ExperimentResult::mean_opt(const std::string& mechanism,
                                  std::optional<double> ExperimentRow::* field) const {
  double sum = 0.0;
  int count = 0;
  for (const auto& row : rows) {
    if (row.mechanism != mechanism) continue;
    if (!(row.*field)) continue;
    sum += *(row.*field);
    ++count;
  }
  return count == 0 ? 0.0 : sum / count;
}

double ExperimentResult::fraction_completed(const std::string& mechanism, int tasks) const {
  int total = 0;
  int completed = 0;
  for (const auto& row : rows) {
    if (row.mechanism != mechanism) continue;
    ++total;
    if (row.tasks_completed >= tasks) ++completed;
  }
  return total == 0 ? 0.0 : static_cast<double>(completed) / total;
}

std::vector<ExperimentRow> evaluate_instance(const std::vector<UserProfile>& users, int tasks,
                                             int horizon, double lambda,
                                             std::uint64_t seed_label,
                                             const ExperimentPlan& plan) {
  MechanismParams params{tasks, horizon, plan.beta, plan.delta};
  OfflineSolution opt_L = offline_optimal(users, tasks);
  OfflineSolution opt_2L = offline_optimal(users, 2 * tasks);

  auto fill_common = [&](ExperimentRow& row) {
    row.seed = seed_label;
    row.horizon = horizon;
    row.tasks = tasks;
    row.lambda = lambda;
    row.delta = plan.delta;
    row.beta = plan.beta;
    if (opt_L.sufficient) {
      row.opt_cost_L = opt_L.total_cost;
      row.idealistic_ratio = row.total_payment / opt_L.total_cost;
    }
    if (opt_2L.sufficient) {
      row.opt_cost_2L = opt_2L.total_cost;
      row.realistic_ratio = row.total_payment / opt_2L.total_cost;
    }
  };

  std::vector<ExperimentRow> rows;
  rows.reserve(plan.mechanisms.size() + (plan.include_random ? 1 : 0));
  for (MechanismKind kind : plan.mechanisms) {
    AuctionOutcome outcome = run_mechanism(kind, mechanism_declarations(kind, users), params);
    ExperimentRow row;
    row.mechanism = mechanism_name(kind);
    row.total_payment = outcome.total_payment;
    row.tasks_completed = outcome.tasks_allocated;
    row.price_per_task =
        outcome.tasks_allocated > 0 ? outcome.total_payment / outcome.tasks_allocated : 0.0;
    for (const auto& u : users) row.winner_cost += outcome.allocation_of(u.id) * u.unit_cost;
    fill_common(row);
    rows.push_back(std::move(row));
  }

  if (plan.include_random) {
    RandomBaselineStats stats =
        random_baseline_average(zero_interval_declarations(users), tasks, horizon,
                                plan.random_trials, Rng(seed_label).substream(9000));
    ExperimentRow row;
    row.mechanism = "random";
    row.total_payment = stats.mean_payment;
    row.tasks_completed = stats.mean_tasks;
    row.price_per_task = stats.mean_price_per_task;
    fill_common(row);
    rows.push_back(std::move(row));
  }
  return rows;
}

ExperimentResult run_experiment(const InstanceConfig& config, const ExperimentPlan& plan,
                                const std::vector<std::uint64_t>& seeds) {
  std::size_t rows_per_seed = plan.mechanisms.size() + (plan.include_random ? 1 : 0);
  ExperimentResult result;
  result.rows.resize(seeds.size() * rows_per_seed);

  parallel_for(seeds.size(), [&](std::size_t s) {
    InstanceConfig cfg = config;
    cfg.seed = seeds[s];
    std::vector<UserProfile> users = generate_users(cfg);
    std::vector<ExperimentRow> rows =
        evaluate_instance(users, cfg.tasks, cfg.horizon, cfg.lambda, cfg.seed, plan);
    for (std::size_t m = 0; m < rows.size(); ++m) result.rows[s * rows_per_seed + m] = rows[m];
  });
  return result;
}

}  // namespace frugal
