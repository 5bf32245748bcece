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

#include "frugal/baselines.hpp"

#include <algorithm>
#include <stdexcept>

#include "frugal/thresholds.hpp"
#include "frugal/util.hpp"

namespace frugal {

OfflineSolution offline_optimal(const std::vector<UserProfile>& users, int target) {
  if (target < 0) throw std::invalid_argument("target must be >= 0");
  SampleSet sample;
  sample.reserve(users.size());
  for (const auto& u : users) sample.push_back({u.id, u.capacity, u.unit_cost});
  GreedyAllocation greedy = greedy_min_cost_allocation(static_cast<double>(target), sample);
  OfflineSolution solution;
  solution.allocation = greedy.selected;
  solution.total_cost = greedy.total_cost;
  solution.tasks = greedy.tasks;
  solution.sufficient = greedy.sufficient;
  return solution;
}

AuctionOutcome random_threshold_run(const std::vector<DeclaredProfile>& stream, int tasks,
                                    int horizon, double threshold) {
  if (!(threshold > 0)) throw std::invalid_argument("threshold must be positive");
  std::vector<const DeclaredProfile*> ordered;
  ordered.reserve(stream.size());
  for (const auto& d : stream) ordered.push_back(&d);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const DeclaredProfile* a, const DeclaredProfile* b) {
                     return a->declared_arrival < b->declared_arrival;
                   });

  AuctionOutcome outcome;
  outcome.initial_threshold = threshold;
  int allocated = 0;
  for (const DeclaredProfile* d : ordered) {
    if (d->declared_arrival > horizon) break;
    outcome.log.push_back({d->declared_arrival, LogEventKind::Arrival, d->user_id});
    int f = 0;
    double p = 0.0;
    if (d->bid <= threshold && allocated < tasks) {
      f = std::min(d->capacity, tasks - allocated);
      p = threshold;
      allocated += f;
      outcome.winners.push_back(d->user_id);
    }
    outcome.results[d->user_id] = {f, p};
    outcome.log.push_back({d->declared_arrival, LogEventKind::Decision, d->user_id, f, p,
                           threshold, 0.0, static_cast<double>(tasks - allocated + f)});
  }
  outcome.tasks_allocated = allocated;
  // One multiplication, not a per-user sum: payment == threshold * tasks
  // holds exactly in floating point.
  outcome.total_payment = threshold * allocated;
  return outcome;
}

RandomBaselineStats random_baseline_average(const std::vector<DeclaredProfile>& stream, int tasks,
                                            int horizon, int trials, Rng rng) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  RandomBaselineStats stats;
  for (int trial = 0; trial < trials; ++trial) {
    Rng sub = rng.substream(static_cast<std::uint64_t>(trial));
    double threshold = sub.uniform(1.0, 10.0);
    AuctionOutcome outcome = random_threshold_run(stream, tasks, horizon, threshold);
    stats.mean_payment += outcome.total_payment;
    stats.mean_tasks += outcome.tasks_allocated;
    stats.mean_price_per_task +=
        outcome.tasks_allocated > 0 ? outcome.total_payment / outcome.tasks_allocated : 0.0;
  }
  stats.mean_payment /= trials;
  stats.mean_tasks /= trials;
  stats.mean_price_per_task /= trials;
  return stats;
}

FrugalityReport frugality_report(const AuctionOutcome& outcome,
                                 const std::vector<UserProfile>& all_users, int tasks) {
  FrugalityReport report;
  report.payment = outcome.total_payment;
  report.tasks_completed = outcome.tasks_allocated;
  OfflineSolution at_target = offline_optimal(all_users, tasks);
  if (at_target.sufficient) {
    report.opt_cost_L = at_target.total_cost;
    report.idealistic_ratio = report.payment / at_target.total_cost;
  }
  OfflineSolution at_double = offline_optimal(all_users, 2 * tasks);
  if (at_double.sufficient) {
    report.opt_cost_2L = at_double.total_cost;
    report.realistic_ratio = report.payment / at_double.total_cost;
  }
  return report;
}

}  // namespace frugal
