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

#include <vector>

#include "frugal/types.hpp"

namespace frugal {

// One observed user available for threshold learning.
struct SampleEntry {
  UserId user_id = 0;
  int capacity = 0;
  double bid = 0.0;
};

// Order-insensitive: every operation sorts internally by (bid, user_id).
using SampleSet = std::vector<SampleEntry>;

struct GreedyAllocation {
  // (user, tasks) in ascending-bid order; the last entry is truncated so the
  // totals hit the requested target exactly when supply allows.
  std::vector<std::pair<UserId, int>> selected;
  double total_cost = 0.0;
  int tasks = 0;
  bool sufficient = false;
};

// Posted price equal to the k-th lowest sample bid where k = ceil(stage
// quota). Returns beta when the sample is too small to rank.
double lth_lowest_bid_threshold(double stage_tasks, SampleSet sample, double beta);

// Cheapest way to buy ceil(target) tasks from the sample, paying each user
// its own bid. Insufficient supply is reported, not an error.
GreedyAllocation greedy_min_cost_allocation(double target, SampleSet sample);

// Proportional-share pricing: walk bids in ascending order and keep raising
// the common price p to the current bid while p still pays everyone accepted
// so far plus one more task within the budget. Each accepted user takes
// min(capacity, floor(budget / p) - tasks so far). Returns the last accepted
// bid, or beta when even the cheapest bid exceeds the budget.
double budget_feasible_price(double budget, SampleSet sample, double beta);

// Learns a stage's posted price: overestimate the budget as the cheapest
// cost of delta * stage quota tasks, then price it with the proportional
// share rule. Falls back to beta while the sample cannot cover the target.
double get_bid_threshold2(double stage_tasks, double delta, double beta, SampleSet sample);

}  // namespace frugal
