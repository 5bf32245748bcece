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

#include "frugal/rng.hpp"
#include "frugal/types.hpp"

namespace frugal {

struct OfflineSolution {
  std::vector<std::pair<UserId, int>> allocation;
  double total_cost = 0.0;
  int tasks = 0;
  bool sufficient = false;
};

// Cheapest allocation of `target` tasks with full knowledge of true costs.
// Greedy by ascending cost is exact for this linear problem.
OfflineSolution offline_optimal(const std::vector<UserProfile>& users, int target);

// Uninformed comparator: a fixed posted price for the whole horizon. Every
// arrival bidding at or below it wins as many tasks as remain, paid at the
// threshold itself so the rule stays bid-independent.
AuctionOutcome random_threshold_run(const std::vector<DeclaredProfile>& stream, int tasks,
                                    int horizon, double threshold);

struct RandomBaselineStats {
  double mean_payment = 0.0;
  double mean_tasks = 0.0;
  double mean_price_per_task = 0.0;
};

// Averages random_threshold_run over `trials` thresholds drawn U[1, 10].
RandomBaselineStats random_baseline_average(const std::vector<DeclaredProfile>& stream, int tasks,
                                            int horizon, int trials, Rng rng);

}  // namespace frugal
