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

#include "frugal/thresholds.hpp"

#include <algorithm>
#include <cmath>

#include "frugal/util.hpp"

namespace frugal {

namespace {

// Ties broken by user id so permuting the input never changes a result.
void sort_by_bid(SampleSet& sample) {
  std::sort(sample.begin(), sample.end(), [](const SampleEntry& a, const SampleEntry& b) {
    if (a.bid != b.bid) return a.bid < b.bid;
    return a.user_id < b.user_id;
  });
}

}  // namespace

double lth_lowest_bid_threshold(double stage_tasks, SampleSet sample, double beta) {
  int rank = std::max(1, ceil_tasks(stage_tasks));
  if (static_cast<int>(sample.size()) < rank) return beta;
  sort_by_bid(sample);
  return sample[rank - 1].bid;
}

GreedyAllocation greedy_min_cost_allocation(double target, SampleSet sample) {
  GreedyAllocation result;
  int wanted = ceil_tasks(target);
  if (wanted == 0) {
    result.sufficient = true;
    return result;
  }
  sort_by_bid(sample);
  for (const auto& entry : sample) {
    if (result.tasks >= wanted) break;
    int take = std::min(entry.capacity, wanted - result.tasks);
    result.selected.emplace_back(entry.user_id, take);
    result.tasks += take;
    result.total_cost += take * entry.bid;
  }
  result.sufficient = result.tasks >= wanted;
  return result;
}

double budget_feasible_price(double budget, SampleSet sample, double beta) {
  sort_by_bid(sample);
  double price = beta;
  bool accepted = false;
  int allocated = 0;
  for (const auto& entry : sample) {
    if (!(entry.bid <= budget / (allocated + 1))) break;
    price = entry.bid;
    accepted = true;
    int cap = static_cast<int>(std::floor(budget / price));
    allocated += std::min(entry.capacity, cap - allocated);
  }
  return accepted ? price : beta;
}

double get_bid_threshold2(double stage_tasks, double delta, double beta, SampleSet sample) {
  GreedyAllocation budget_probe = greedy_min_cost_allocation(delta * stage_tasks, sample);
  if (!budget_probe.sufficient) return beta;
  return budget_feasible_price(budget_probe.total_cost, std::move(sample), beta);
}

}  // namespace frugal
