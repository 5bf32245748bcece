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

// Test-only exhaustive oracles. These deliberately know nothing about the
// greedy implementations they check: they enumerate every integer allocation
// vector outright, so keep instances small (<= 6 users, capacities <= ~4).

#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "frugal/thresholds.hpp"

namespace frugal::oracle {

namespace detail {

inline void enumerate(const SampleSet& entries, std::size_t idx, int tasks, double cost,
                      const std::function<void(int, double)>& visit) {
  if (idx == entries.size()) {
    visit(tasks, cost);
    return;
  }
  for (int f = 0; f <= entries[idx].capacity; ++f)
    enumerate(entries, idx + 1, tasks + f, cost + f * entries[idx].bid, visit);
}

}  // namespace detail

// Cheapest total cost of exactly `target` tasks; nullopt when supply falls
// short.
inline std::optional<double> exhaustive_min_cost(const SampleSet& entries, int target) {
  std::optional<double> best;
  detail::enumerate(entries, 0, 0, 0.0, [&](int tasks, double cost) {
    if (tasks != target) return;
    if (!best || cost < *best) best = cost;
  });
  return best;
}

// Most tasks affordable when every user is paid its own bid.
inline int exhaustive_max_tasks(const SampleSet& entries, double budget) {
  int best = 0;
  detail::enumerate(entries, 0, 0, 0.0, [&](int tasks, double cost) {
    if (cost <= budget) best = std::max(best, tasks);
  });
  return best;
}

}  // namespace frugal::oracle
