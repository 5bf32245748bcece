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

#include <string>
#include <string_view>
#include <vector>

#include "frugal/types.hpp"

namespace frugal {

// The horizon splits into floor(log2 T) + 1 stages whose end times and task
// quotas double from T / 2^floor(log2 T) and L / 2^floor(log2 T) up to (T, L).
// Quotas are kept as exact reals; they can be fractional when L is not
// divisible by the leading power of two.
struct Stage {
  int end_time = 0;
  double stage_tasks = 0.0;
};

struct StageSchedule {
  std::vector<Stage> stages;
};

StageSchedule build_stage_schedule(int horizon, int tasks);

struct MechanismParams {
  int tasks = 0;     // L
  int horizon = 0;   // T
  double beta = 10;  // posted price before the first boundary
  double delta = 2;  // budget overestimation factor, > 1
};

// Single-item-per-user auction under the zero arrival-departure interval
// model. Arrivals win one task at the posted price while the stage quota
// lasts; each stage boundary re-learns the price as the quota-th lowest bid
// among everyone seen so far. Requires unit capacities and collapsed
// windows; throws std::invalid_argument otherwise.
AuctionOutcome homo_omz(const std::vector<DeclaredProfile>& stream, const MechanismParams& params);

// Multi-task variant: an arrival takes min(capacity, remaining stage quota)
// tasks at the posted price; boundaries re-learn the price via the budget
// feasible rule over everyone seen so far. Zero-interval windows required.
AuctionOutcome hetero_omz(const std::vector<DeclaredProfile>& stream,
                          const MechanismParams& params);

// General interval model. Users stay online over their declared window and
// are reconsidered every step (non-winners) and at every boundary (everyone,
// in descending capacity order), where an allocation/price pair is replaced
// only when the new total payment strictly beats the old one. Departed users
// feed the sample; payment finalizes at departure.
AuctionOutcome hetero_omg(const std::vector<DeclaredProfile>& stream,
                          const MechanismParams& params);

enum class MechanismKind { HomoOmz, HeteroOmz, HeteroOmg };

AuctionOutcome run_mechanism(MechanismKind kind, const std::vector<DeclaredProfile>& stream,
                             const MechanismParams& params);

std::string mechanism_name(MechanismKind kind);
MechanismKind mechanism_from_name(std::string_view name);

}  // namespace frugal
