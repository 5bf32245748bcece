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

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace frugal {

using UserId = int;

// A user's true type: window [arrival, departure] within {1..T}, the number
// of tasks it can perform, and its private per-task cost.
struct UserProfile {
  UserId id = 0;
  int arrival = 0;
  int departure = 0;
  int capacity = 0;
  double unit_cost = 0.0;

  bool operator==(const UserProfile&) const = default;
};

// The report a user submits to the auction. The window may shrink relative
// to the truth (never announce earlier arrival / later departure) and the
// bid may differ from the cost; the task count cannot be faked.
struct DeclaredProfile {
  UserId user_id = 0;
  int declared_arrival = 0;
  int declared_departure = 0;
  int capacity = 0;
  double bid = 0.0;

  bool operator==(const DeclaredProfile&) const = default;
};

// Validates field invariants against the horizon; returns the profile
// unchanged on success, throws std::invalid_argument otherwise.
UserProfile validate_profile(const UserProfile& p, int horizon);

// Checks the strategy-space constraint a <= a^ <= d^ <= d plus capacity
// equality against the underlying true profile.
void validate_declaration(const DeclaredProfile& declared, const UserProfile& truth);

DeclaredProfile truthful_declaration(const UserProfile& p);
std::vector<DeclaredProfile> truthful_declarations(const std::vector<UserProfile>& users);

// Zero-interval reports for mechanisms that decide at arrival: the user
// announces at its true arrival with the window collapsed to that step.
std::vector<DeclaredProfile> zero_interval_declarations(const std::vector<UserProfile>& users);

// f * (p - c); zero for losers regardless of price.
double utility(double true_cost, int tasks, double price);

enum class LogEventKind { Arrival, Decision, Update, Departure, Boundary };

// One line of the per-step trace. Which fields are meaningful depends on
// the kind:
//   Arrival    user_id
//   Decision   user_id, tasks, price, threshold (in force), residual_before
//   Update     user_id, tasks, price, threshold (in force)
//   Departure  user_id, tasks, price (finalized)
//   Boundary   threshold (new), stage_tasks (new quota)
struct LogEvent {
  int time = 0;
  LogEventKind kind = LogEventKind::Arrival;
  UserId user_id = -1;
  int tasks = 0;
  double price = 0.0;
  double threshold = 0.0;
  double stage_tasks = 0.0;
  double residual_before = 0.0;
};

std::string format_log_event(const LogEvent& e);

struct UserResult {
  int tasks = 0;
  double price = 0.0;
};

struct AuctionOutcome {
  // Every user that appeared in the stream, losers included (tasks == 0).
  std::map<UserId, UserResult> results;
  // Selection order of the winner set S.
  std::vector<UserId> winners;
  std::vector<LogEvent> log;
  int tasks_allocated = 0;
  double total_payment = 0.0;
  double initial_threshold = 0.0;

  bool is_winner(UserId id) const;
  int allocation_of(UserId id) const;
  double price_of(UserId id) const;
  double payment_of(UserId id) const;
  // Posted price governing decisions at step t (the initial threshold until
  // the first boundary strictly before t).
  double threshold_in_force(int t) const;
  std::string serialize_log() const;
};

// Sum of allocations over a subset of the outcome's users.
// Throws std::invalid_argument on an id the outcome never saw.
int allocation_total(const AuctionOutcome& outcome, const std::vector<UserId>& subset);

struct FrugalityReport {
  double payment = 0.0;
  int tasks_completed = 0;
  // Absent when the offline instance cannot supply the respective target.
  std::optional<double> opt_cost_L;
  std::optional<double> opt_cost_2L;
  std::optional<double> idealistic_ratio;
  std::optional<double> realistic_ratio;
};

// Payment measured against the cheapest offline allocations of L and 2L
// tasks over the users' true costs.
FrugalityReport frugality_report(const AuctionOutcome& outcome,
                                 const std::vector<UserProfile>& all_users, int tasks);

}  // namespace frugal
