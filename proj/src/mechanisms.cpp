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

#include "frugal/mechanisms.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "frugal/thresholds.hpp"
#include "frugal/util.hpp"

namespace frugal {

StageSchedule build_stage_schedule(int horizon, int tasks) {
  if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
  if (tasks < 1) throw std::invalid_argument("task number must be >= 1");
  int leading = floor_log2(horizon);
  StageSchedule schedule;
  schedule.stages.reserve(leading + 1);
  for (int i = 0; i <= leading; ++i) {
    // 2^(i - leading) scaling is exact in binary floating point, so the last
    // stage lands on (T, L) with no drift.
    int end = static_cast<int>(std::floor(std::ldexp(static_cast<double>(horizon), i - leading)));
    double quota = std::ldexp(static_cast<double>(tasks), i - leading);
    schedule.stages.push_back(Stage{end, quota});
  }
  return schedule;
}

namespace {

void validate_stream(const std::vector<DeclaredProfile>& stream, const MechanismParams& params) {
  if (params.tasks < 1 || params.horizon < 1)
    throw std::invalid_argument("task number and horizon must be >= 1");
  if (!(params.beta > 0)) throw std::invalid_argument("beta must be positive");
  std::set<UserId> seen;
  for (const auto& d : stream) {
    if (!seen.insert(d.user_id).second)
      throw std::invalid_argument("duplicate user id " + std::to_string(d.user_id));
    if (d.declared_arrival < 1 || d.declared_arrival > params.horizon)
      throw std::invalid_argument("user " + std::to_string(d.user_id) +
                                  ": declared arrival outside {1..T}");
    if (d.declared_departure < d.declared_arrival || d.declared_departure > params.horizon)
      throw std::invalid_argument("user " + std::to_string(d.user_id) +
                                  ": declared departure outside [arrival, T]");
    if (d.capacity < 1)
      throw std::invalid_argument("user " + std::to_string(d.user_id) + ": capacity must be >= 1");
    if (!(d.bid > 0))
      throw std::invalid_argument("user " + std::to_string(d.user_id) + ": bid must be positive");
  }
}

// Arrival buckets preserve stream order within a step.
std::vector<std::vector<const DeclaredProfile*>> bucket_arrivals(
    const std::vector<DeclaredProfile>& stream, int horizon) {
  std::vector<std::vector<const DeclaredProfile*>> buckets(horizon + 1);
  for (const auto& d : stream) buckets[d.declared_arrival].push_back(&d);
  return buckets;
}

}  // namespace

AuctionOutcome homo_omz(const std::vector<DeclaredProfile>& stream,
                        const MechanismParams& params) {
  validate_stream(stream, params);
  for (const auto& d : stream) {
    if (d.capacity != 1)
      throw std::invalid_argument("homo-omz requires unit capacities (user " +
                                  std::to_string(d.user_id) + ")");
    if (d.declared_arrival != d.declared_departure)
      throw std::invalid_argument("homo-omz requires zero arrival-departure intervals (user " +
                                  std::to_string(d.user_id) + ")");
  }

  StageSchedule schedule = build_stage_schedule(params.horizon, params.tasks);
  auto arrivals = bucket_arrivals(stream, params.horizon);

  AuctionOutcome outcome;
  outcome.initial_threshold = params.beta;
  SampleSet sample;
  double threshold = params.beta;
  std::size_t stage = 0;
  int allocated = 0;

  for (int t = 1; t <= params.horizon; ++t) {
    double quota = schedule.stages[stage].stage_tasks;
    for (const DeclaredProfile* d : arrivals[t]) {
      outcome.log.push_back({t, LogEventKind::Arrival, d->user_id});
      double residual = quota - allocated;
      int tasks = 0;
      double price = 0.0;
      if (d->bid <= threshold && allocated < quota) {
        tasks = 1;
        price = threshold;
        ++allocated;
        outcome.winners.push_back(d->user_id);
      }
      outcome.results[d->user_id] = {tasks, price};
      outcome.log.push_back(
          {t, LogEventKind::Decision, d->user_id, tasks, price, threshold, 0.0, residual});
      sample.push_back({d->user_id, 1, d->bid});
    }
    if (stage + 1 < schedule.stages.size() && t == schedule.stages[stage].end_time) {
      threshold = lth_lowest_bid_threshold(quota, sample, params.beta);
      ++stage;
      outcome.log.push_back({t, LogEventKind::Boundary, -1, 0, 0.0, threshold,
                             schedule.stages[stage].stage_tasks, 0.0});
    }
  }

  outcome.tasks_allocated = allocated;
  for (const auto& [id, r] : outcome.results) outcome.total_payment += r.tasks * r.price;
  return outcome;
}

AuctionOutcome hetero_omz(const std::vector<DeclaredProfile>& stream,
                          const MechanismParams& params) {
  validate_stream(stream, params);
  if (params.delta < 1) throw std::invalid_argument("delta must be at least 1");
  for (const auto& d : stream) {
    if (d.declared_arrival != d.declared_departure)
      throw std::invalid_argument("hetero-omz requires zero arrival-departure intervals (user " +
                                  std::to_string(d.user_id) + ")");
  }

  StageSchedule schedule = build_stage_schedule(params.horizon, params.tasks);
  auto arrivals = bucket_arrivals(stream, params.horizon);

  AuctionOutcome outcome;
  outcome.initial_threshold = params.beta;
  SampleSet sample;
  double threshold = params.beta;
  std::size_t stage = 0;
  int allocated = 0;

  for (int t = 1; t <= params.horizon; ++t) {
    double quota = schedule.stages[stage].stage_tasks;
    for (const DeclaredProfile* d : arrivals[t]) {
      outcome.log.push_back({t, LogEventKind::Arrival, d->user_id});
      double residual = quota - allocated;
      int tasks = 0;
      double price = 0.0;
      if (d->bid <= threshold && allocated < quota) {
        tasks = std::min(d->capacity, ceil_tasks(quota - allocated));
        price = threshold;
        allocated += tasks;
        outcome.winners.push_back(d->user_id);
      }
      outcome.results[d->user_id] = {tasks, price};
      outcome.log.push_back(
          {t, LogEventKind::Decision, d->user_id, tasks, price, threshold, 0.0, residual});
      sample.push_back({d->user_id, d->capacity, d->bid});
    }
    if (stage + 1 < schedule.stages.size() && t == schedule.stages[stage].end_time) {
      threshold = get_bid_threshold2(quota, params.delta, params.beta, sample);
      ++stage;
      outcome.log.push_back({t, LogEventKind::Boundary, -1, 0, 0.0, threshold,
                             schedule.stages[stage].stage_tasks, 0.0});
    }
  }

  outcome.tasks_allocated = allocated;
  for (const auto& [id, r] : outcome.results) outcome.total_payment += r.tasks * r.price;
  return outcome;
}

namespace {

struct OnlineUser {
  const DeclaredProfile* declared = nullptr;
  int tasks = 0;
  double price = 0.0;
  bool winner = false;
};

// Decision order among simultaneously online users: most capacity first,
// then lowest id.
bool capacity_order(const OnlineUser& a, const OnlineUser& b) {
  if (a.declared->capacity != b.declared->capacity)
    return a.declared->capacity > b.declared->capacity;
  return a.declared->user_id < b.declared->user_id;
}

}  // namespace

AuctionOutcome hetero_omg(const std::vector<DeclaredProfile>& stream,
                          const MechanismParams& params) {
  validate_stream(stream, params);
  if (params.delta < 1) throw std::invalid_argument("delta must be at least 1");

  StageSchedule schedule = build_stage_schedule(params.horizon, params.tasks);
  auto arrivals = bucket_arrivals(stream, params.horizon);

  AuctionOutcome outcome;
  outcome.initial_threshold = params.beta;
  SampleSet sample;
  double threshold = params.beta;
  std::size_t stage = 0;
  int allocated = 0;
  std::vector<OnlineUser> online;

  for (int t = 1; t <= params.horizon; ++t) {
    double quota = schedule.stages[stage].stage_tasks;

    for (const DeclaredProfile* d : arrivals[t]) {
      online.push_back(OnlineUser{d});
      outcome.log.push_back({t, LogEventKind::Arrival, d->user_id});
    }

    // Every online non-winner is reconsidered at the current posted price;
    // only the arrival-step decision and later wins are logged.
    std::sort(online.begin(), online.end(), capacity_order);
    for (auto& u : online) {
      if (u.winner) continue;
      double residual = quota - allocated;
      bool wins = u.declared->bid <= threshold && allocated < quota;
      if (wins) {
        u.tasks = std::min(u.declared->capacity, ceil_tasks(quota - allocated));
        u.price = threshold;
        u.winner = true;
        allocated += u.tasks;
        outcome.winners.push_back(u.declared->user_id);
      }
      if (wins || u.declared->declared_arrival == t) {
        outcome.log.push_back({t, LogEventKind::Decision, u.declared->user_id, u.tasks, u.price,
                               threshold, 0.0, residual});
      }
    }

    // Departures leave the online set, feed the sample and finalize payment.
    std::vector<OnlineUser> staying;
    std::vector<OnlineUser> departing;
    for (auto& u : online) {
      if (u.declared->declared_departure == t)
        departing.push_back(u);
      else
        staying.push_back(u);
    }
    online.swap(staying);
    std::sort(departing.begin(), departing.end(),
              [](const OnlineUser& a, const OnlineUser& b) {
                return a.declared->user_id < b.declared->user_id;
              });
    for (const auto& u : departing) {
      sample.push_back({u.declared->user_id, u.declared->capacity, u.declared->bid});
      outcome.results[u.declared->user_id] = {u.tasks, u.price};
      outcome.log.push_back({t, LogEventKind::Departure, u.declared->user_id, u.tasks, u.price});
    }

    if (stage + 1 < schedule.stages.size() && t == schedule.stages[stage].end_time) {
      threshold = get_bid_threshold2(quota, params.delta, params.beta, sample);
      ++stage;
      quota = schedule.stages[stage].stage_tasks;
      outcome.log.push_back(
          {t, LogEventKind::Boundary, -1, 0, 0.0, threshold, quota, 0.0});

      // Re-decide everyone still online, winners included, under the new
      // price and quota. The stage quota gate is the same one arrivals
      // face: once the stage is full, held tasks keep their old price.
      // Repricing a full stage would let a user who underbid its cost early
      // ride later threshold increases that a truthful bidder never had
      // access to. A pair is replaced only when the bid-measured surplus
      // f * (p - b) strictly improves; for a truthful report that is the
      // user's utility, and since the quota gate keeps the reallocation at
      // or above the old task count, the payment f * p still never
      // decreases and finalizes at its window maximum.
      std::sort(online.begin(), online.end(), capacity_order);
      for (auto& u : online) {
        if (!(u.declared->bid <= threshold && allocated < quota)) continue;
        int reallocated =
            std::min(u.declared->capacity, ceil_tasks(quota + u.tasks - allocated));
        if (reallocated * (threshold - u.declared->bid) >
            u.tasks * (u.price - u.declared->bid)) {
          allocated += reallocated - u.tasks;
          u.tasks = reallocated;
          u.price = threshold;
          if (!u.winner) {
            u.winner = true;
            outcome.winners.push_back(u.declared->user_id);
          }
          outcome.log.push_back({t, LogEventKind::Update, u.declared->user_id, u.tasks, u.price,
                                 threshold, 0.0, 0.0});
        }
      }
    }
  }

  outcome.tasks_allocated = 0;
  for (const auto& [id, r] : outcome.results) {
    outcome.tasks_allocated += r.tasks;
    outcome.total_payment += r.tasks * r.price;
  }
  return outcome;
}

AuctionOutcome run_mechanism(MechanismKind kind, const std::vector<DeclaredProfile>& stream,
                             const MechanismParams& params) {
  switch (kind) {
    case MechanismKind::HomoOmz:
      return homo_omz(stream, params);
    case MechanismKind::HeteroOmz:
      return hetero_omz(stream, params);
    case MechanismKind::HeteroOmg:
      return hetero_omg(stream, params);
  }
  throw std::logic_error("unreachable mechanism kind");
}

std::string mechanism_name(MechanismKind kind) {
  switch (kind) {
    case MechanismKind::HomoOmz:
      return "homo-omz";
    case MechanismKind::HeteroOmz:
      return "hetero-omz";
    case MechanismKind::HeteroOmg:
      return "hetero-omg";
  }
  throw std::logic_error("unreachable mechanism kind");
}

MechanismKind mechanism_from_name(std::string_view name) {
  if (name == "homo-omz") return MechanismKind::HomoOmz;
  if (name == "hetero-omz") return MechanismKind::HeteroOmz;
  if (name == "hetero-omg") return MechanismKind::HeteroOmg;
  throw std::invalid_argument("unknown mechanism: " + std::string(name));
}

}  // namespace frugal
