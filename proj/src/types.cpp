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

#include "frugal/types.hpp"

#include <sstream>
#include <stdexcept>

#include "frugal/util.hpp"

namespace frugal {

UserProfile validate_profile(const UserProfile& p, int horizon) {
  if (p.arrival < 1 || p.arrival > horizon)
    throw std::invalid_argument("user " + std::to_string(p.id) + ": arrival outside {1..T}");
  if (p.departure > horizon)
    throw std::invalid_argument("user " + std::to_string(p.id) + ": departure after horizon");
  if (p.arrival > p.departure)
    throw std::invalid_argument("user " + std::to_string(p.id) + ": arrival after departure");
  if (p.capacity < 1)
    throw std::invalid_argument("user " + std::to_string(p.id) + ": capacity must be >= 1");
  if (!(p.unit_cost > 0.0))
    throw std::invalid_argument("user " + std::to_string(p.id) + ": cost must be positive");
  return p;
}

void validate_declaration(const DeclaredProfile& declared, const UserProfile& truth) {
  if (declared.user_id != truth.id) throw std::invalid_argument("declaration for a different user");
  if (declared.declared_arrival < truth.arrival)
    throw std::invalid_argument("user " + std::to_string(truth.id) +
                                ": cannot announce an earlier arrival");
  if (declared.declared_departure > truth.departure)
    throw std::invalid_argument("user " + std::to_string(truth.id) +
                                ": cannot announce a later departure");
  if (declared.declared_arrival > declared.declared_departure)
    throw std::invalid_argument("user " + std::to_string(truth.id) +
                                ": declared arrival after declared departure");
  if (declared.capacity != truth.capacity)
    throw std::invalid_argument("user " + std::to_string(truth.id) +
                                ": task capacity cannot be misreported");
  if (!(declared.bid > 0.0))
    throw std::invalid_argument("user " + std::to_string(truth.id) + ": bid must be positive");
}

DeclaredProfile truthful_declaration(const UserProfile& p) {
  return DeclaredProfile{p.id, p.arrival, p.departure, p.capacity, p.unit_cost};
}

std::vector<DeclaredProfile> truthful_declarations(const std::vector<UserProfile>& users) {
  std::vector<DeclaredProfile> out;
  out.reserve(users.size());
  for (const auto& u : users) out.push_back(truthful_declaration(u));
  return out;
}

std::vector<DeclaredProfile> zero_interval_declarations(const std::vector<UserProfile>& users) {
  std::vector<DeclaredProfile> out;
  out.reserve(users.size());
  for (const auto& u : users)
    out.push_back(DeclaredProfile{u.id, u.arrival, u.arrival, u.capacity, u.unit_cost});
  return out;
}

double utility(double true_cost, int tasks, double price) {
  if (tasks == 0) return 0.0;
  return tasks * (price - true_cost);
}

std::string format_log_event(const LogEvent& e) {
  std::ostringstream os;
  os << "t=" << e.time << ' ';
  switch (e.kind) {
    case LogEventKind::Arrival:
      os << "arrival user=" << e.user_id;
      break;
    case LogEventKind::Decision:
      os << "decision user=" << e.user_id << " f=" << e.tasks << " p=" << fmt_number(e.price)
         << " b*=" << fmt_number(e.threshold);
      break;
    case LogEventKind::Update:
      os << "update user=" << e.user_id << " f=" << e.tasks << " p=" << fmt_number(e.price)
         << " b*=" << fmt_number(e.threshold);
      break;
    case LogEventKind::Departure:
      os << "departure user=" << e.user_id << " f=" << e.tasks << " p=" << fmt_number(e.price);
      break;
    case LogEventKind::Boundary:
      os << "boundary b*=" << fmt_number(e.threshold) << " L'=" << fmt_number(e.stage_tasks);
      break;
  }
  return os.str();
}

bool AuctionOutcome::is_winner(UserId id) const { return allocation_of(id) > 0; }

int AuctionOutcome::allocation_of(UserId id) const {
  auto it = results.find(id);
  return it == results.end() ? 0 : it->second.tasks;
}

double AuctionOutcome::price_of(UserId id) const {
  auto it = results.find(id);
  return it == results.end() ? 0.0 : it->second.price;
}

double AuctionOutcome::payment_of(UserId id) const {
  auto it = results.find(id);
  return it == results.end() ? 0.0 : it->second.tasks * it->second.price;
}

double AuctionOutcome::threshold_in_force(int t) const {
  double current = initial_threshold;
  for (const auto& e : log) {
    if (e.kind != LogEventKind::Boundary) continue;
    if (e.time >= t) break;
    current = e.threshold;
  }
  return current;
}

std::string AuctionOutcome::serialize_log() const {
  std::string out;
  for (const auto& e : log) {
    out += format_log_event(e);
    out += '\n';
  }
  return out;
}

int allocation_total(const AuctionOutcome& outcome, const std::vector<UserId>& subset) {
  int total = 0;
  for (UserId id : subset) {
    auto it = outcome.results.find(id);
    if (it == outcome.results.end())
      throw std::invalid_argument("unknown user id " + std::to_string(id));
    total += it->second.tasks;
  }
  return total;
}

}  // namespace frugal
