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

#include "frugal/generators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "frugal/util.hpp"

namespace frugal {

namespace {

// Fixed substream ids: adding draws to one consumer never shifts another.
constexpr std::uint64_t kArrivalStream = 0;
constexpr std::uint64_t kCostStream = 1;
constexpr std::uint64_t kCapacityStream = 2;
constexpr std::uint64_t kIntervalStream = 3;
constexpr std::uint64_t kPermutationStream = 4;
constexpr std::uint64_t kPlacementStream = 5;

}  // namespace

double DistSpec::sample(Rng& rng) const {
  switch (kind) {
    case Kind::Constant:
      return a;
    case Kind::UniformReal:
      return rng.uniform(a, b);
    case Kind::UniformInt:
      return rng.uniform_int(static_cast<int>(a), static_cast<int>(b));
  }
  throw std::logic_error("unreachable distribution kind");
}

int DistSpec::sample_int(Rng& rng) const {
  switch (kind) {
    case Kind::Constant:
      return static_cast<int>(a);
    case Kind::UniformInt:
      return rng.uniform_int(static_cast<int>(a), static_cast<int>(b));
    case Kind::UniformReal:
      // Real draw truncated to a step count.
      return static_cast<int>(std::floor(rng.uniform(a, b)));
  }
  throw std::logic_error("unreachable distribution kind");
}

DistSpec DistSpec::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("distribution must look like kind:args, got '" + text + "'");
  std::string kind = text.substr(0, colon);
  std::string args = text.substr(colon + 1);
  auto comma = args.find(',');
  try {
    if (kind == "constant") {
      if (comma != std::string::npos) throw std::invalid_argument("constant takes one value");
      return constant(std::stod(args));
    }
    if (comma == std::string::npos)
      throw std::invalid_argument("uniform distributions take two values");
    double lo = std::stod(args.substr(0, comma));
    double hi = std::stod(args.substr(comma + 1));
    if (hi < lo) throw std::invalid_argument("upper bound below lower bound");
    if (kind == "uniform") return uniform_real(lo, hi);
    if (kind == "uniformint") return uniform_int(static_cast<int>(lo), static_cast<int>(hi));
  } catch (const std::logic_error& e) {
    throw std::invalid_argument("bad distribution '" + text + "': " + e.what());
  }
  throw std::invalid_argument("unknown distribution kind '" + kind + "'");
}

std::string DistSpec::format() const {
  switch (kind) {
    case Kind::Constant:
      return "constant:" + fmt_number(a);
    case Kind::UniformReal:
      return "uniform:" + fmt_number(a) + "," + fmt_number(b);
    case Kind::UniformInt:
      return "uniformint:" + fmt_number(a) + "," + fmt_number(b);
  }
  throw std::logic_error("unreachable distribution kind");
}

std::vector<int> gen_poisson_arrivals(double lambda, int horizon, Rng& rng) {
  if (!(lambda > 0)) throw std::invalid_argument("lambda must be positive");
  std::vector<int> counts(std::max(horizon, 0));
  for (auto& c : counts) c = rng.poisson(lambda);
  return counts;
}

std::vector<UserProfile> gen_iid_users(const InstanceConfig& config, Rng rng) {
  Rng arrival_rng = rng.substream(kArrivalStream);
  Rng cost_rng = rng.substream(kCostStream);
  Rng capacity_rng = rng.substream(kCapacityStream);
  Rng interval_rng = rng.substream(kIntervalStream);

  std::vector<int> counts = gen_poisson_arrivals(config.lambda, config.horizon, arrival_rng);
  std::vector<UserProfile> users;
  UserId next_id = 1;
  for (int t = 1; t <= config.horizon; ++t) {
    for (int k = 0; k < counts[t - 1]; ++k) {
      UserProfile u;
      u.id = next_id++;
      u.arrival = t;
      u.capacity = std::max(1, config.capacity.sample_int(capacity_rng));
      u.unit_cost = config.cost.sample(cost_rng);
      int interval = std::max(0, config.interval.sample_int(interval_rng));
      u.departure = std::min(config.horizon, t + interval);
      users.push_back(validate_profile(u, config.horizon));
    }
  }
  return users;
}

std::vector<UserProfile> gen_secretary_stream(const std::vector<std::pair<int, double>>& pool,
                                              int horizon, Rng rng) {
  if (static_cast<int>(pool.size()) > horizon)
    throw std::invalid_argument("secretary pool larger than the horizon");
  if (pool.empty()) return {};

  Rng perm_rng = rng.substream(kPermutationStream);
  Rng place_rng = rng.substream(kPlacementStream);

  // Fisher-Yates over the adversarial pool.
  std::vector<std::pair<int, double>> shuffled = pool;
  for (std::size_t i = shuffled.size() - 1; i > 0; --i) {
    std::size_t k = static_cast<std::size_t>(perm_rng.uniform_int(0, static_cast<int>(i)));
    std::swap(shuffled[i], shuffled[k]);
  }

  // Distinct arrival steps by reservoir-free selection: sample without
  // replacement from {1..horizon}, then sort.
  std::vector<int> steps;
  steps.reserve(shuffled.size());
  std::vector<int> universe(horizon);
  for (int i = 0; i < horizon; ++i) universe[i] = i + 1;
  for (std::size_t i = 0; i < shuffled.size(); ++i) {
    std::size_t pick =
        static_cast<std::size_t>(place_rng.uniform_int(static_cast<int>(i),
                                                       horizon - 1));
    std::swap(universe[i], universe[pick]);
    steps.push_back(universe[i]);
  }
  std::sort(steps.begin(), steps.end());

  std::vector<UserProfile> users;
  users.reserve(shuffled.size());
  for (std::size_t i = 0; i < shuffled.size(); ++i) {
    UserProfile u;
    u.id = static_cast<UserId>(i + 1);
    u.arrival = steps[i];
    u.departure = steps[i];
    u.capacity = shuffled[i].first;
    u.unit_cost = shuffled[i].second;
    users.push_back(validate_profile(u, horizon));
  }
  return users;
}

std::vector<UserProfile> generate_users(const InstanceConfig& config) {
  Rng rng(config.seed);
  if (config.order == OrderModel::Secretary)
    return gen_secretary_stream(config.secretary_pool, config.horizon, rng);
  return gen_iid_users(config, rng);
}

bool secretary_capacity_bound_ok(const std::vector<UserProfile>& users, int tasks, double omega) {
  if (!(omega > 0)) throw std::invalid_argument("omega must be positive");
  double bound = tasks / omega;
  for (const auto& u : users)
    if (u.capacity > bound) return false;
  return true;
}

}  // namespace frugal
