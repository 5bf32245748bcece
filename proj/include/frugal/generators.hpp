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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frugal/rng.hpp"
#include "frugal/types.hpp"

namespace frugal {

struct DistSpec {
  enum class Kind { Constant, UniformReal, UniformInt };
  Kind kind = Kind::Constant;
  double a = 0.0;
  double b = 0.0;

  bool operator==(const DistSpec&) const = default;

  static DistSpec constant(double v) { return {Kind::Constant, v, v}; }
  static DistSpec uniform_real(double lo, double hi) { return {Kind::UniformReal, lo, hi}; }
  static DistSpec uniform_int(int lo, int hi) {
    return {Kind::UniformInt, static_cast<double>(lo), static_cast<double>(hi)};
  }

  double sample(Rng& rng) const;
  int sample_int(Rng& rng) const;

  // "constant:V", "uniform:A,B", "uniformint:A,B" — the config file syntax.
  static DistSpec parse(const std::string& text);
  std::string format() const;
};

enum class OrderModel { Iid, Secretary };

struct InstanceConfig {
  int horizon = 1800;
  int tasks = 100;
  double lambda = 0.6;
  DistSpec cost = DistSpec::uniform_real(1, 10);
  DistSpec capacity = DistSpec::constant(1);
  DistSpec interval = DistSpec::constant(0);
  OrderModel order = OrderModel::Iid;
  // Adversary-chosen (capacity, cost) pool for the random-order model.
  std::vector<std::pair<int, double>> secretary_pool;
  std::optional<double> omega;
  std::uint64_t seed = 1;

  bool operator==(const InstanceConfig&) const = default;
};

// Per-step arrival counts, i.i.d. Poisson(lambda). Size == horizon.
std::vector<int> gen_poisson_arrivals(double lambda, int horizon, Rng& rng);

// Arrival-ordered users with capacity, cost and window length drawn i.i.d.
// from the config distributions. Uses fixed substreams (arrivals, costs,
// capacities, intervals) so swapping one distribution leaves the other draws
// untouched under the same seed.
std::vector<UserProfile> gen_iid_users(const InstanceConfig& config, Rng rng);

// Uniformly random permutation of an adversarial pool, placed on distinct
// random arrival steps (zero intervals). Throws if the pool exceeds the
// horizon.
std::vector<UserProfile> gen_secretary_stream(const std::vector<std::pair<int, double>>& pool,
                                              int horizon, Rng rng);

// Dispatch on config.order, seeding from config.seed.
std::vector<UserProfile> generate_users(const InstanceConfig& config);

// Random-order capacity sanity bound: every capacity must stay within
// (total task target) / omega for the constant-probability guarantees to
// apply. Used to flag instances, never to reject them.
bool secretary_capacity_bound_ok(const std::vector<UserProfile>& users, int tasks, double omega);

}  // namespace frugal
