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

#include <doctest.h>

#include "frugal/baselines.hpp"
#include "frugal/golden.hpp"
#include "frugal/rng.hpp"
#include "oracles.hpp"

using namespace frugal;

namespace {

std::vector<UserProfile> random_users(Rng& rng, int max_users) {
  std::vector<UserProfile> users;
  int n = rng.uniform_int(0, max_users);
  for (int i = 0; i < n; ++i)
    users.push_back({i + 1, 1, 1, rng.uniform_int(1, 2), rng.uniform(0.5, 10.0)});
  return users;
}

}  // namespace

TEST_CASE("offline_optimal prices the reference instance") {
  std::vector<UserProfile> users = reference_instance_1();
  OfflineSolution s = offline_optimal(users, 8);
  CHECK(s.total_cost == 12.0);
  CHECK(s.sufficient);
  s = offline_optimal(users, 0);
  CHECK(s.total_cost == 0.0);
  CHECK(s.sufficient);
  s = offline_optimal(users, 16);
  CHECK(s.total_cost == 40.0);
  s = offline_optimal(users, 21);
  CHECK_FALSE(s.sufficient);
  CHECK(s.tasks == 20);
}

TEST_CASE("offline_optimal matches exhaustive enumeration") {
  Rng rng(53);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<UserProfile> users = random_users(rng, 6);
    SampleSet entries;
    int supply = 0;
    for (const auto& u : users) {
      entries.push_back({u.id, u.capacity, u.unit_cost});
      supply += u.capacity;
    }
    int target = rng.uniform_int(0, supply);
    OfflineSolution s = offline_optimal(users, target);
    auto expected = oracle::exhaustive_min_cost(entries, target);
    REQUIRE(expected.has_value());
    CHECK(s.sufficient);
    CHECK(s.total_cost == doctest::Approx(*expected).epsilon(1e-12));
  }
}

TEST_CASE("offline_optimal marginal cost per task never decreases") {
  Rng rng(59);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<UserProfile> users = random_users(rng, 6);
    int supply = 0;
    for (const auto& u : users) supply += u.capacity;
    double prev_cost = 0.0;
    double prev_increment = 0.0;
    for (int target = 1; target <= supply; ++target) {
      double cost = offline_optimal(users, target).total_cost;
      double increment = cost - prev_cost;
      CHECK(increment >= prev_increment - 1e-9);
      prev_increment = increment;
      prev_cost = cost;
    }
  }
}

TEST_CASE("random_threshold_run pays exactly the threshold per task") {
  std::vector<DeclaredProfile> stream = truthful_declarations(reference_instance_1());

  AuctionOutcome permissive = random_threshold_run(stream, 8, 8, 10.0);
  CHECK(permissive.tasks_allocated == 8);
  CHECK(permissive.total_payment == 80.0);

  AuctionOutcome stingy = random_threshold_run(stream, 8, 8, 0.5);
  CHECK(stingy.tasks_allocated == 0);
  CHECK(stingy.total_payment == 0.0);

  AuctionOutcome mid = random_threshold_run(stream, 8, 8, 3.0);
  CHECK(mid.winners == std::vector<UserId>{1, 4});
  CHECK(mid.allocation_of(1) == 4);
  CHECK(mid.allocation_of(4) == 4);
  CHECK(mid.total_payment == 24.0);
}

TEST_CASE("random_threshold_run payment identity on random instances") {
  Rng rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<UserProfile> users = random_users(rng, 8);
    double threshold = rng.uniform(0.5, 12.0);
    AuctionOutcome outcome = random_threshold_run(truthful_declarations(users), 6, 1, threshold);
    CHECK(outcome.total_payment == threshold * outcome.tasks_allocated);
    CHECK(outcome.tasks_allocated <= 6);
  }
}

TEST_CASE("random_baseline_average of one trial equals that run") {
  std::vector<DeclaredProfile> stream = truthful_declarations(reference_instance_1());
  Rng rng(71);
  RandomBaselineStats stats = random_baseline_average(stream, 8, 8, 1, rng);
  double threshold = rng.substream(0).uniform(1.0, 10.0);
  AuctionOutcome single = random_threshold_run(stream, 8, 8, threshold);
  CHECK(stats.mean_payment == single.total_payment);
  CHECK(stats.mean_tasks == single.tasks_allocated);
}

TEST_CASE("random_baseline_average completes everything when all bids are tiny") {
  std::vector<UserProfile> users;
  for (int i = 1; i <= 6; ++i) users.push_back({i, i, i, 2, 0.5});
  RandomBaselineStats stats =
      random_baseline_average(truthful_declarations(users), 10, 6, 50, Rng(3));
  CHECK(stats.mean_tasks == 10.0);
  CHECK(stats.mean_price_per_task >= 1.0);
  CHECK(stats.mean_price_per_task <= 10.0);
}
