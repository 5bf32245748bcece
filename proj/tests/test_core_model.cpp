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

#include "frugal/golden.hpp"
#include "frugal/mechanisms.hpp"
#include "frugal/rng.hpp"
#include "frugal/types.hpp"
#include "oracles.hpp"

using namespace frugal;

TEST_CASE("validate_profile accepts well-formed profiles") {
  CHECK(validate_profile({1, 1, 1, 4, 2}, 8).id == 1);
  CHECK(validate_profile({1, 1, 5, 4, 2}, 8).departure == 5);
}

TEST_CASE("validate_profile rejects each broken invariant") {
  CHECK_THROWS_AS(validate_profile({1, 5, 3, 1, 1}, 8), std::invalid_argument);   // a > d
  CHECK_THROWS_AS(validate_profile({1, 1, 9, 1, 1}, 8), std::invalid_argument);   // d > T
  CHECK_THROWS_AS(validate_profile({1, 0, 1, 1, 1}, 8), std::invalid_argument);   // a < 1
  CHECK_THROWS_AS(validate_profile({1, 1, 1, 0, 1}, 8), std::invalid_argument);   // capacity 0
  CHECK_THROWS_AS(validate_profile({1, 1, 1, 1, 0.0}, 8), std::invalid_argument); // cost 0
  CHECK_THROWS_AS(validate_profile({1, 1, 1, 1, -2}, 8), std::invalid_argument);
}

TEST_CASE("validate_declaration enforces the strategy space") {
  UserProfile truth{7, 2, 6, 3, 1.5};
  CHECK_NOTHROW(validate_declaration({7, 2, 6, 3, 1.5}, truth));
  CHECK_NOTHROW(validate_declaration({7, 3, 5, 3, 9.0}, truth));
  CHECK_THROWS_AS(validate_declaration({7, 1, 6, 3, 1.5}, truth), std::invalid_argument);
  CHECK_THROWS_AS(validate_declaration({7, 2, 7, 3, 1.5}, truth), std::invalid_argument);
  CHECK_THROWS_AS(validate_declaration({7, 5, 4, 3, 1.5}, truth), std::invalid_argument);
  CHECK_THROWS_AS(validate_declaration({7, 2, 6, 2, 1.5}, truth), std::invalid_argument);
}

TEST_CASE("utility is f * (p - c) with zero for losers") {
  CHECK(utility(3, 3, 4) == 3.0);
  CHECK(utility(5, 0, 0) == 0.0);
  CHECK(utility(2, 4, 5) == 12.0);
  CHECK(utility(4, 2, 3) == -2.0);
}

TEST_CASE("allocation_total sums over subsets and rejects unknown ids") {
  AuctionOutcome outcome =
      hetero_omz(truthful_declarations(reference_instance_1()), reference_params());
  CHECK(allocation_total(outcome, {1, 4, 5}) == 8);
  CHECK(allocation_total(outcome, {}) == 0);
  CHECK(allocation_total(outcome, {2, 3}) == 0);
  CHECK_THROWS_AS(allocation_total(outcome, {99}), std::invalid_argument);

  AuctionOutcome general =
      hetero_omg(truthful_declarations(reference_instance_2()), reference_params());
  CHECK(allocation_total(general, {1, 4}) == 8);
}

TEST_CASE("allocation_total is additive over disjoint subsets") {
  AuctionOutcome outcome =
      hetero_omz(truthful_declarations(reference_instance_1()), reference_params());
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<UserId> left;
    std::vector<UserId> right;
    for (UserId id = 1; id <= 5; ++id) (rng.uniform01() < 0.5 ? left : right).push_back(id);
    std::vector<UserId> both = left;
    both.insert(both.end(), right.begin(), right.end());
    CHECK(allocation_total(outcome, both) ==
          allocation_total(outcome, left) + allocation_total(outcome, right));
  }
}

TEST_CASE("frugality_report matches the exhaustive offline oracle") {
  std::vector<UserProfile> users = reference_instance_1();
  SampleSet entries;
  for (const auto& u : users) entries.push_back({u.id, u.capacity, u.unit_cost});
  // Freeze the oracle values before trusting any greedy path.
  REQUIRE(oracle::exhaustive_min_cost(entries, 8) == doctest::Approx(12.0));
  REQUIRE(oracle::exhaustive_min_cost(entries, 16) == doctest::Approx(40.0));

  AuctionOutcome outcome = hetero_omz(truthful_declarations(users), reference_params());
  REQUIRE(outcome.total_payment == 33.0);
  FrugalityReport report = frugality_report(outcome, users, 8);
  REQUIRE(report.opt_cost_L.has_value());
  REQUIRE(report.opt_cost_2L.has_value());
  CHECK(*report.opt_cost_L == 12.0);
  CHECK(*report.opt_cost_2L == 40.0);
  CHECK(*report.idealistic_ratio == doctest::Approx(2.75));
  CHECK(*report.realistic_ratio == doctest::Approx(0.825));
}

TEST_CASE("frugality_report self-ratio and undefined cases") {
  std::vector<UserProfile> users{{1, 1, 1, 2, 5}};
  AuctionOutcome outcome;
  outcome.results[1] = {2, 5.0};
  outcome.winners = {1};
  outcome.tasks_allocated = 2;
  outcome.total_payment = 10.0;

  FrugalityReport report = frugality_report(outcome, users, 2);
  CHECK(*report.idealistic_ratio == doctest::Approx(1.0));
  // Supply is 2 < 2L = 4: the realistic side must be absent, not zero.
  CHECK_FALSE(report.realistic_ratio.has_value());
  CHECK_FALSE(report.opt_cost_2L.has_value());
}

TEST_CASE("frugality ratios are scale covariant") {
  std::vector<UserProfile> users = reference_instance_1();
  AuctionOutcome outcome = hetero_omz(truthful_declarations(users), reference_params());
  FrugalityReport base = frugality_report(outcome, users, 8);

  for (double k : {0.5, 3.0, 17.25}) {
    std::vector<UserProfile> scaled_users = users;
    for (auto& u : scaled_users) u.unit_cost *= k;
    AuctionOutcome scaled = outcome;
    scaled.total_payment *= k;
    FrugalityReport report = frugality_report(scaled, scaled_users, 8);
    CHECK(*report.idealistic_ratio == doctest::Approx(*base.idealistic_ratio));
    CHECK(*report.realistic_ratio == doctest::Approx(*base.realistic_ratio));
  }
}

TEST_CASE("threshold_in_force tracks boundaries") {
  AuctionOutcome outcome =
      hetero_omz(truthful_declarations(reference_instance_1()), reference_params());
  CHECK(outcome.threshold_in_force(1) == 5.0);
  CHECK(outcome.threshold_in_force(2) == 2.0);
  CHECK(outcome.threshold_in_force(4) == 2.0);
  CHECK(outcome.threshold_in_force(5) == 4.0);
  CHECK(outcome.threshold_in_force(8) == 4.0);
}
