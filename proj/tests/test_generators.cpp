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

#include <algorithm>
#include <map>
#include <set>

#include "frugal/config.hpp"
#include "frugal/generators.hpp"

using namespace frugal;

TEST_CASE("poisson arrivals: degenerate horizon and sample mean") {
  Rng rng(1);
  CHECK(gen_poisson_arrivals(0.6, 0, rng).empty());

  double total = 0;
  int seeds = 2000;
  for (int s = 0; s < seeds; ++s) {
    Rng r(s);
    total += gen_poisson_arrivals(10.0, 1, r)[0];
  }
  double mean = total / seeds;
  CHECK(mean > 9.5);
  CHECK(mean < 10.5);
}

TEST_CASE("poisson arrivals concentrate around lambda * T") {
  // Poisson(1080) puts ~5 sigma around the mean inside [950, 1220].
  int outside = 0;
  int seeds = 300;
  for (int s = 1; s <= seeds; ++s) {
    Rng r(s);
    auto counts = gen_poisson_arrivals(0.6, 1800, r);
    int total = 0;
    for (int c : counts) total += c;
    if (total < 950 || total > 1220) ++outside;
  }
  CHECK(outside <= seeds / 100);
}

TEST_CASE("iid users honor the configured distributions") {
  InstanceConfig homogeneous;
  homogeneous.horizon = 200;
  homogeneous.lambda = 0.6;
  homogeneous.capacity = DistSpec::constant(1);
  homogeneous.interval = DistSpec::constant(0);
  homogeneous.seed = 4;
  std::vector<UserProfile> users = generate_users(homogeneous);
  REQUIRE(!users.empty());
  for (const auto& u : users) {
    CHECK(u.capacity == 1);
    CHECK(u.arrival == u.departure);
    CHECK(u.unit_cost >= 1.0);
    CHECK(u.unit_cost <= 10.0);
  }

  InstanceConfig windowed = homogeneous;
  windowed.capacity = DistSpec::uniform_int(1, 10);
  windowed.interval = DistSpec::uniform_int(0, 30);
  std::vector<UserProfile> patient = generate_users(windowed);
  bool saw_window = false;
  for (const auto& u : patient) {
    CHECK(u.departure >= u.arrival);
    CHECK(u.departure <= windowed.horizon);
    CHECK(u.departure - u.arrival <= 30);
    saw_window |= u.departure > u.arrival;
  }
  CHECK(saw_window);

  InstanceConfig fixed_cost = homogeneous;
  fixed_cost.cost = DistSpec::constant(5);
  for (const auto& u : generate_users(fixed_cost)) CHECK(u.unit_cost == 5.0);
}

TEST_CASE("same seed reproduces the stream byte for byte") {
  InstanceConfig cfg;
  cfg.horizon = 300;
  cfg.capacity = DistSpec::uniform_int(1, 10);
  cfg.interval = DistSpec::uniform_int(0, 50);
  cfg.seed = 77;
  std::vector<UserProfile> a = generate_users(cfg);
  std::vector<UserProfile> b = generate_users(cfg);
  CHECK(a == b);
  CHECK(format_instance_lines(a) == format_instance_lines(b));
}

TEST_CASE("substreams are independent: swapping one distribution leaves the rest") {
  InstanceConfig base;
  base.horizon = 150;
  base.capacity = DistSpec::constant(1);
  base.interval = DistSpec::constant(0);
  base.seed = 21;
  InstanceConfig wide = base;
  wide.capacity = DistSpec::uniform_int(1, 10);

  std::vector<UserProfile> narrow_users = generate_users(base);
  std::vector<UserProfile> wide_users = generate_users(wide);
  REQUIRE(narrow_users.size() == wide_users.size());
  for (std::size_t i = 0; i < narrow_users.size(); ++i) {
    CHECK(narrow_users[i].arrival == wide_users[i].arrival);
    CHECK(narrow_users[i].unit_cost == wide_users[i].unit_cost);
  }
}

TEST_CASE("secretary streams: degenerate cases") {
  CHECK(gen_secretary_stream({}, 10, Rng(1)).empty());
  std::vector<UserProfile> one = gen_secretary_stream({{1, 1.0}}, 5, Rng(9));
  REQUIRE(one.size() == 1);
  CHECK(one[0].arrival >= 1);
  CHECK(one[0].arrival <= 5);
  CHECK(one[0].arrival == one[0].departure);
  CHECK_THROWS_AS(gen_secretary_stream({{1, 1}, {1, 2}, {1, 3}}, 2, Rng(1)),
                  std::invalid_argument);
}

TEST_CASE("secretary streams use distinct sorted arrival steps") {
  std::vector<std::pair<int, double>> pool;
  for (int i = 0; i < 20; ++i) pool.emplace_back(1, i + 1.0);
  for (int seed = 0; seed < 20; ++seed) {
    std::vector<UserProfile> users = gen_secretary_stream(pool, 25, Rng(seed));
    std::set<int> steps;
    int prev = 0;
    for (const auto& u : users) {
      CHECK(u.arrival > prev);
      prev = u.arrival;
      steps.insert(u.arrival);
    }
    CHECK(steps.size() == pool.size());
  }
}

TEST_CASE("secretary permutation is uniform (chi-square at n=4)") {
  // 24 permutations of four distinct costs; 4800 seeds, expected 200 per
  // cell. Critical chi-square at df=23, alpha=1e-3 is about 49.7.
  std::vector<std::pair<int, double>> pool{{1, 1.0}, {1, 2.0}, {1, 3.0}, {1, 4.0}};
  std::map<std::vector<int>, int> counts;
  int samples = 4800;
  for (int seed = 0; seed < samples; ++seed) {
    std::vector<UserProfile> users = gen_secretary_stream(pool, 8, Rng(seed + 1000));
    std::vector<int> ranks;
    for (const auto& u : users) ranks.push_back(static_cast<int>(u.unit_cost));
    counts[ranks]++;
  }
  CHECK(counts.size() == 24);
  double expected = samples / 24.0;
  double chi2 = 0.0;
  for (const auto& [perm, count] : counts) chi2 += (count - expected) * (count - expected) / expected;
  CHECK(chi2 < 49.7);
}

TEST_CASE("secretary capacity bound flags oversized users") {
  std::vector<UserProfile> users{{1, 1, 1, 5, 1.0}, {2, 2, 2, 2, 1.0}};
  CHECK(secretary_capacity_bound_ok(users, 100, 4.0));   // bound 25
  CHECK_FALSE(secretary_capacity_bound_ok(users, 8, 4.0));  // bound 2 < 5
  CHECK_THROWS_AS(secretary_capacity_bound_ok(users, 8, 0.0), std::invalid_argument);
}
