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

#include "frugal/golden.hpp"

#include <sstream>
#include <vector>

#include "frugal/config.hpp"
#include "frugal/util.hpp"

namespace frugal {

namespace {

// Hand-derived step-by-step traces for the two reference instances. These
// were worked out on paper from the mechanism rules; they must never be
// regenerated from the implementation they guard.
constexpr const char* kGolden1 =
    "t=1 arrival user=1\n"
    "t=1 decision user=1 f=1 p=5 b*=5\n"
    "t=1 boundary b*=2 L'=2\n"
    "t=2 arrival user=2\n"
    "t=2 decision user=2 f=0 p=0 b*=2\n"
    "t=2 boundary b*=2 L'=4\n"
    "t=4 arrival user=3\n"
    "t=4 decision user=3 f=0 p=0 b*=2\n"
    "t=4 boundary b*=4 L'=8\n"
    "t=6 arrival user=4\n"
    "t=6 decision user=4 f=4 p=4 b*=4\n"
    "t=7 arrival user=5\n"
    "t=7 decision user=5 f=3 p=4 b*=4\n";
constexpr std::uint64_t kGolden1Checksum = 0x62217F1F10BCBF68ULL;

constexpr const char* kGolden2 =
    "t=1 arrival user=1\n"
    "t=1 decision user=1 f=1 p=5 b*=5\n"
    "t=1 boundary b*=5 L'=2\n"
    "t=1 update user=1 f=2 p=5 b*=5\n"
    "t=2 arrival user=2\n"
    "t=2 decision user=2 f=0 p=0 b*=5\n"
    "t=2 departure user=2 f=0 p=0\n"
    "t=2 boundary b*=4 L'=4\n"
    "t=2 update user=1 f=4 p=4 b*=4\n"
    "t=4 arrival user=3\n"
    "t=4 decision user=3 f=0 p=0 b*=4\n"
    "t=4 departure user=3 f=0 p=0\n"
    "t=4 boundary b*=5 L'=8\n"
    "t=4 update user=1 f=4 p=5 b*=5\n"
    "t=5 departure user=1 f=4 p=5\n"
    "t=6 arrival user=4\n"
    "t=6 decision user=4 f=4 p=5 b*=5\n"
    "t=6 departure user=4 f=4 p=5\n"
    "t=7 arrival user=5\n"
    "t=7 decision user=5 f=0 p=0 b*=5\n"
    "t=7 departure user=5 f=0 p=0\n";
constexpr std::uint64_t kGolden2Checksum = 0x3C5F570C023B30EEULL;

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

// Names the first diverging key=value token so a regression points straight
// at the broken field instead of a whole line.
std::string describe_mismatch(const std::string& expected, const std::string& actual) {
  std::istringstream ein(expected);
  std::istringstream ain(actual);
  std::string etok;
  std::string atok;
  while (std::getline(ein, etok, ' ')) {
    if (!std::getline(ain, atok, ' ')) atok = "<missing>";
    if (etok != atok) {
      auto eq = etok.find('=');
      std::string field = eq == std::string::npos ? etok : etok.substr(0, eq);
      return "field '" + field + "': expected " + etok + ", got " + atok;
    }
  }
  if (std::getline(ain, atok, ' ')) return "unexpected trailing field " + atok;
  return "lines differ";
}

GoldenCheck diff_against_golden(const std::string& golden, std::uint64_t checksum,
                                const AuctionOutcome& outcome) {
  GoldenCheck check;
  if (fnv1a(golden) != checksum) {
    check.integrity_ok = false;
    check.match = false;
    check.first_mismatch = "embedded golden trace failed its checksum";
    return check;
  }
  std::vector<std::string> expected = split_lines(golden);
  std::vector<std::string> actual = split_lines(outcome.serialize_log());
  std::size_t n = std::min(expected.size(), actual.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (expected[i] == actual[i]) continue;
    check.match = false;
    std::string step = expected[i].substr(0, expected[i].find(' '));
    check.first_mismatch =
        "step " + step.substr(2) + ", " + describe_mismatch(expected[i], actual[i]);
    return check;
  }
  if (expected.size() != actual.size()) {
    check.match = false;
    const auto& longer = expected.size() > actual.size() ? expected : actual;
    std::string extra = longer[n];
    check.first_mismatch = (expected.size() > actual.size() ? "missing event: " : "extra event: ") +
                           extra;
  }
  return check;
}

}  // namespace

std::vector<UserProfile> reference_instance_1() {
  return {
      {1, 1, 1, 4, 2}, {2, 2, 2, 4, 4}, {3, 4, 4, 4, 5}, {4, 6, 6, 4, 1}, {5, 7, 7, 4, 3},
  };
}

std::vector<UserProfile> reference_instance_2() {
  return {
      {1, 1, 5, 4, 2}, {2, 2, 2, 4, 4}, {3, 4, 4, 4, 5}, {4, 6, 6, 4, 1}, {5, 7, 7, 4, 3},
  };
}

MechanismParams reference_params() { return MechanismParams{8, 8, 5.0, 2.0}; }

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char byte : text) {
    hash ^= byte;
    hash *= 1099511628211ULL;
  }
  return hash;
}

GoldenCheck verify_reference_trace_1() {
  AuctionOutcome outcome =
      hetero_omz(truthful_declarations(reference_instance_1()), reference_params());
  return diff_against_golden(kGolden1, kGolden1Checksum, outcome);
}

GoldenCheck verify_reference_trace_2() {
  AuctionOutcome outcome =
      hetero_omg(truthful_declarations(reference_instance_2()), reference_params());
  return diff_against_golden(kGolden2, kGolden2Checksum, outcome);
}

int verify_examples(std::ostream& out) {
  int exit_code = kExitOk;
  auto report = [&](const char* name, const GoldenCheck& check) {
    if (!check.integrity_ok) {
      out << "[INTEGRITY] " << name << ": " << check.first_mismatch << "\n";
      exit_code = kExitGoldenIntegrity;
    } else if (!check.match) {
      out << "[FAIL] " << name << ": " << check.first_mismatch << "\n";
      if (exit_code == kExitOk) exit_code = kExitVerifyMismatch;
    } else {
      out << "[PASS] " << name << "\n";
    }
  };
  report("reference trace 1 (hetero-omz)", verify_reference_trace_1());
  report("reference trace 2 (hetero-omg)", verify_reference_trace_2());
  return exit_code;
}

}  // namespace frugal
