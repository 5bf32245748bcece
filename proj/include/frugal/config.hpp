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
#include <stdexcept>
#include <string>
#include <vector>

#include "frugal/generators.hpp"
#include "frugal/harness.hpp"
#include "frugal/mechanisms.hpp"

namespace frugal {

// Exit codes shared by the CLI.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyMismatch = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitIoError = 3;
inline constexpr int kExitGoldenIntegrity = 4;

class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& message, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

enum class Command { Run, VerifyExamples, Sweep, Deviations };
enum class OutputFormat { Csv, Json };

struct SweepSpec {
  std::vector<int> tasks_values;
  std::vector<double> lambda_values;
  std::vector<std::uint64_t> seeds;

  bool operator==(const SweepSpec&) const = default;
};

struct RunSpec {
  Command command = Command::Run;
  InstanceConfig instance;
  std::optional<std::string> instance_file;
  std::vector<MechanismKind> mechanisms;
  bool include_random = false;
  double delta = 2.0;
  double beta = 10.0;
  SweepSpec sweep;
  std::string out_dir = ".";
  OutputFormat format = OutputFormat::Csv;

  bool operator==(const RunSpec&) const = default;

  MechanismParams params() const {
    return MechanismParams{instance.tasks, instance.horizon, beta, delta};
  }
};

// Flat key=value configuration, '#' comments, sections spelled as key
// prefixes (instance., mechanism., sweep.). Unknown keys and out-of-range
// values raise ConfigError with the offending line.
RunSpec parse_config(const std::string& text);

// Canonical form; parse(serialize(spec)) == spec.
std::string serialize_config(const RunSpec& spec);

// Replay file: one user per line, "id arrival departure capacity cost".
std::vector<UserProfile> parse_instance_lines(const std::string& text);
std::vector<UserProfile> load_instance_file(const std::string& path);
std::string format_instance_lines(const std::vector<UserProfile>& users);

// The stable result schema. Undefined optional metrics serialize as empty
// CSV fields / omitted JSON keys.
inline constexpr const char* kExperimentCsvHeader =
    "mechanism,seed,T,L,lambda,delta,beta,total_payment,tasks_completed,price_per_task,"
    "opt_cost_L,opt_cost_2L,idealistic_ratio,realistic_ratio";

std::string experiment_row_csv(const ExperimentRow& row);
std::string experiment_rows_csv(const std::vector<ExperimentRow>& rows);
std::string experiment_rows_json(const std::vector<ExperimentRow>& rows);

}  // namespace frugal
