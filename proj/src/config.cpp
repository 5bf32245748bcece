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

#include "frugal/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "frugal/util.hpp"

namespace frugal {

namespace {

std::string trim(const std::string& s) {
  auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) parts.push_back(trim(item));
  return parts;
}

double parse_double(const std::string& value, int line) {
  try {
    std::size_t used = 0;
    double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::logic_error&) {
    throw ConfigError("expected a number, got '" + value + "'", line);
  }
}

long long parse_int(const std::string& value, int line) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(value, &used);
    if (used != value.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::logic_error&) {
    throw ConfigError("expected an integer, got '" + value + "'", line);
  }
}

// "a:b:step" ranges or comma lists, both inclusive.
std::vector<double> parse_value_list(const std::string& value, int line) {
  std::vector<double> out;
  if (value.find(':') != std::string::npos) {
    auto parts = split(value, ':');
    if (parts.size() != 3) throw ConfigError("range must be from:to:step", line);
    double from = parse_double(parts[0], line);
    double to = parse_double(parts[1], line);
    double step = parse_double(parts[2], line);
    if (!(step > 0) || to < from) throw ConfigError("range must be increasing", line);
    for (double v = from; v <= to + step * 1e-9; v += step) out.push_back(v);
    return out;
  }
  for (const auto& item : split(value, ','))
    if (!item.empty()) out.push_back(parse_double(item, line));
  if (out.empty()) throw ConfigError("empty value list", line);
  return out;
}

std::vector<std::pair<int, double>> parse_pool(const std::string& value, int line) {
  std::vector<std::pair<int, double>> pool;
  for (const auto& item : split(value, ';')) {
    if (item.empty()) continue;
    auto at = item.find('@');
    if (at == std::string::npos)
      throw ConfigError("pool entries look like capacity@cost, got '" + item + "'", line);
    int cap = static_cast<int>(parse_int(item.substr(0, at), line));
    double cost = parse_double(item.substr(at + 1), line);
    if (cap < 1 || !(cost > 0)) throw ConfigError("pool entry out of range: '" + item + "'", line);
    pool.emplace_back(cap, cost);
  }
  return pool;
}

std::string format_pool(const std::vector<std::pair<int, double>>& pool) {
  std::string out;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (i > 0) out += ';';
    out += fmt_number(pool[i].first) + "@" + fmt_number(pool[i].second);
  }
  return out;
}

const char* command_name(Command c) {
  switch (c) {
    case Command::Run:
      return "run";
    case Command::VerifyExamples:
      return "verify-examples";
    case Command::Sweep:
      return "sweep";
    case Command::Deviations:
      return "deviations";
  }
  return "run";
}

}  // namespace

RunSpec parse_config(const std::string& text) {
  RunSpec spec;
  spec.mechanisms = {MechanismKind::HeteroOmz, MechanismKind::HeteroOmg};
  spec.include_random = true;

  bool saw_tasks = false;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string stripped = trim(raw);
    if (stripped.empty() || stripped[0] == '#') continue;
    auto eq = stripped.find('=');
    if (eq == std::string::npos) throw ConfigError("expected key = value", line);
    std::string key = trim(stripped.substr(0, eq));
    std::string value = trim(stripped.substr(eq + 1));
    if (key.empty()) throw ConfigError("empty key", line);
    if (value.empty()) throw ConfigError("empty value for key '" + key + "'", line);
    if (key == "L") key = "instance.L";

    if (key == "command") {
      if (value == "run")
        spec.command = Command::Run;
      else if (value == "verify-examples")
        spec.command = Command::VerifyExamples;
      else if (value == "sweep")
        spec.command = Command::Sweep;
      else if (value == "deviations")
        spec.command = Command::Deviations;
      else
        throw ConfigError("unknown command '" + value + "'", line);
    } else if (key == "instance.T") {
      long long v = parse_int(value, line);
      if (v < 1) throw ConfigError("T must be >= 1", line);
      spec.instance.horizon = static_cast<int>(v);
    } else if (key == "instance.L") {
      long long v = parse_int(value, line);
      if (v < 1) throw ConfigError("L must be >= 1", line);
      spec.instance.tasks = static_cast<int>(v);
      saw_tasks = true;
    } else if (key == "instance.lambda") {
      double v = parse_double(value, line);
      if (!(v > 0)) throw ConfigError("lambda must be positive", line);
      spec.instance.lambda = v;
    } else if (key == "instance.cost" || key == "instance.capacity" ||
               key == "instance.interval") {
      DistSpec dist;
      try {
        dist = DistSpec::parse(value);
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what(), line);
      }
      if (key == "instance.cost")
        spec.instance.cost = dist;
      else if (key == "instance.capacity")
        spec.instance.capacity = dist;
      else
        spec.instance.interval = dist;
    } else if (key == "instance.order") {
      if (value == "iid")
        spec.instance.order = OrderModel::Iid;
      else if (value == "secretary")
        spec.instance.order = OrderModel::Secretary;
      else
        throw ConfigError("order must be iid or secretary", line);
    } else if (key == "instance.pool") {
      spec.instance.secretary_pool = parse_pool(value, line);
    } else if (key == "instance.omega") {
      double v = parse_double(value, line);
      if (!(v > 0)) throw ConfigError("omega must be positive", line);
      spec.instance.omega = v;
    } else if (key == "instance.seed") {
      spec.instance.seed = static_cast<std::uint64_t>(parse_int(value, line));
    } else if (key == "instance.file") {
      spec.instance_file = value;
    } else if (key == "mechanism.names") {
      spec.mechanisms.clear();
      spec.include_random = false;
      for (const auto& name : split(value, ',')) {
        if (name == "random") {
          spec.include_random = true;
          continue;
        }
        try {
          spec.mechanisms.push_back(mechanism_from_name(name));
        } catch (const std::invalid_argument& e) {
          throw ConfigError(e.what(), line);
        }
      }
    } else if (key == "mechanism.delta") {
      double v = parse_double(value, line);
      if (!(v > 1)) throw ConfigError("delta must exceed 1", line);
      spec.delta = v;
    } else if (key == "mechanism.beta") {
      double v = parse_double(value, line);
      if (!(v > 0)) throw ConfigError("beta must be positive", line);
      spec.beta = v;
    } else if (key == "sweep.L") {
      spec.sweep.tasks_values.clear();
      for (double v : parse_value_list(value, line)) {
        if (v < 1) throw ConfigError("sweep.L values must be >= 1", line);
        spec.sweep.tasks_values.push_back(static_cast<int>(v));
      }
    } else if (key == "sweep.lambda") {
      spec.sweep.lambda_values.clear();
      for (double v : parse_value_list(value, line)) {
        if (!(v > 0)) throw ConfigError("sweep.lambda values must be positive", line);
        spec.sweep.lambda_values.push_back(v);
      }
    } else if (key == "sweep.seeds") {
      long long n = parse_int(value, line);
      if (n < 1) throw ConfigError("sweep.seeds must be >= 1", line);
      spec.sweep.seeds.clear();
      for (long long s = 1; s <= n; ++s) spec.sweep.seeds.push_back(static_cast<std::uint64_t>(s));
    } else if (key == "sweep.seed_list") {
      spec.sweep.seeds.clear();
      for (const auto& item : split(value, ','))
        if (!item.empty())
          spec.sweep.seeds.push_back(static_cast<std::uint64_t>(parse_int(item, line)));
    } else if (key == "output.dir") {
      spec.out_dir = value;
    } else if (key == "output.format") {
      if (value == "csv")
        spec.format = OutputFormat::Csv;
      else if (value == "json")
        spec.format = OutputFormat::Json;
      else
        throw ConfigError("format must be csv or json", line);
    } else {
      throw ConfigError("unknown key '" + key + "'", line);
    }
  }

  if (!saw_tasks && spec.sweep.tasks_values.empty() && !spec.instance_file)
    throw ConfigError("instance.L is required", 0);
  return spec;
}

std::string serialize_config(const RunSpec& spec) {
  std::ostringstream out;
  out << "command = " << command_name(spec.command) << "\n";
  out << "instance.T = " << spec.instance.horizon << "\n";
  out << "instance.L = " << spec.instance.tasks << "\n";
  out << "instance.lambda = " << fmt_number(spec.instance.lambda) << "\n";
  out << "instance.cost = " << spec.instance.cost.format() << "\n";
  out << "instance.capacity = " << spec.instance.capacity.format() << "\n";
  out << "instance.interval = " << spec.instance.interval.format() << "\n";
  out << "instance.order = " << (spec.instance.order == OrderModel::Iid ? "iid" : "secretary")
      << "\n";
  if (!spec.instance.secretary_pool.empty())
    out << "instance.pool = " << format_pool(spec.instance.secretary_pool) << "\n";
  if (spec.instance.omega) out << "instance.omega = " << fmt_number(*spec.instance.omega) << "\n";
  out << "instance.seed = " << spec.instance.seed << "\n";
  if (spec.instance_file) out << "instance.file = " << *spec.instance_file << "\n";
  out << "mechanism.names = ";
  for (std::size_t i = 0; i < spec.mechanisms.size(); ++i) {
    if (i > 0) out << ",";
    out << mechanism_name(spec.mechanisms[i]);
  }
  if (spec.include_random) out << (spec.mechanisms.empty() ? "" : ",") << "random";
  out << "\n";
  out << "mechanism.delta = " << fmt_number(spec.delta) << "\n";
  out << "mechanism.beta = " << fmt_number(spec.beta) << "\n";
  if (!spec.sweep.tasks_values.empty()) {
    out << "sweep.L = ";
    for (std::size_t i = 0; i < spec.sweep.tasks_values.size(); ++i)
      out << (i ? "," : "") << spec.sweep.tasks_values[i];
    out << "\n";
  }
  if (!spec.sweep.lambda_values.empty()) {
    out << "sweep.lambda = ";
    for (std::size_t i = 0; i < spec.sweep.lambda_values.size(); ++i)
      out << (i ? "," : "") << fmt_number(spec.sweep.lambda_values[i]);
    out << "\n";
  }
  if (!spec.sweep.seeds.empty()) {
    out << "sweep.seed_list = ";
    for (std::size_t i = 0; i < spec.sweep.seeds.size(); ++i)
      out << (i ? "," : "") << spec.sweep.seeds[i];
    out << "\n";
  }
  out << "output.dir = " << spec.out_dir << "\n";
  out << "output.format = " << (spec.format == OutputFormat::Csv ? "csv" : "json") << "\n";
  return out.str();
}

std::vector<UserProfile> parse_instance_lines(const std::string& text) {
  std::vector<UserProfile> users;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string stripped = trim(raw);
    if (stripped.empty() || stripped[0] == '#') continue;
    std::istringstream fields(stripped);
    UserProfile u;
    if (!(fields >> u.id >> u.arrival >> u.departure >> u.capacity >> u.unit_cost))
      throw ConfigError("expected 'id arrival departure capacity cost'", line);
    std::string extra;
    if (fields >> extra) throw ConfigError("trailing characters '" + extra + "'", line);
    try {
      validate_profile(u, std::max(u.departure, u.arrival));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what(), line);
    }
    users.push_back(u);
  }
  return users;
}

std::vector<UserProfile> load_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance_lines(buffer.str());
}

std::string format_instance_lines(const std::vector<UserProfile>& users) {
  std::ostringstream out;
  for (const auto& u : users)
    out << u.id << ' ' << u.arrival << ' ' << u.departure << ' ' << u.capacity << ' '
        << fmt_number(u.unit_cost) << "\n";
  return out.str();
}

namespace {

std::string opt_field(const std::optional<double>& v) { return v ? fmt_number(*v) : ""; }

}  // namespace

std::string experiment_row_csv(const ExperimentRow& r) {
  std::ostringstream os;
  os << r.mechanism << ',' << r.seed << ',' << r.horizon << ',' << r.tasks << ','
     << fmt_number(r.lambda) << ',' << fmt_number(r.delta) << ',' << fmt_number(r.beta) << ','
     << fmt_number(r.total_payment) << ',' << fmt_number(r.tasks_completed) << ','
     << fmt_number(r.price_per_task) << ',' << opt_field(r.opt_cost_L) << ','
     << opt_field(r.opt_cost_2L) << ',' << opt_field(r.idealistic_ratio) << ','
     << opt_field(r.realistic_ratio);
  return os.str();
}

std::string experiment_rows_csv(const std::vector<ExperimentRow>& rows) {
  std::string text = std::string(kExperimentCsvHeader) + "\n";
  for (const auto& r : rows) text += experiment_row_csv(r) + "\n";
  return text;
}

std::string experiment_rows_json(const std::vector<ExperimentRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json j{{"mechanism", r.mechanism},
                     {"seed", r.seed},
                     {"T", r.horizon},
                     {"L", r.tasks},
                     {"lambda", r.lambda},
                     {"delta", r.delta},
                     {"beta", r.beta},
                     {"total_payment", r.total_payment},
                     {"tasks_completed", r.tasks_completed},
                     {"price_per_task", r.price_per_task}};
    if (r.opt_cost_L) j["opt_cost_L"] = *r.opt_cost_L;
    if (r.opt_cost_2L) j["opt_cost_2L"] = *r.opt_cost_2L;
    if (r.idealistic_ratio) j["idealistic_ratio"] = *r.idealistic_ratio;
    if (r.realistic_ratio) j["realistic_ratio"] = *r.realistic_ratio;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

}  // namespace frugal
