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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "frugal/config.hpp"
#include "frugal/golden.hpp"
#include "frugal/harness.hpp"
#include "frugal/util.hpp"

namespace {

using namespace frugal;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string rows_to_text(const std::vector<ExperimentRow>& rows, OutputFormat format) {
  return format == OutputFormat::Csv ? experiment_rows_csv(rows) : experiment_rows_json(rows);
}

std::string log_to_csv(const AuctionOutcome& outcome) {
  std::string text = "time,event,user,tasks,price,threshold,stage_tasks\n";
  for (const auto& e : outcome.log) {
    const char* kind = nullptr;
    switch (e.kind) {
      case LogEventKind::Arrival:
        kind = "arrival";
        break;
      case LogEventKind::Decision:
        kind = "decision";
        break;
      case LogEventKind::Update:
        kind = "update";
        break;
      case LogEventKind::Departure:
        kind = "departure";
        break;
      case LogEventKind::Boundary:
        kind = "boundary";
        break;
    }
    std::ostringstream os;
    os << e.time << ',' << kind << ',' << (e.user_id < 0 ? "" : std::to_string(e.user_id)) << ','
       << e.tasks << ',' << fmt_number(e.price) << ',' << fmt_number(e.threshold) << ','
       << (e.kind == LogEventKind::Boundary ? fmt_number(e.stage_tasks) : "");
    text += os.str() + "\n";
  }
  return text;
}

struct CliOverrides {
  std::string config_path;
  std::string out_dir;
  std::string format;
  std::vector<std::string> mechanisms;
  int seeds = 0;
  std::string seed_list;
  std::string instance_path;
  bool dump_log = false;
};

RunSpec load_spec(const CliOverrides& cli, Command command) {
  RunSpec spec;
  if (!cli.config_path.empty()) {
    std::ifstream in(cli.config_path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open config: " + cli.config_path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    spec = parse_config(buffer.str());
  } else if (!cli.instance_path.empty()) {
    spec.mechanisms = {MechanismKind::HeteroOmz, MechanismKind::HeteroOmg};
    spec.include_random = true;
  } else {
    throw ConfigError("a --config file is required (instance.L has no default)", 0);
  }
  spec.command = command;
  if (!cli.out_dir.empty()) spec.out_dir = cli.out_dir;
  if (!cli.format.empty()) {
    if (cli.format == "csv")
      spec.format = OutputFormat::Csv;
    else if (cli.format == "json")
      spec.format = OutputFormat::Json;
    else
      throw ConfigError("format must be csv or json", 0);
  }
  if (!cli.mechanisms.empty()) {
    spec.mechanisms.clear();
    spec.include_random = false;
    for (const auto& name : cli.mechanisms) {
      if (name == "random")
        spec.include_random = true;
      else
        spec.mechanisms.push_back(mechanism_from_name(name));
    }
  }
  if (cli.seeds > 0) {
    spec.sweep.seeds.clear();
    for (int s = 1; s <= cli.seeds; ++s) spec.sweep.seeds.push_back(s);
  }
  if (!cli.seed_list.empty()) {
    spec.sweep.seeds.clear();
    std::istringstream in(cli.seed_list);
    std::string item;
    while (std::getline(in, item, ',')) spec.sweep.seeds.push_back(std::stoull(item));
  }
  if (!cli.instance_path.empty()) spec.instance_file = cli.instance_path;
  return spec;
}

ExperimentPlan plan_from(const RunSpec& spec) {
  ExperimentPlan plan;
  plan.mechanisms = spec.mechanisms;
  plan.include_random = spec.include_random;
  plan.delta = spec.delta;
  plan.beta = spec.beta;
  return plan;
}

std::string out_path(const RunSpec& spec, const std::string& stem) {
  std::filesystem::create_directories(spec.out_dir);
  return spec.out_dir + "/" + stem + (spec.format == OutputFormat::Csv ? ".csv" : ".json");
}

int cmd_run(const RunSpec& spec, bool dump_log) {
  ExperimentPlan plan = plan_from(spec);
  std::vector<std::uint64_t> seeds =
      spec.sweep.seeds.empty() ? std::vector<std::uint64_t>{spec.instance.seed} : spec.sweep.seeds;

  std::vector<ExperimentRow> rows;
  std::vector<UserProfile> users;
  if (spec.instance_file) {
    users = load_instance_file(*spec.instance_file);
    int horizon = spec.instance.horizon;
    for (const auto& u : users) horizon = std::max(horizon, u.departure);
    rows = evaluate_instance(users, spec.instance.tasks, horizon, spec.instance.lambda,
                             spec.instance.seed, plan);
  } else {
    ExperimentResult result = run_experiment(spec.instance, plan, seeds);
    rows = result.rows;
    users = generate_users(spec.instance);
  }

  std::string path = out_path(spec, "run");
  write_file(path, rows_to_text(rows, spec.format));
  std::cout << rows_to_text(rows, spec.format);
  std::cerr << "wrote " << path << "\n";

  if (dump_log) {
    MechanismParams params = spec.params();
    if (spec.instance_file)
      for (const auto& u : users) params.horizon = std::max(params.horizon, u.departure);
    for (MechanismKind kind : spec.mechanisms) {
      auto declarations = kind == MechanismKind::HeteroOmg ? truthful_declarations(users)
                                                           : zero_interval_declarations(users);
      AuctionOutcome outcome = run_mechanism(kind, declarations, params);
      std::string log_path = spec.out_dir + "/log_" + mechanism_name(kind) + ".csv";
      write_file(log_path, log_to_csv(outcome));
      std::cerr << "wrote " << log_path << "\n";
    }
  }
  return kExitOk;
}

int cmd_sweep(const RunSpec& spec) {
  ExperimentPlan plan = plan_from(spec);
  std::vector<int> tasks_values =
      spec.sweep.tasks_values.empty() ? std::vector<int>{spec.instance.tasks}
                                      : spec.sweep.tasks_values;
  std::vector<double> lambda_values = spec.sweep.lambda_values.empty()
                                          ? std::vector<double>{spec.instance.lambda}
                                          : spec.sweep.lambda_values;
  std::vector<std::uint64_t> seeds =
      spec.sweep.seeds.empty() ? std::vector<std::uint64_t>{spec.instance.seed} : spec.sweep.seeds;

  struct Cell {
    int tasks;
    double lambda;
    std::uint64_t seed;
  };
  std::vector<Cell> cells;
  for (int tasks : tasks_values)
    for (double lambda : lambda_values)
      for (std::uint64_t seed : seeds) cells.push_back({tasks, lambda, seed});

  std::size_t rows_per_cell = plan.mechanisms.size() + (plan.include_random ? 1 : 0);
  std::vector<ExperimentRow> rows(cells.size() * rows_per_cell);
  parallel_for(cells.size(), [&](std::size_t i) {
    InstanceConfig cfg = spec.instance;
    cfg.tasks = cells[i].tasks;
    cfg.lambda = cells[i].lambda;
    cfg.seed = cells[i].seed;
    std::vector<UserProfile> users = generate_users(cfg);
    std::vector<ExperimentRow> cell_rows =
        evaluate_instance(users, cfg.tasks, cfg.horizon, cfg.lambda, cfg.seed, plan);
    for (std::size_t m = 0; m < cell_rows.size(); ++m) rows[i * rows_per_cell + m] = cell_rows[m];
  });

  std::string path = out_path(spec, "sweep");
  write_file(path, rows_to_text(rows, spec.format));
  std::cerr << "wrote " << path << " (" << rows.size() << " rows)\n";
  return kExitOk;
}

int cmd_deviations(const RunSpec& spec) {
  ExperimentPlan plan = plan_from(spec);
  std::vector<UserProfile> users = spec.instance_file ? load_instance_file(*spec.instance_file)
                                                      : generate_users(spec.instance);
  MechanismParams params = spec.params();
  if (spec.instance_file)
    for (const auto& u : users) params.horizon = std::max(params.horizon, u.departure);

  struct Line {
    std::string mechanism;
    std::string kind;
    DeviationReport report;
  };
  std::vector<Line> lines;
  for (MechanismKind kind : plan.mechanisms) {
    std::vector<Line> per_user(users.size());
    parallel_for(users.size(), [&](std::size_t i) {
      UserId id = users[i].id;
      auto grid = default_bid_grid(kind, users, params, id);
      per_user[i] = {mechanism_name(kind), "bid",
                     test_cost_truthfulness(kind, users, params, id, grid)};
    });
    lines.insert(lines.end(), per_user.begin(), per_user.end());
    if (kind == MechanismKind::HeteroOmg) {
      std::vector<Line> time_lines(users.size());
      parallel_for(users.size(), [&](std::size_t i) {
        UserId id = users[i].id;
        auto grid = default_time_grid(users[i]);
        time_lines[i] = {mechanism_name(kind), "time",
                         test_time_truthfulness(users, params, id, grid)};
      });
      lines.insert(lines.end(), time_lines.begin(), time_lines.end());
    }
  }

  double worst_gain = 0.0;
  std::string text;
  nlohmann::json arr = nlohmann::json::array();
  if (spec.format == OutputFormat::Csv)
    text = "mechanism,kind,seed,user,truthful_utility,max_gain,deviations\n";
  for (const auto& line : lines) {
    worst_gain = std::max(worst_gain, line.report.max_gain);
    if (spec.format == OutputFormat::Csv) {
      std::ostringstream os;
      os << line.mechanism << ',' << line.kind << ',' << spec.instance.seed << ','
         << line.report.user_id << ',' << fmt_number(line.report.truthful_utility) << ','
         << fmt_number(line.report.max_gain) << ',' << line.report.deviations.size();
      text += os.str() + "\n";
    } else {
      arr.push_back({{"mechanism", line.mechanism},
                     {"kind", line.kind},
                     {"seed", spec.instance.seed},
                     {"user", line.report.user_id},
                     {"truthful_utility", line.report.truthful_utility},
                     {"max_gain", line.report.max_gain},
                     {"deviations", line.report.deviations.size()}});
    }
  }
  if (spec.format == OutputFormat::Json) text = arr.dump(2) + "\n";

  std::string path = out_path(spec, "deviations");
  write_file(path, text);
  std::cerr << "wrote " << path << "\n";
  std::cout << "max gain over " << lines.size() << " reports: " << fmt_number(worst_gain) << "\n";
  return worst_gain > 0 ? kExitVerifyMismatch : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frugal online reverse-auction simulator"};
  app.require_subcommand(1);

  CliOverrides cli;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", cli.config_path, "key=value configuration file");
    sub->add_option("--out", cli.out_dir, "output directory");
    sub->add_option("--format", cli.format, "csv or json");
    sub->add_option("--mechanism", cli.mechanisms,
                    "mechanism name (repeatable): homo-omz, hetero-omz, hetero-omg, random");
    sub->add_option("--seeds", cli.seeds, "run seeds 1..N");
    sub->add_option("--seed-list", cli.seed_list, "comma separated seed list");
    sub->add_option("--instance", cli.instance_path,
                    "replay file: one 'id arrival departure capacity cost' per line");
  };

  CLI::App* run = app.add_subcommand("run", "run mechanisms on one instance");
  add_common(run);
  run->add_flag("--log", cli.dump_log, "also write per-mechanism decision logs");
  CLI::App* verify = app.add_subcommand("verify-examples", "replay the built-in golden traces");
  CLI::App* sweep = app.add_subcommand("sweep", "cartesian sweep over L, lambda and seeds");
  add_common(sweep);
  CLI::App* deviations =
      app.add_subcommand("deviations", "bid/time deviation replay on one instance");
  add_common(deviations);

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return frugal::verify_examples(std::cout);
    if (run->parsed()) return cmd_run(load_spec(cli, Command::Run), cli.dump_log);
    if (sweep->parsed()) return cmd_sweep(load_spec(cli, Command::Sweep));
    if (deviations->parsed()) return cmd_deviations(load_spec(cli, Command::Deviations));
  } catch (const frugal::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return frugal::kExitConfigError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return frugal::kExitConfigError;
  } catch (const std::runtime_error& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return frugal::kExitIoError;
  }
  return frugal::kExitOk;
}
