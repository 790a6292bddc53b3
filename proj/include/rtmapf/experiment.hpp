#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rtmapf/benchio.hpp"
#include "rtmapf/runtime.hpp"

namespace rtmapf {

// One labelled planner configuration in a sweep.
struct PlannerEntry {
  std::string algorithm;
  std::string policy;
  PlannerConfig config;
};

// Parses "pibt", "prp:shared", "prp:fixed", "lns2:shared", "lns2:fixed:50",
// "lns2:cpb", "lns2+pibt:cpb", ...  Throws std::invalid_argument.
PlannerEntry parse_planner(const std::string& token);
// The nine standard algorithm/policy columns.
std::vector<PlannerEntry> default_planners();

enum class SweepKind { Agents, Window };

struct ExperimentSpec {
  std::string grid;
  std::string map_path;
  std::vector<std::string> scen_paths;
  SweepKind sweep = SweepKind::Agents;
  std::vector<int> sweep_values;
  int fixed_agents = 0;   // when sweeping windows
  int fixed_window = 5;   // when sweeping agents
  long budget_multiplier = 15;
  std::optional<long> budget;    // absolute, overrides the multiplier
  std::optional<int> horizon;    // default 2 * window
  int makespan_cap = 100;
  std::uint64_t seed = 1;
  FailPolicy fail_policy = FailPolicy::IStay;
  int nb_size = 4;
  std::vector<PlannerEntry> planners;

  void validate() const;
};

// Preset sweeps. `exp1` varies agents at w = 5; `exp2` varies w from 2 to 8.
std::vector<int> exp1_agent_counts(const std::string& grid);
int exp2_agent_count(const std::string& grid);
ExperimentSpec preset_spec(const std::string& preset, const std::string& grid, const std::string& data_dir,
                           int scens);

// MovingAI layout: <dir>/<grid>.map and <dir>/scen-random/<grid>-random-<i>.scen.
std::string benchmark_map_path(const std::string& data_dir, const std::string& grid);
std::string benchmark_scen_path(const std::string& data_dir, const std::string& grid, int index);

// Plain "key = value" lines; '#' starts a comment. List values are comma separated.
ExperimentSpec parse_experiment_spec(const std::string& text, const std::string& base_dir = ".");

using ProgressFn = std::function<void(std::size_t done, std::size_t total)>;

// Every (planner x sweep value x scenario) episode, sorted by
// (grid, algorithm, policy, sweep value, scen id). Output is independent of `jobs`.
std::vector<RunRecord> run_bench(const ExperimentSpec& spec, int jobs = 1, const ProgressFn& progress = {});

RunRecord make_record(const std::string& grid, const PlannerEntry& planner, const Instance& instance,
                      std::uint64_t seed, int scen_id, const EpisodeResult& result);

// Mean capped makespan per (sweep value, algorithm/policy). Rows are sweep
// values, columns follow the standard planner order.
std::string aggregate_table(const std::vector<RunRecord>& records);

struct Report {
  std::map<std::string, std::string> cactus;  // grid -> cactus CSV
  std::map<std::string, std::string> table;   // grid -> aggregate table CSV
};

Report make_report(const std::vector<RunRecord>& records);

}  // namespace rtmapf
