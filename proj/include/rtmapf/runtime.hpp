#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rtmapf/domain.hpp"
#include "rtmapf/fail_policy.hpp"
#include "rtmapf/lns2.hpp"
#include "rtmapf/pibt.hpp"
#include "rtmapf/prp.hpp"

namespace rtmapf {

enum class Algorithm { Pibt, Prp, Lns2, Lns2Pibt };

struct PlannerConfig {
  Algorithm algorithm = Algorithm::Lns2;
  AgentBudgetPolicy agent_policy = AgentBudgetPolicy::Shared;  // PrP, and LNS2's intra-neighborhood policy
  NeighborhoodBudgetPolicy nb_policy = NeighborhoodBudgetPolicy::conflict_proportion();
  int nb_size = 4;
  double p_conflict = 0.8;
  FailPolicy fail_policy = FailPolicy::IStay;
  bool full_path_conflicts = false;
  bool truncate_at_horizon = false;

  Lns2Options lns2_options() const;
};

// Short label such as "lns2" / "cpb", used in result files.
std::string algorithm_name(Algorithm a);
std::string policy_name(const PlannerConfig& config);

struct PeriodTrace {
  int period = 0;
  int start_time = 0;
  long expansions = 0;
  int conflicts_before = 0;  // within the window, before the fail policy
  int conflicts_after = 0;
  int stayed = 0;
  bool chose_pibt = false;
  std::vector<Cell> positions;  // at the start of the period
};

struct EpisodeResult {
  bool solved = false;
  int makespan = 0;
  int periods = 0;
  std::vector<long> expansions;       // per period
  std::vector<int> fail_conflicts;    // per period, conflicts the fail policy had to resolve
  std::vector<std::vector<Cell>> trajectory;  // executed positions for t = 0..end

  long total_expansions() const;
};

using TraceSink = std::function<void(const PeriodTrace&)>;

// Plan / resolve / execute until all agents sit at their goals or the cap is reached.
EpisodeResult run_episode(const Instance& instance, const PlannerConfig& config, std::uint64_t seed,
                          const TraceSink& trace = {});

// The executed trajectory as one path per agent, for whole-episode conflict checks.
PartialSolution executed_paths(const EpisodeResult& result);

}  // namespace rtmapf
