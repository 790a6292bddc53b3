#include "rtmapf/runtime.hpp"

#include <algorithm>
#include <stdexcept>

namespace rtmapf {

Lns2Options PlannerConfig::lns2_options() const {
  Lns2Options o;
  o.nb_policy = nb_policy;
  o.nb_size = nb_size;
  o.intra = agent_policy;
  o.p_conflict = p_conflict;
  o.full_path_conflicts = full_path_conflicts;
  o.truncate_at_horizon = truncate_at_horizon;
  return o;
}

std::string algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::Pibt: return "pibt";
    case Algorithm::Prp: return "prp";
    case Algorithm::Lns2: return "lns2";
    case Algorithm::Lns2Pibt: return "lns2+pibt";
  }
  return "?";
}

std::string policy_name(const PlannerConfig& config) {
  switch (config.algorithm) {
    case Algorithm::Pibt:
      return "none";
    case Algorithm::Prp:
      return config.agent_policy == AgentBudgetPolicy::Fixed ? "fixed" : "shared";
    case Algorithm::Lns2:
    case Algorithm::Lns2Pibt:
      switch (config.nb_policy.kind) {
        case NeighborhoodBudgetPolicy::Kind::Shared: return "shared";
        case NeighborhoodBudgetPolicy::Kind::Fixed: return "fixed:" + std::to_string(config.nb_policy.fixed_budget);
        case NeighborhoodBudgetPolicy::Kind::ConflictProportion: return "cpb";
      }
  }
  return "?";
}

long EpisodeResult::total_expansions() const {
  long s = 0;
  for (long e : expansions) s += e;
  return s;
}

namespace {

bool all_at_goals(std::span<const Cell> positions, std::span<const Cell> goals) {
  return std::equal(positions.begin(), positions.end(), goals.begin());
}

}  // namespace

EpisodeResult run_episode(const Instance& instance, const PlannerConfig& config, std::uint64_t seed,
                          const TraceSink& trace) {
  instance.validate();
  if (config.nb_size < 1) throw std::invalid_argument("neighborhood size must be >= 1");
  if (config.nb_policy.kind == NeighborhoodBudgetPolicy::Kind::Fixed && config.nb_policy.fixed_budget < 1)
    throw std::invalid_argument("Fixed neighborhood budget must be >= 1");

  const auto goals = instance.goals();
  const auto to_goal = build_distance_maps(instance.map, goals);
  const Lns2Options lns2 = config.lns2_options();
  Rng rng(seed);

  EpisodeResult result;
  std::vector<Cell> positions = instance.starts();
  PibtState pibt = PibtState::initial(positions, goals);
  result.trajectory.push_back(positions);
  int time = 0;

  if (all_at_goals(positions, goals)) {
    result.solved = true;
    return result;
  }

  while (time < instance.makespan_cap) {
    BudgetMeter meter(instance.budget);
    PeriodTrace period;
    period.period = result.periods;
    period.start_time = time;
    period.positions = positions;

    PartialSolution partial;
    switch (config.algorithm) {
      case Algorithm::Pibt:
        partial = pibt_prefix(instance.map, pibt, to_goal, instance.window);
        break;
      case Algorithm::Prp: {
        const auto order = random_order(instance.agent_count(), rng);
        PrpOptions options{config.agent_policy, config.truncate_at_horizon};
        partial = prp_plan(instance, to_goal, positions, order, options, meter).solution;
        break;
      }
      case Algorithm::Lns2:
        partial = lns2_plan(instance, to_goal, positions, lns2, meter, rng).solution;
        break;
      case Algorithm::Lns2Pibt: {
        auto h = hybrid_plan(instance, to_goal, positions, pibt, lns2, config.fail_policy, meter, rng);
        period.chose_pibt = h.chose_pibt;
        partial = std::move(h.solution);
        break;
      }
    }

    const SolutionPrefix prefix = resolve(partial, config.fail_policy, instance.window);
    period.expansions = meter.used();
    period.conflicts_before = prefix.conflicts_before;
    period.conflicts_after = static_cast<int>(find_conflicts(prefix.steps, instance.window).size());
    period.stayed = prefix.stayed_count();
    result.expansions.push_back(meter.used());
    result.fail_conflicts.push_back(prefix.conflicts_before);
    ++result.periods;
    if (trace) trace(period);

    for (int step = 1; step <= instance.window && time < instance.makespan_cap; ++step) {
      for (int a = 0; a < instance.agent_count(); ++a) positions[a] = prefix.steps.paths[a].cells[step];
      pibt.advance(positions, goals);
      ++time;
      result.trajectory.push_back(positions);
      if (all_at_goals(positions, goals)) {
        result.solved = true;
        result.makespan = time;
        return result;
      }
    }
  }
  result.solved = false;
  result.makespan = instance.makespan_cap;
  return result;
}

PartialSolution executed_paths(const EpisodeResult& result) {
  PartialSolution sol;
  if (result.trajectory.empty()) return sol;
  const std::size_t k = result.trajectory.front().size();
  sol.paths.resize(k);
  for (std::size_t a = 0; a < k; ++a) {
    sol.paths[a].cells.reserve(result.trajectory.size());
    for (const auto& step : result.trajectory) sol.paths[a].cells.push_back(step[a]);
  }
  return sol;
}

}  // namespace rtmapf
