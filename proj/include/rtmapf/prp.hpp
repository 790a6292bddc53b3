#pragma once

#include <span>
#include <vector>

#include "rtmapf/domain.hpp"
#include "rtmapf/rng.hpp"
#include "rtmapf/search.hpp"

namespace rtmapf {

// How a pool of expansions is handed to the agents planned one after another.
// Shared: each agent may draw on everything left. Fixed: even split of what is
// left over the agents still to plan, recomputed after every agent.
enum class AgentBudgetPolicy { Shared, Fixed };

// Allocation for the next agent under Fixed: floor(total_remaining / agents_remaining).
long allocate_fixed(long total_remaining, int agents_remaining);

// A permutation of agent ids, highest priority first.
using PriorityOrder = std::vector<int>;

PriorityOrder random_order(int agent_count, Rng& rng);
bool is_permutation_of_agents(std::span<const int> order, int agent_count);

struct PrpAgentRecord {
  bool planned = false;
  bool attempted = false;
  long allocation = 0;  // budget available to this agent's search
  long charged = 0;     // expansions actually spent
};

struct PrpResult {
  PartialSolution solution;
  std::vector<PrpAgentRecord> agents;
  int planned_count() const;
};

struct PrpOptions {
  AgentBudgetPolicy policy = AgentBudgetPolicy::Shared;
  bool truncate_at_horizon = false;
};

// Prioritized planning with the Persist behavior: an agent whose search fails
// keeps a length-1 path and planning continues with the next agent. Agents
// already at their goal are fixed first as zero-cost stay paths. Planned paths
// become hard constraints for every later agent.
PrpResult prp_plan(const Instance& instance, std::span<const DistanceMap> to_goal,
                   std::span<const Cell> positions, std::span<const int> order, const PrpOptions& options,
                   BudgetMeter& meter);

}  // namespace rtmapf
