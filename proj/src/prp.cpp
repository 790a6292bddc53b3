#include "rtmapf/prp.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rtmapf {

long allocate_fixed(long total_remaining, int agents_remaining) {
  if (agents_remaining < 1) throw std::invalid_argument("allocate_fixed needs at least one agent");
  return std::max(total_remaining, 0L) / agents_remaining;
}

PriorityOrder random_order(int agent_count, Rng& rng) {
  PriorityOrder order(agent_count);
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(std::span<int>(order));
  return order;
}

bool is_permutation_of_agents(std::span<const int> order, int agent_count) {
  if (static_cast<int>(order.size()) != agent_count) return false;
  std::vector<bool> seen(agent_count, false);
  for (int a : order) {
    if (a < 0 || a >= agent_count || seen[a]) return false;
    seen[a] = true;
  }
  return true;
}

int PrpResult::planned_count() const {
  return static_cast<int>(std::count_if(agents.begin(), agents.end(), [](const auto& r) { return r.planned; }));
}

PrpResult prp_plan(const Instance& instance, std::span<const DistanceMap> to_goal,
                   std::span<const Cell> positions, std::span<const int> order, const PrpOptions& options,
                   BudgetMeter& meter) {
  const int k = instance.agent_count();
  if (!is_permutation_of_agents(order, k)) throw std::invalid_argument("priority order is not a permutation");
  PrpResult result;
  result.solution = PartialSolution::staying(positions);
  result.agents.assign(k, {});

  ConstraintTable table(instance.map, instance.horizon);
  std::vector<int> pending;
  pending.reserve(k);
  for (int a : order) {
    if (positions[a] == instance.agents[a].goal) {
      result.agents[a].planned = true;
      result.agents[a].attempted = true;
      table.add_hard(result.solution.paths[a]);
    } else {
      pending.push_back(a);
    }
  }

  for (std::size_t i = 0; i < pending.size(); ++i) {
    const int a = pending[i];
    auto& record = result.agents[a];
    record.attempted = true;
    record.allocation = options.policy == AgentBudgetPolicy::Fixed
                            ? allocate_fixed(meter.remaining(), static_cast<int>(pending.size() - i))
                            : meter.remaining();
    SearchRequest request{positions[a], instance.agents[a].goal, instance.horizon, record.allocation, 1,
                          options.truncate_at_horizon};
    auto outcome = plan_path(instance.map, to_goal[a], table, request, meter);
    record.charged = outcome.expansions;
    if (outcome.found()) {
      record.planned = true;
      result.solution.paths[a] = std::move(outcome.path);
      table.add_hard(result.solution.paths[a]);
    }
  }
  return result;
}

}  // namespace rtmapf
