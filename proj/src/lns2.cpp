#include "rtmapf/lns2.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rtmapf {

long neighborhood_lower_bound(int neighborhood_size, int window) {
  const long n = neighborhood_size;
  return (n * (n + 1) / 2 + 1) * window;
}

long conflict_share(std::span<const int> neighborhood, std::span<const int> conflicts, long remaining) {
  long total = 0;
  for (int c : conflicts) total += c;
  if (total == 0 || remaining <= 0) return 0;
  long part = 0;
  for (int a : neighborhood) part += conflicts[a];
  // remaining * part can overflow only far beyond any realistic budget.
  return remaining * part / total;
}

long neighborhood_budget(const NeighborhoodBudgetPolicy& policy, std::span<const int> neighborhood,
                         std::span<const int> conflicts, long remaining, int window) {
  remaining = std::max(remaining, 0L);
  switch (policy.kind) {
    case NeighborhoodBudgetPolicy::Kind::Shared:
      return remaining;
    case NeighborhoodBudgetPolicy::Kind::Fixed:
      return std::min(policy.fixed_budget, remaining);
    case NeighborhoodBudgetPolicy::Kind::ConflictProportion: {
      const long share = conflict_share(neighborhood, conflicts, remaining);
      const long floor = neighborhood_lower_bound(static_cast<int>(neighborhood.size()), window);
      return std::min(remaining, std::max(share, floor));
    }
  }
  return 0;
}

Neighborhood select_neighborhood(std::span<const Conflict> conflicts, int agent_count, int size,
                                 double p_conflict, Rng& rng) {
  size = std::clamp(size, 1, std::max(agent_count, 1));
  Neighborhood chosen;
  if (agent_count <= 0) return chosen;
  std::vector<bool> in(agent_count, false);
  auto add = [&](int a) {
    if (!in[a]) {
      in[a] = true;
      chosen.push_back(a);
    }
  };

  if (!conflicts.empty() && rng.chance(p_conflict)) {
    std::vector<std::vector<int>> adjacent(agent_count);
    for (const auto& c : conflicts) {
      adjacent[c.first].push_back(c.second);
      adjacent[c.second].push_back(c.first);
    }
    std::vector<int> conflicting;
    for (int a = 0; a < agent_count; ++a) {
      auto& adj = adjacent[a];
      std::sort(adj.begin(), adj.end());
      adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
      if (!adj.empty()) conflicting.push_back(a);
    }
    int current = conflicting[rng.below(conflicting.size())];
    add(current);
    for (int step = 0; step < 10 * size && static_cast<int>(chosen.size()) < size; ++step) {
      const auto& adj = adjacent[current];
      current = adj[rng.below(adj.size())];
      add(current);
    }
    while (static_cast<int>(chosen.size()) < size) add(static_cast<int>(rng.below(agent_count)));
  } else {
    std::vector<int> all(agent_count);
    std::iota(all.begin(), all.end(), 0);
    for (int i = 0; i < size; ++i) {
      std::swap(all[i], all[i + rng.below(agent_count - i)]);
      add(all[i]);
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

std::optional<std::vector<TimedPath>> replan_neighborhood(const Instance& instance,
                                                           std::span<const DistanceMap> to_goal,
                                                           std::span<const Cell> positions,
                                                           std::span<const int> neighborhood, long allocation,
                                                           ConstraintTable& soft, BudgetMeter& meter,
                                                           const Lns2Options& options, Rng& rng) {
  allocation = std::min(allocation, meter.remaining());
  if (allocation <= 0 || neighborhood.empty()) return std::nullopt;

  std::vector<int> order(neighborhood.size());
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(std::span<int>(order));

  std::vector<TimedPath> paths(neighborhood.size());
  std::vector<int> added;
  long spent = 0;
  bool ok = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int slot = order[i];
    const int agent = neighborhood[slot];
    const long left = allocation - spent;
    const long budget = options.intra == AgentBudgetPolicy::Fixed
                            ? allocate_fixed(left, static_cast<int>(order.size() - i))
                            : left;
    SearchRequest request{positions[agent], instance.agents[agent].goal, instance.horizon, budget, 1,
                          options.truncate_at_horizon};
    auto outcome = plan_path(instance.map, to_goal[agent], soft, request, meter);
    spent += outcome.expansions;
    if (!outcome.found()) {
      ok = false;
      break;
    }
    paths[slot] = std::move(outcome.path);
    soft.add_hard(paths[slot]);
    added.push_back(slot);
  }
  for (int slot : added) soft.remove_hard(paths[slot]);
  if (!ok) return std::nullopt;
  return paths;
}

namespace {

struct Quality {
  int pairs;
  long cost;
};

}  // namespace

Lns2Result lns2_plan(const Instance& instance, std::span<const DistanceMap> to_goal,
                     std::span<const Cell> positions, const Lns2Options& options, BudgetMeter& meter, Rng& rng) {
  const int k = instance.agent_count();
  const int horizon = instance.horizon;
  Lns2Result result;
  auto& stats = result.stats;
  PartialSolution& incumbent = result.solution;
  incumbent = PartialSolution::staying(positions);

  ConstraintTable table(instance.map, horizon);
  std::vector<bool> planned(k, false);
  const long before = meter.used();
  for (int a : random_order(k, rng)) {
    if (meter.exhausted()) break;
    SearchRequest request{positions[a], instance.agents[a].goal, horizon, meter.remaining(), 1,
                          options.truncate_at_horizon};
    auto outcome = plan_path(instance.map, to_goal[a], table, request, meter);
    if (!outcome.found()) continue;
    incumbent.paths[a] = std::move(outcome.path);
    table.add_soft(incumbent.paths[a]);
    planned[a] = true;
    ++stats.initial_planned;
  }
  stats.initial_expansions = meter.used() - before;

  // From here on the table holds every incumbent path as a soft constraint.
  for (int a = 0; a < k; ++a)
    if (!planned[a]) table.add_soft(incumbent.paths[a]);

  auto conflicts = find_conflicts(incumbent, horizon);
  Quality current{conflicting_pairs(conflicts), soc(incumbent)};
  stats.initial_conflict_pairs = current.pairs;

  int stalls = 0;
  while (!meter.exhausted() && !conflicts.empty() && stalls < 64) {
    std::vector<int> counts;
    if (options.full_path_conflicts) {
      counts = conflicts_per_agent(incumbent, std::max(makespan(incumbent), horizon));
    } else {
      counts = conflicts_per_agent(conflicts, k);
    }
    const Neighborhood nb = select_neighborhood(conflicts, k, options.nb_size, options.p_conflict, rng);
    const long allocation = neighborhood_budget(options.nb_policy, nb, counts, meter.remaining(), instance.window);
    ++stats.iterations;
    stats.allocations.push_back(allocation);
    if (allocation <= 0) break;

    for (int a : nb) table.remove_soft(incumbent.paths[a]);
    const long used_before = meter.used();
    auto candidate = replan_neighborhood(instance, to_goal, positions, nb, allocation, table, meter, options, rng);
    const long charged = meter.used() - used_before;
    stats.charged.push_back(charged);
    stalls = charged == 0 ? stalls + 1 : 0;

    bool accept = false;
    std::vector<TimedPath> previous;
    if (candidate) {
      previous.reserve(nb.size());
      for (std::size_t i = 0; i < nb.size(); ++i) {
        previous.push_back(std::move(incumbent.paths[nb[i]]));
        incumbent.paths[nb[i]] = std::move((*candidate)[i]);
      }
      auto trial = find_conflicts(incumbent, horizon);
      const Quality q{conflicting_pairs(trial), soc(incumbent)};
      accept = q.pairs < current.pairs || (q.pairs == current.pairs && q.cost < current.cost);
      if (accept) {
        conflicts = std::move(trial);
        current = q;
        ++stats.accepted;
      } else {
        for (std::size_t i = 0; i < nb.size(); ++i) incumbent.paths[nb[i]] = std::move(previous[i]);
      }
    }
    for (int a : nb) table.add_soft(incumbent.paths[a]);
    stats.conflict_pair_trace.push_back(current.pairs);
  }
  stats.final_conflict_pairs = current.pairs;
  return result;
}

}  // namespace rtmapf
