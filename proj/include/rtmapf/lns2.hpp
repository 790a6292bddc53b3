#pragma once

#include <optional>
#include <span>
#include <vector>

#include "rtmapf/domain.hpp"
#include "rtmapf/prp.hpp"
#include "rtmapf/rng.hpp"
#include "rtmapf/search.hpp"

namespace rtmapf {

// How much of the remaining period budget one neighborhood may spend.
struct NeighborhoodBudgetPolicy {
  enum class Kind { Shared, Fixed, ConflictProportion };

  Kind kind = Kind::Shared;
  long fixed_budget = 0;  // B_F, used by Fixed

  static NeighborhoodBudgetPolicy shared() { return {Kind::Shared, 0}; }
  static NeighborhoodBudgetPolicy fixed(long b) { return {Kind::Fixed, b}; }
  static NeighborhoodBudgetPolicy conflict_proportion() { return {Kind::ConflictProportion, 0}; }

  friend bool operator==(const NeighborhoodBudgetPolicy&, const NeighborhoodBudgetPolicy&) = default;
};

using Neighborhood = std::vector<int>;

// (sum_{i=1}^{n} i + 1) * window, in closed form.
long neighborhood_lower_bound(int neighborhood_size, int window);

// remaining * sum_{i in N} conflicts(i) / sum_{j} conflicts(j), rounded down; 0 when nothing conflicts.
long conflict_share(std::span<const int> neighborhood, std::span<const int> conflicts, long remaining);

long neighborhood_budget(const NeighborhoodBudgetPolicy& policy, std::span<const int> neighborhood,
                         std::span<const int> conflicts, long remaining, int window);

// With probability p_conflict, seed at a random conflicting agent and grow by
// a random walk on the conflict graph, topping up with random agents;
// otherwise a uniform random subset. The result is sorted.
Neighborhood select_neighborhood(std::span<const Conflict> conflicts, int agent_count, int size,
                                 double p_conflict, Rng& rng);

struct Lns2Options {
  NeighborhoodBudgetPolicy nb_policy;
  int nb_size = 4;
  AgentBudgetPolicy intra = AgentBudgetPolicy::Shared;
  double p_conflict = 0.8;
  // Count conflicts(i) over full paths instead of within the horizon.
  bool full_path_conflicts = false;
  bool truncate_at_horizon = false;
};

struct Lns2Stats {
  int iterations = 0;
  int accepted = 0;
  long initial_expansions = 0;
  int initial_planned = 0;
  int initial_conflict_pairs = 0;
  int final_conflict_pairs = 0;
  std::vector<int> conflict_pair_trace;  // incumbent pair count after each iteration
  std::vector<long> allocations;
  std::vector<long> charged;             // expansions spent by each repair call
};

struct Lns2Result {
  PartialSolution solution;
  Lns2Stats stats;
};

// Replans the agents of `neighborhood` by prioritized planning in random order:
// hard constraints are the neighborhood paths found so far in this call, and
// `soft` must already hold the incumbent paths of every agent outside the
// neighborhood. Spends at most `allocation` expansions. Returns one path per
// neighborhood agent (in neighborhood order) or nullopt if any agent failed.
std::optional<std::vector<TimedPath>> replan_neighborhood(const Instance& instance,
                                                           std::span<const DistanceMap> to_goal,
                                                           std::span<const Cell> positions,
                                                           std::span<const int> neighborhood, long allocation,
                                                           ConstraintTable& soft, BudgetMeter& meter,
                                                           const Lns2Options& options, Rng& rng);

// Initial soft-constrained prioritized pass, then conflict repair until the
// budget runs out or the incumbent is conflict-free within the horizon.
Lns2Result lns2_plan(const Instance& instance, std::span<const DistanceMap> to_goal,
                     std::span<const Cell> positions, const Lns2Options& options, BudgetMeter& meter, Rng& rng);

}  // namespace rtmapf
