#pragma once

#include <span>
#include <vector>

#include "rtmapf/domain.hpp"
#include "rtmapf/fail_policy.hpp"
#include "rtmapf/lns2.hpp"
#include "rtmapf/search.hpp"

namespace rtmapf {

// Dynamic PIBT priorities. An agent's priority is (elapsed, -id): elapsed
// counts steps since it was last at its goal, lower id wins ties.
struct PibtState {
  std::vector<Cell> positions;
  std::vector<int> elapsed;

  static PibtState initial(std::span<const Cell> positions, std::span<const Cell> goals);
  // Moves to `next` and updates the elapsed counters.
  void advance(std::span<const Cell> next, std::span<const Cell> goals);
};

// Agent ids from highest to lowest priority.
std::vector<int> pibt_priority_order(const PibtState& state);

// One synchronized step with priority inheritance and backtracking. Charges no budget.
std::vector<Cell> pibt_step(const GridMap& map, const PibtState& state, std::span<const DistanceMap> to_goal);

// `window` PIBT steps from the current state; every path has window+1 cells.
PartialSolution pibt_prefix(const GridMap& map, PibtState state, std::span<const DistanceMap> to_goal, int window);

// Ranking of a resolved window commitment; larger is better.
struct PrefixScore {
  int progressing = 0;       // agents that end the window strictly closer to their goal
  long remaining_distance = 0;

  friend bool operator==(const PrefixScore&, const PrefixScore&) = default;
};

PrefixScore score_prefix(const SolutionPrefix& prefix, std::span<const DistanceMap> to_goal);
// True when a ranks strictly better than b.
bool better(const PrefixScore& a, const PrefixScore& b);

struct HybridResult {
  PartialSolution solution;
  bool chose_pibt = false;
  PrefixScore lns2_score;
  PrefixScore pibt_score;
  Lns2Stats lns2_stats;
};

// Runs LNS2 (metered) and PIBT (free) and keeps the partial solution whose
// fail-policy-resolved window scores better. LNS2 wins ties.
HybridResult hybrid_plan(const Instance& instance, std::span<const DistanceMap> to_goal,
                         std::span<const Cell> positions, const PibtState& pibt_state, const Lns2Options& options,
                         FailPolicy fail_policy, BudgetMeter& meter, Rng& rng);

}  // namespace rtmapf
