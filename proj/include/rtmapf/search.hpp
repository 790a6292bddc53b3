#pragma once

#include <climits>
#include <cstdint>
#include <vector>

#include "rtmapf/domain.hpp"

namespace rtmapf {

// Monotone counter of single-agent node expansions with a hard ceiling.
class BudgetMeter {
 public:
  explicit BudgetMeter(long ceiling) : ceiling_(ceiling < 0 ? 0 : ceiling) {}

  long ceiling() const { return ceiling_; }
  long used() const { return used_; }
  long remaining() const { return ceiling_ - used_; }
  bool exhausted() const { return used_ >= ceiling_; }

  // Charges one expansion. At the ceiling nothing is charged and false is returned.
  bool charge() {
    if (used_ >= ceiling_) return false;
    ++used_;
    return true;
  }

 private:
  long ceiling_;
  long used_ = 0;
};

// Shortest unconstrained distances to one goal (reverse BFS). Not metered.
class DistanceMap {
 public:
  static constexpr int kUnreachable = INT_MAX;

  DistanceMap() = default;
  DistanceMap(const GridMap& map, Cell goal);

  Cell goal() const { return goal_; }
  int operator[](Cell c) const { return dist_[c]; }
  bool reachable(Cell c) const { return dist_[c] != kUnreachable; }
  // Largest finite distance.
  int longest() const { return longest_; }
  // Neighbor one step closer to the goal, smallest cell index on ties.
  Cell next_toward_goal(const GridMap& map, Cell c) const;

 private:
  Cell goal_ = kNoCell;
  int longest_ = 0;
  std::vector<int> dist_;
};

DistanceMap build_distance_map(const GridMap& map, Cell goal);
std::vector<DistanceMap> build_distance_maps(const GridMap& map, std::span<const Cell> goals);

// Time-indexed occupancy over [0, horizon]. The hard layer forbids vertices and
// edges outright; the soft layer counts how many other paths use them. Paths
// are tail-padded up to the horizon. Nothing beyond the horizon is recorded.
class ConstraintTable {
 public:
  ConstraintTable(const GridMap& map, int horizon);

  int horizon() const { return horizon_; }

  void add_hard(const TimedPath& path) { update(hard_, path, +1); }
  void remove_hard(const TimedPath& path) { update(hard_, path, -1); }
  void add_soft(const TimedPath& path) { update(soft_, path, +1); }
  void remove_soft(const TimedPath& path) { update(soft_, path, -1); }

  // Explicit hard constraints: occupy `c` at `t`; traverse from -> to arriving at `t`.
  void block_vertex(Cell c, int t);
  void block_edge(Cell from, Cell to, int t);

  bool vertex_blocked(Cell c, int t) const;
  // True when the move from -> to arriving at t swaps with a hard path or is explicitly forbidden.
  bool edge_blocked(Cell from, Cell to, int t) const;
  // True when c is hard-occupied at any time in (t, horizon].
  bool blocked_after(Cell c, int t) const;

  // Soft collisions incurred by the move from -> to arriving at t (vertex + swap).
  int soft_collisions(Cell from, Cell to, int t) const;
  // Soft vertex collisions from waiting at c over (t, horizon].
  int soft_wait_tail(Cell c, int t) const;

 private:
  struct Layer {
    std::vector<std::uint16_t> vertex;  // [t][cell]
    std::vector<std::uint16_t> edge;    // [t][cell][dir] for a move leaving cell in dir, arriving at t
    bool empty() const { return vertex.empty(); }
  };

  void ensure(Layer& layer);
  void update(Layer& layer, const TimedPath& path, int delta);
  std::size_t vindex(Cell c, int t) const { return static_cast<std::size_t>(t) * cells_ + c; }
  std::size_t eindex(Cell c, int dir, int t) const { return vindex(c, t) * 4 + dir; }

  const GridMap* map_;
  int horizon_;
  int cells_;
  Layer hard_;
  Layer soft_;
};

enum class SearchStatus { Found, NoPath, BudgetExhausted };

struct SearchRequest {
  Cell start = kNoCell;
  Cell goal = kNoCell;
  int horizon = 0;
  long agent_budget = 0;
  int soft_weight = 1;
  // Stop at the horizon instead of completing the path to the goal.
  bool truncate_at_horizon = false;
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::NoPath;
  TimedPath path;
  int collisions = 0;  // weighted soft collisions within the horizon
  long expansions = 0;

  bool found() const { return status == SearchStatus::Found; }
};

// Longest time index any returned path can reach: horizon + longest distance + window.
int search_time_cap(int horizon, const DistanceMap& to_goal, int window);

// Space-time A* over (cell, time) minimizing (soft collisions, cost)
// lexicographically. Only the first `horizon` steps are constrained; from a
// state at the horizon the remainder is the exact shortest completion along
// `to_goal`, so search states never exceed the horizon. Each expansion charges
// one unit to `meter` and to the per-call count, which is capped at
// min(agent_budget, meter.remaining()).
SearchOutcome plan_path(const GridMap& map, const DistanceMap& to_goal, const ConstraintTable& constraints,
                        const SearchRequest& request, BudgetMeter& meter);

}  // namespace rtmapf
