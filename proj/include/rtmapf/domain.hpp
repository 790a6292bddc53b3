#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "rtmapf/grid.hpp"

namespace rtmapf {

struct AgentTask {
  int id = 0;
  Cell start = kNoCell;
  Cell goal = kNoCell;
};

// One RT-MAPF problem: graph, agents, per-period node-expansion budget,
// execution window, planning horizon and the episode's makespan cap.
struct Instance {
  GridMap map;
  std::vector<AgentTask> agents;
  long budget = 1;
  int window = 1;
  int horizon = 2;
  int makespan_cap = 100;

  int agent_count() const { return static_cast<int>(agents.size()); }
  std::vector<Cell> starts() const;
  std::vector<Cell> goals() const;

  // Throws std::invalid_argument on any violated invariant.
  void validate() const;
};

// cells[t] is the agent's cell at t steps after the period start. The agent
// waits at cells.back() forever after the last entry.
struct TimedPath {
  std::vector<Cell> cells;

  TimedPath() = default;
  explicit TimedPath(std::vector<Cell> c) : cells(std::move(c)) {}
  static TimedPath stay(Cell c) { return TimedPath({c}); }

  int cost() const { return static_cast<int>(cells.size()) - 1; }
  Cell front() const { return cells.front(); }
  Cell back() const { return cells.back(); }

  friend bool operator==(const TimedPath&, const TimedPath&) = default;
};

Cell position_at(const TimedPath& path, int t);

// Every step is a wait or a 4-adjacent move over passable cells.
bool is_valid_path(const GridMap& map, const TimedPath& path);

// Every agent always has an entry; an unplanned agent holds a length-1 path.
struct PartialSolution {
  std::vector<TimedPath> paths;

  static PartialSolution staying(std::span<const Cell> positions);
  int agent_count() const { return static_cast<int>(paths.size()); }

  friend bool operator==(const PartialSolution&, const PartialSolution&) = default;
};

struct Conflict {
  enum class Kind { Vertex, Swap };

  Kind kind = Kind::Vertex;
  int first = 0;   // lower agent id
  int second = 0;  // higher agent id
  int time = 0;
  // Vertex: from == the shared cell, to == kNoCell.
  // Swap: `first` moves from -> to while `second` moves to -> from, arriving at `time`.
  Cell from = kNoCell;
  Cell to = kNoCell;

  friend auto operator<=>(const Conflict&, const Conflict&) = default;
};

// All vertex and swap conflicts at timesteps 0..up_to, sorted by
// (time, first, second, kind, from, to).
std::vector<Conflict> find_conflicts(const PartialSolution& sol, int up_to);

// Number of Conflict records each agent appears in.
std::vector<int> conflicts_per_agent(const PartialSolution& sol, int up_to);
std::vector<int> conflicts_per_agent(std::span<const Conflict> conflicts, int agent_count);

// Number of distinct agent pairs with at least one conflict.
int conflicting_pairs(std::span<const Conflict> conflicts);

int makespan(const PartialSolution& sol);
long soc(const PartialSolution& sol);

}  // namespace rtmapf
