#pragma once

#include <string>
#include <vector>

#include "rtmapf/benchio.hpp"
#include "rtmapf/domain.hpp"
#include "rtmapf/rng.hpp"

namespace fixtures {

// The 6x6 "difficult configuration": a wall in column 2 with its only gap at
// the bottom row, where agent 0's goal sits. Agents 1-3 must cross the gap to
// reach their goals; agents 4-6 reorder themselves on the right side.
//
//   row 0  . . @ . . t4
//   row 1  . . @ . . s6
//   row 2  s1 . @ t1 . s5
//   row 3  s2 . @ t2 . s4
//   row 4  s3 . @ t3 . t5
//   row 5  s0 . t0 . . t6
inline rtmapf::Instance difficult_configuration(int window, int horizon, long budget) {
  using rtmapf::Cell;
  std::vector<bool> blocked(36, false);
  for (int r = 0; r <= 4; ++r) blocked[r * 6 + 2] = true;
  rtmapf::Instance inst;
  inst.map = rtmapf::GridMap(6, 6, blocked);
  auto c = [&](int r, int q) { return inst.map.cell(r, q); };
  const std::vector<std::pair<Cell, Cell>> tasks = {
      {c(5, 0), c(5, 2)},                                           // agent 0
      {c(2, 0), c(2, 3)}, {c(3, 0), c(3, 3)}, {c(4, 0), c(4, 3)},   // agents 1-3
      {c(3, 5), c(0, 5)}, {c(2, 5), c(4, 5)}, {c(1, 5), c(5, 5)}};  // agents 4-6
  for (std::size_t i = 0; i < tasks.size(); ++i)
    inst.agents.push_back({static_cast<int>(i), tasks[i].first, tasks[i].second});
  inst.window = window;
  inst.horizon = horizon;
  inst.budget = budget;
  inst.makespan_cap = 100;
  return inst;
}

// Expansion counts of the difficult configuration under the priority order
// 0..6 with unlimited budget, and a budget derived from them: large enough that
// an even split covers agent 0 and agents 4-6, small enough that agent 1 alone
// cannot finish on what agent 0 leaves over.
struct DifficultCalibration {
  long agent0 = 0;
  long expensive = 0;  // min over agents 1-3
  long easy = 0;       // max over agents 4-6
  long budget = 0;
};
DifficultCalibration calibrate_difficult(int window, int horizon);

// Random map with the given obstacle ratio whose agents all start and end in
// the largest component, with distinct starts and distinct goals.
rtmapf::Instance random_instance(int width, int height, double obstacle_ratio, int agents, std::uint64_t seed);

}  // namespace fixtures
