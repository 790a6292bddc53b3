#include "fixtures.hpp"

#include <algorithm>
#include <numeric>

#include "rtmapf/prp.hpp"
#include "rtmapf/synth.hpp"

namespace fixtures {

DifficultCalibration calibrate_difficult(int window, int horizon) {
  const auto inst = difficult_configuration(window, horizon, 1'000'000);
  const auto dmaps = rtmapf::build_distance_maps(inst.map, inst.goals());
  const auto starts = inst.starts();
  std::vector<int> order(7);
  std::iota(order.begin(), order.end(), 0);
  rtmapf::BudgetMeter meter(inst.budget);
  const auto r = rtmapf::prp_plan(inst, dmaps, starts, order, {}, meter);
  DifficultCalibration cal;
  cal.agent0 = r.agents[0].charged;
  cal.expensive = std::min({r.agents[1].charged, r.agents[2].charged, r.agents[3].charged});
  cal.easy = std::max({r.agents[4].charged, r.agents[5].charged, r.agents[6].charged});
  // 7 * max need plus slack for the floor divisions.
  cal.budget = 7 * std::max(cal.agent0, cal.easy) + 7;
  return cal;
}

rtmapf::Instance random_instance(int width, int height, double obstacle_ratio, int agents, std::uint64_t seed) {
  rtmapf::Instance inst;
  inst.map = rtmapf::make_random_map(width, height, obstacle_ratio, seed);
  const auto entries = rtmapf::make_random_scenario(inst.map, "random", agents, seed + 7919);
  inst.agents = rtmapf::scenario_tasks(entries, inst.map, agents);
  return inst;
}

}  // namespace fixtures
