#include "rtmapf/fail_policy.hpp"

#include <algorithm>

namespace rtmapf {

int SolutionPrefix::stayed_count() const {
  return static_cast<int>(std::count(stayed.begin(), stayed.end(), true));
}

namespace {

TimedPath window_prefix(const TimedPath& path, int window) {
  std::vector<Cell> cells(window + 1);
  for (int t = 0; t <= window; ++t) cells[t] = position_at(path, t);
  return TimedPath(std::move(cells));
}

TimedPath wait_in_place(Cell c, int window) { return TimedPath(std::vector<Cell>(window + 1, c)); }

}  // namespace

SolutionPrefix resolve(const PartialSolution& partial, FailPolicy policy, int window) {
  const int k = partial.agent_count();
  SolutionPrefix out;
  out.steps.paths.reserve(k);
  out.stayed.assign(k, false);
  for (const auto& p : partial.paths) out.steps.paths.push_back(window_prefix(p, window));
  const auto initial = find_conflicts(out.steps, window);
  out.conflicts_before = static_cast<int>(initial.size());

  if (policy == FailPolicy::AllStay) {
    for (int a = 0; a < k; ++a) {
      out.steps.paths[a] = wait_in_place(partial.paths[a].front(), window);
      out.stayed[a] = true;
    }
    return out;
  }

  for (int a = 0; a < k; ++a)
    if (partial.paths[a].cells.size() == 1) out.stayed[a] = true;
  for (const auto& c : initial) {
    out.stayed[c.first] = true;
    out.stayed[c.second] = true;
  }

  // Stationary occupancy of staying agents; a mover touching one joins them.
  std::vector<std::pair<Cell, int>> parked;
  for (int a = 0; a < k; ++a)
    if (out.stayed[a]) parked.emplace_back(partial.paths[a].front(), a);
  std::sort(parked.begin(), parked.end());
  auto is_parked = [&parked](Cell c) {
    auto it = std::lower_bound(parked.begin(), parked.end(), std::pair<Cell, int>{c, -1});
    return it != parked.end() && it->first == c;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < k; ++a) {
      if (out.stayed[a]) continue;
      const auto& cells = out.steps.paths[a].cells;
      if (std::any_of(cells.begin() + 1, cells.end(), is_parked)) {
        out.stayed[a] = true;
        const std::pair<Cell, int> entry{cells.front(), a};
        parked.insert(std::lower_bound(parked.begin(), parked.end(), entry), entry);
        changed = true;
      }
    }
  }
  for (int a = 0; a < k; ++a)
    if (out.stayed[a]) out.steps.paths[a] = wait_in_place(partial.paths[a].front(), window);
  return out;
}

}  // namespace rtmapf
