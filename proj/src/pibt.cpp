#include "rtmapf/pibt.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rtmapf {

PibtState PibtState::initial(std::span<const Cell> positions, std::span<const Cell> goals) {
  PibtState s;
  s.positions.assign(positions.begin(), positions.end());
  s.elapsed.assign(positions.size(), 0);
  for (std::size_t i = 0; i < positions.size(); ++i) s.elapsed[i] = positions[i] == goals[i] ? 0 : 1;
  return s;
}

void PibtState::advance(std::span<const Cell> next, std::span<const Cell> goals) {
  positions.assign(next.begin(), next.end());
  for (std::size_t i = 0; i < positions.size(); ++i)
    elapsed[i] = positions[i] == goals[i] ? 0 : elapsed[i] + 1;
}

std::vector<int> pibt_priority_order(const PibtState& state) {
  std::vector<int> order(state.positions.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (state.elapsed[a] != state.elapsed[b]) return state.elapsed[a] > state.elapsed[b];
    return a < b;
  });
  return order;
}

namespace {

constexpr int kNoAgent = -1;

class StepPlanner {
 public:
  StepPlanner(const GridMap& map, const PibtState& state, std::span<const DistanceMap> to_goal)
      : map_(map), state_(state), to_goal_(to_goal),
        occupied_now_(map.size(), kNoAgent), occupied_next_(map.size(), kNoAgent),
        next_(state.positions.size(), kNoCell) {
    for (std::size_t a = 0; a < state.positions.size(); ++a) {
      if (occupied_now_[state.positions[a]] != kNoAgent)
        throw std::invalid_argument("pibt_step requires pairwise distinct positions");
      occupied_now_[state.positions[a]] = static_cast<int>(a);
    }
  }

  std::vector<Cell> run() {
    for (int a : pibt_priority_order(state_))
      if (next_[a] == kNoCell) plan(a, kNoAgent);
    return next_;
  }

 private:
  // Returns true when agent a secured a cell other than the one its parent needs.
  bool plan(int a, int parent) {
    const Cell here = state_.positions[a];
    const DistanceMap& dist = to_goal_[a];
    std::array<Cell, 5> candidates;
    int n = 0;
    for (Cell c : map_.neighbors(here))
      if (c != kNoCell) candidates[n++] = c;
    candidates[n++] = here;
    std::sort(candidates.begin(), candidates.begin() + n, [&](Cell x, Cell y) {
      if (dist[x] != dist[y]) return dist[x] < dist[y];
      return x < y;
    });

    for (int i = 0; i < n; ++i) {
      const Cell c = candidates[i];
      if (occupied_next_[c] != kNoAgent) continue;
      if (parent != kNoAgent && c == state_.positions[parent]) continue;
      occupied_next_[c] = a;
      next_[a] = c;
      const int other = occupied_now_[c];
      if (other != kNoAgent && other != a && next_[other] == kNoCell && !plan(other, a)) continue;
      return true;
    }
    occupied_next_[here] = a;
    next_[a] = here;
    return false;
  }

  const GridMap& map_;
  const PibtState& state_;
  std::span<const DistanceMap> to_goal_;
  std::vector<int> occupied_now_;
  std::vector<int> occupied_next_;
  std::vector<Cell> next_;
};

}  // namespace

std::vector<Cell> pibt_step(const GridMap& map, const PibtState& state, std::span<const DistanceMap> to_goal) {
  return StepPlanner(map, state, to_goal).run();
}

PartialSolution pibt_prefix(const GridMap& map, PibtState state, std::span<const DistanceMap> to_goal, int window) {
  PartialSolution sol = PartialSolution::staying(state.positions);
  std::vector<Cell> goals;
  goals.reserve(to_goal.size());
  for (const auto& d : to_goal) goals.push_back(d.goal());
  for (int t = 0; t < window; ++t) {
    auto next = pibt_step(map, state, to_goal);
    for (std::size_t a = 0; a < next.size(); ++a) sol.paths[a].cells.push_back(next[a]);
    state.advance(next, goals);
  }
  return sol;
}

PrefixScore score_prefix(const SolutionPrefix& prefix, std::span<const DistanceMap> to_goal) {
  PrefixScore s;
  for (std::size_t a = 0; a < prefix.steps.paths.size(); ++a) {
    const auto& cells = prefix.steps.paths[a].cells;
    const int d0 = to_goal[a][cells.front()];
    const int d1 = to_goal[a][cells.back()];
    if (d1 < d0) ++s.progressing;
    s.remaining_distance += d1 == DistanceMap::kUnreachable ? 0 : d1;
  }
  return s;
}

bool better(const PrefixScore& a, const PrefixScore& b) {
  if (a.progressing != b.progressing) return a.progressing > b.progressing;
  return a.remaining_distance < b.remaining_distance;
}

HybridResult hybrid_plan(const Instance& instance, std::span<const DistanceMap> to_goal,
                         std::span<const Cell> positions, const PibtState& pibt_state, const Lns2Options& options,
                         FailPolicy fail_policy, BudgetMeter& meter, Rng& rng) {
  HybridResult out;
  auto lns = lns2_plan(instance, to_goal, positions, options, meter, rng);
  auto pibt = pibt_prefix(instance.map, pibt_state, to_goal, instance.window);
  out.lns2_score = score_prefix(resolve(lns.solution, fail_policy, instance.window), to_goal);
  out.pibt_score = score_prefix(resolve(pibt, fail_policy, instance.window), to_goal);
  out.lns2_stats = std::move(lns.stats);
  out.chose_pibt = better(out.pibt_score, out.lns2_score);
  out.solution = out.chose_pibt ? std::move(pibt) : std::move(lns.solution);
  return out;
}

}  // namespace rtmapf
