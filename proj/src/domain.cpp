#include "rtmapf/domain.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace rtmapf {

std::vector<Cell> Instance::starts() const {
  std::vector<Cell> out;
  out.reserve(agents.size());
  for (const auto& a : agents) out.push_back(a.start);
  return out;
}

std::vector<Cell> Instance::goals() const {
  std::vector<Cell> out;
  out.reserve(agents.size());
  for (const auto& a : agents) out.push_back(a.goal);
  return out;
}

void Instance::validate() const {
  if (budget < 1) throw std::invalid_argument("budget must be >= 1");
  if (window < 1) throw std::invalid_argument("window must be >= 1");
  if (horizon < window)
    throw std::invalid_argument("horizon (" + std::to_string(horizon) + ") must be >= window (" +
                                std::to_string(window) + ")");
  if (makespan_cap < 0) throw std::invalid_argument("makespan cap must be >= 0");
  std::unordered_set<Cell> starts_seen, goals_seen;
  for (std::size_t i = 0; i < agents.size(); ++i) {
    const auto& a = agents[i];
    if (a.id != static_cast<int>(i)) throw std::invalid_argument("agent ids must be 0..k-1 in order");
    if (!map.passable(a.start)) throw std::invalid_argument("agent " + std::to_string(i) + " starts on a blocked cell");
    if (!map.passable(a.goal)) throw std::invalid_argument("agent " + std::to_string(i) + " has a blocked goal");
    if (!starts_seen.insert(a.start).second)
      throw std::invalid_argument("agents share start cell " + map.describe(a.start));
    if (!goals_seen.insert(a.goal).second)
      throw std::invalid_argument("agents share goal cell " + map.describe(a.goal));
  }
}

Cell position_at(const TimedPath& path, int t) {
  const int n = static_cast<int>(path.cells.size());
  return t < n ? path.cells[t] : path.cells[n - 1];
}

bool is_valid_path(const GridMap& map, const TimedPath& path) {
  if (path.cells.empty()) return false;
  for (std::size_t t = 0; t < path.cells.size(); ++t) {
    if (!map.passable(path.cells[t])) return false;
    if (t > 0 && path.cells[t] != path.cells[t - 1] && !map.adjacent(path.cells[t - 1], path.cells[t]))
      return false;
  }
  return true;
}

PartialSolution PartialSolution::staying(std::span<const Cell> positions) {
  PartialSolution sol;
  sol.paths.reserve(positions.size());
  for (Cell c : positions) sol.paths.push_back(TimedPath::stay(c));
  return sol;
}

std::vector<Conflict> find_conflicts(const PartialSolution& sol, int up_to) {
  std::vector<Conflict> out;
  const int k = sol.agent_count();
  if (k == 0 || up_to < 0) return out;

  // Agents bucketed by cell per timestep; O(k log k) per step regardless of grid size.
  std::vector<std::pair<Cell, int>> now(k);
  auto bucket = [k](std::vector<std::pair<Cell, int>>& v, const PartialSolution& s, int t) {
    for (int i = 0; i < k; ++i) v[i] = {position_at(s.paths[i], t), i};
    std::sort(v.begin(), v.end());
  };
  auto agents_at = [](const std::vector<std::pair<Cell, int>>& v, Cell c) {
    auto lo = std::lower_bound(v.begin(), v.end(), std::pair<Cell, int>{c, -1});
    auto hi = lo;
    while (hi != v.end() && hi->first == c) ++hi;
    return std::pair{lo, hi};
  };

  for (int t = 0; t <= up_to; ++t) {
    bucket(now, sol, t);
    for (std::size_t a = 0; a < now.size();) {
      std::size_t b = a;
      while (b < now.size() && now[b].first == now[a].first) ++b;
      for (std::size_t x = a; x < b; ++x)
        for (std::size_t y = x + 1; y < b; ++y)
          out.push_back({Conflict::Kind::Vertex, std::min(now[x].second, now[y].second),
                         std::max(now[x].second, now[y].second), t, now[a].first, kNoCell});
      a = b;
    }
    if (t > 0) {
      // Agent i moved u -> v. A swap partner j was at v at t-1 and is at u at t.
      for (int i = 0; i < k; ++i) {
        const Cell u = position_at(sol.paths[i], t - 1);
        const Cell v = position_at(sol.paths[i], t);
        if (u == v) continue;
        auto [lo, hi] = agents_at(now, u);
        for (auto it = lo; it != hi; ++it) {
          const int j = it->second;
          if (j <= i) continue;
          if (position_at(sol.paths[j], t - 1) == v) out.push_back({Conflict::Kind::Swap, i, j, t, u, v});
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Conflict& a, const Conflict& b) {
    if (a.time != b.time) return a.time < b.time;
    if (a.first != b.first) return a.first < b.first;
    if (a.second != b.second) return a.second < b.second;
    return a < b;
  });
  return out;
}

std::vector<int> conflicts_per_agent(std::span<const Conflict> conflicts, int agent_count) {
  std::vector<int> counts(agent_count, 0);
  for (const auto& c : conflicts) {
    ++counts[c.first];
    ++counts[c.second];
  }
  return counts;
}

std::vector<int> conflicts_per_agent(const PartialSolution& sol, int up_to) {
  return conflicts_per_agent(find_conflicts(sol, up_to), sol.agent_count());
}

int conflicting_pairs(std::span<const Conflict> conflicts) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(conflicts.size());
  for (const auto& c : conflicts) pairs.emplace_back(c.first, c.second);
  std::sort(pairs.begin(), pairs.end());
  return static_cast<int>(std::unique(pairs.begin(), pairs.end()) - pairs.begin());
}

int makespan(const PartialSolution& sol) {
  int m = 0;
  for (const auto& p : sol.paths) m = std::max(m, p.cost());
  return m;
}

long soc(const PartialSolution& sol) {
  long s = 0;
  for (const auto& p : sol.paths) s += p.cost();
  return s;
}

}  // namespace rtmapf
