#include "oracles.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <map>

namespace oracle {

using namespace rtmapf;

namespace {

Cell at(const TimedPath& p, int t) { return t < static_cast<int>(p.cells.size()) ? p.cells[t] : p.cells.back(); }

std::vector<Cell> lattice_neighbors(const GridMap& map, Cell c) {
  std::vector<Cell> out;
  const int r = c / map.width(), q = c % map.width();
  const int dr[4] = {-1, 1, 0, 0}, dc[4] = {0, 0, -1, 1};
  for (int d = 0; d < 4; ++d) {
    const int nr = r + dr[d], nc = q + dc[d];
    if (nr < 0 || nc < 0 || nr >= map.height() || nc >= map.width()) continue;
    const Cell n = nr * map.width() + nc;
    if (!map.blocked(n)) out.push_back(n);
  }
  return out;
}

}  // namespace

std::vector<Conflict> brute_force_conflicts(const PartialSolution& sol, int up_to) {
  std::vector<Conflict> out;
  const int k = static_cast<int>(sol.paths.size());
  for (int t = 0; t <= up_to; ++t)
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        const auto& a = sol.paths[i];
        const auto& b = sol.paths[j];
        if (at(a, t) == at(b, t)) out.push_back({Conflict::Kind::Vertex, i, j, t, at(a, t), kNoCell});
        if (t > 0 && at(a, t - 1) != at(a, t) && at(a, t - 1) == at(b, t) && at(a, t) == at(b, t - 1))
          out.push_back({Conflict::Kind::Swap, i, j, t, at(a, t - 1), at(a, t)});
      }
  std::sort(out.begin(), out.end(), [](const Conflict& x, const Conflict& y) {
    if (x.time != y.time) return x.time < y.time;
    if (x.first != y.first) return x.first < y.first;
    if (x.second != y.second) return x.second < y.second;
    return x < y;
  });
  return out;
}

std::vector<int> bfs_distances(const GridMap& map, Cell goal) {
  std::vector<int> d(map.width() * map.height(), -1);
  std::deque<Cell> q{goal};
  d[goal] = 0;
  while (!q.empty()) {
    const Cell c = q.front();
    q.pop_front();
    for (Cell n : lattice_neighbors(map, c))
      if (d[n] < 0) {
        d[n] = d[c] + 1;
        q.push_back(n);
      }
  }
  return d;
}

int earliest_safe_arrival(const GridMap& map, Cell start, Cell goal, const HardBlocks& blocks, int horizon,
                          int time_limit) {
  auto goal_safe_after = [&](int t) {
    for (int u = t + 1; u <= horizon; ++u)
      if (blocks.vertices.count({goal, u})) return false;
    return true;
  };
  std::set<Cell> frontier;
  if (!blocks.vertices.count({start, 0})) frontier.insert(start);
  for (int t = 0; t <= time_limit; ++t) {
    if (frontier.count(goal) && goal_safe_after(t)) return t;
    std::set<Cell> next;
    for (Cell c : frontier) {
      auto moves = lattice_neighbors(map, c);
      moves.push_back(c);
      for (Cell n : moves) {
        if (blocks.vertices.count({n, t + 1})) continue;
        if (blocks.edges.count({{c, n}, t + 1})) continue;
        next.insert(n);
      }
    }
    frontier = std::move(next);
  }
  return -1;
}

int soft_collisions(const TimedPath& path, const std::vector<TimedPath>& soft, int horizon) {
  int n = 0;
  for (const auto& o : soft)
    for (int t = 0; t <= horizon; ++t) {
      if (at(path, t) == at(o, t)) ++n;
      if (t > 0 && at(path, t - 1) != at(path, t) && at(path, t - 1) == at(o, t) && at(path, t) == at(o, t - 1)) ++n;
    }
  return n;
}

std::pair<int, int> soft_optimum(const GridMap& map, Cell start, Cell goal, const std::vector<TimedPath>& soft,
                                 int horizon) {
  const auto dist = bfs_distances(map, goal);
  std::pair<int, int> best{INT_MAX, INT_MAX};
  std::vector<Cell> prefix{start};
  auto recurse = [&](auto&& self) -> void {
    if (static_cast<int>(prefix.size()) == horizon + 1) {
      const Cell last = prefix.back();
      if (dist[last] < 0) return;
      int cost;
      if (last == goal) {
        int t = horizon;
        while (t > 0 && prefix[t - 1] == goal) --t;
        cost = t;
      } else {
        cost = horizon + dist[last];
      }
      const int col = soft_collisions(TimedPath(prefix), soft, horizon);
      best = std::min(best, std::pair{col, cost});
      return;
    }
    auto moves = lattice_neighbors(map, prefix.back());
    moves.push_back(prefix.back());
    for (Cell n : moves) {
      prefix.push_back(n);
      self(self);
      prefix.pop_back();
    }
  };
  recurse(recurse);
  return best;
}

bool joint_plan_exists(const GridMap& map, Cell s1, Cell g1, Cell s2, Cell g2) {
  std::set<std::pair<Cell, Cell>> seen{{s1, s2}};
  std::deque<std::pair<Cell, Cell>> q{{s1, s2}};
  while (!q.empty()) {
    auto [a, b] = q.front();
    q.pop_front();
    if (a == g1 && b == g2) return true;
    auto ma = lattice_neighbors(map, a);
    ma.push_back(a);
    auto mb = lattice_neighbors(map, b);
    mb.push_back(b);
    for (Cell na : ma)
      for (Cell nb : mb) {
        if (na == nb || (na == b && nb == a)) continue;
        if (seen.insert({na, nb}).second) q.push_back({na, nb});
      }
  }
  return false;
}

std::vector<std::vector<Cell>> conflict_free_joint_steps(const GridMap& map, const std::vector<Cell>& positions) {
  std::vector<std::vector<Cell>> out;
  std::vector<Cell> cur;
  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == positions.size()) {
      out.push_back(cur);
      return;
    }
    auto moves = lattice_neighbors(map, positions[i]);
    moves.push_back(positions[i]);
    for (Cell n : moves) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        if (cur[j] == n) ok = false;
        if (cur[j] == positions[i] && n == positions[j] && n != positions[i]) ok = false;
      }
      if (!ok) continue;
      cur.push_back(n);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  recurse(recurse, 0);
  return out;
}

}  // namespace oracle
