#include "rtmapf/search.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace rtmapf {

DistanceMap::DistanceMap(const GridMap& map, Cell goal) : goal_(goal), dist_(map.size(), kUnreachable) {
  if (!map.passable(goal)) throw std::invalid_argument("distance map goal must be an unblocked cell");
  std::deque<Cell> queue{goal};
  dist_[goal] = 0;
  while (!queue.empty()) {
    const Cell c = queue.front();
    queue.pop_front();
    longest_ = std::max(longest_, dist_[c]);
    for (Cell n : map.neighbors(c)) {
      if (n == kNoCell || dist_[n] != kUnreachable) continue;
      dist_[n] = dist_[c] + 1;
      queue.push_back(n);
    }
  }
}

Cell DistanceMap::next_toward_goal(const GridMap& map, Cell c) const {
  Cell best = kNoCell;
  for (Cell n : map.neighbors(c)) {
    if (n == kNoCell || dist_[n] == kUnreachable || dist_[n] + 1 != dist_[c]) continue;
    if (best == kNoCell || n < best) best = n;
  }
  return best;
}

DistanceMap build_distance_map(const GridMap& map, Cell goal) { return DistanceMap(map, goal); }

std::vector<DistanceMap> build_distance_maps(const GridMap& map, std::span<const Cell> goals) {
  std::vector<DistanceMap> out;
  out.reserve(goals.size());
  for (Cell g : goals) out.emplace_back(map, g);
  return out;
}

ConstraintTable::ConstraintTable(const GridMap& map, int horizon)
    : map_(&map), horizon_(std::max(horizon, 0)), cells_(map.size()) {}

void ConstraintTable::ensure(Layer& layer) {
  if (!layer.empty()) return;
  layer.vertex.assign(static_cast<std::size_t>(horizon_ + 1) * cells_, 0);
  layer.edge.assign(static_cast<std::size_t>(horizon_ + 1) * cells_ * 4, 0);
}

void ConstraintTable::update(Layer& layer, const TimedPath& path, int delta) {
  ensure(layer);
  for (int t = 0; t <= horizon_; ++t) {
    const Cell v = position_at(path, t);
    layer.vertex[vindex(v, t)] = static_cast<std::uint16_t>(layer.vertex[vindex(v, t)] + delta);
    if (t == 0) continue;
    const Cell u = position_at(path, t - 1);
    if (u == v) continue;
    auto& e = layer.edge[eindex(u, map_->direction(u, v), t)];
    e = static_cast<std::uint16_t>(e + delta);
  }
}

void ConstraintTable::block_vertex(Cell c, int t) {
  if (t < 0 || t > horizon_) return;
  ensure(hard_);
  ++hard_.vertex[vindex(c, t)];
}

void ConstraintTable::block_edge(Cell from, Cell to, int t) {
  if (t < 1 || t > horizon_) return;
  ensure(hard_);
  // Stored as the reverse traversal, which is what edge_blocked looks up.
  ++hard_.edge[eindex(to, map_->direction(to, from), t)];
}

bool ConstraintTable::vertex_blocked(Cell c, int t) const {
  if (hard_.empty() || t < 0 || t > horizon_) return false;
  return hard_.vertex[vindex(c, t)] != 0;
}

bool ConstraintTable::edge_blocked(Cell from, Cell to, int t) const {
  if (hard_.empty() || from == to || t < 1 || t > horizon_) return false;
  return hard_.edge[eindex(to, map_->direction(to, from), t)] != 0;
}

bool ConstraintTable::blocked_after(Cell c, int t) const {
  if (hard_.empty()) return false;
  for (int u = std::max(t + 1, 0); u <= horizon_; ++u)
    if (hard_.vertex[vindex(c, u)] != 0) return true;
  return false;
}

int ConstraintTable::soft_collisions(Cell from, Cell to, int t) const {
  if (soft_.empty() || t < 0 || t > horizon_) return 0;
  int n = soft_.vertex[vindex(to, t)];
  if (from != to && t >= 1) n += soft_.edge[eindex(to, map_->direction(to, from), t)];
  return n;
}

int ConstraintTable::soft_wait_tail(Cell c, int t) const {
  if (soft_.empty()) return 0;
  int n = 0;
  for (int u = std::max(t + 1, 0); u <= horizon_; ++u) n += soft_.vertex[vindex(c, u)];
  return n;
}

int search_time_cap(int horizon, const DistanceMap& to_goal, int window) {
  return horizon + to_goal.longest() + window;
}

namespace {

struct Node {
  Cell cell;
  int time;
  int collisions;
  int g;
  int f;
  int parent;
  // 0: regular state, 1: ends at the goal, 2: completes along the distance map.
  int terminal;
};

struct NodeOrder {
  const std::vector<Node>* nodes;
  // priority_queue pops the "largest"; return true when a ranks after b.
  bool operator()(int a, int b) const {
    const Node& x = (*nodes)[a];
    const Node& y = (*nodes)[b];
    if (x.collisions != y.collisions) return x.collisions > y.collisions;
    if (x.f != y.f) return x.f > y.f;
    if (x.g != y.g) return x.g < y.g;
    if (x.cell != y.cell) return x.cell > y.cell;
    return a > b;
  }
};

TimedPath reconstruct(const GridMap& map, const DistanceMap& to_goal, const std::vector<Node>& nodes,
                      const Node& terminal) {
  std::vector<Cell> cells = {terminal.cell};
  for (int i = terminal.parent; i >= 0; i = nodes[i].parent) cells.push_back(nodes[i].cell);
  std::reverse(cells.begin(), cells.end());
  if (terminal.terminal == 2) {
    Cell c = cells.back();
    while (to_goal[c] > 0) {
      c = to_goal.next_toward_goal(map, c);
      cells.push_back(c);
    }
  }
  return TimedPath(std::move(cells));
}

}  // namespace

SearchOutcome plan_path(const GridMap& map, const DistanceMap& to_goal, const ConstraintTable& constraints,
                        const SearchRequest& request, BudgetMeter& meter) {
  SearchOutcome out;
  const long limit = std::min(request.agent_budget, meter.remaining());
  const int horizon = std::min(request.horizon, constraints.horizon());
  const int weight = request.soft_weight;
  if (!map.passable(request.start) || !to_goal.reachable(request.start)) {
    out.status = SearchStatus::NoPath;
    return out;
  }

  std::vector<Node> nodes;
  nodes.reserve(256);
  std::priority_queue<int, std::vector<int>, NodeOrder> open(NodeOrder{&nodes});
  std::unordered_map<std::int64_t, int> best;
  best.reserve(256);
  auto key = [&](Cell c, int t) { return static_cast<std::int64_t>(t) * map.size() + c; };
  auto push = [&](const Node& n) {
    nodes.push_back(n);
    open.push(static_cast<int>(nodes.size()) - 1);
  };

  // Terminals are pushed when their state is generated: a state at the horizon
  // has the completion as its only successor, and a safe goal state can end
  // the path right there. Neither costs an expansion of its own.
  auto emit = [&](Cell v, int t, int col, int parent) {
    if (t >= horizon) {
      // Truncated paths stop here but are still ranked by their full estimate.
      if (request.truncate_at_horizon)
        push({v, t, col, t, t + to_goal[v], parent, 1});
      else
        push({v, t, col, t + to_goal[v], t + to_goal[v], parent, 2});
      return;
    }
    if (v == request.goal && !constraints.blocked_after(v, t))
      push({v, t, col + weight * constraints.soft_wait_tail(v, t), t, t, parent, 1});
    push({v, t, col, t, t + to_goal[v], parent, 0});
  };

  const int c0 = weight * constraints.soft_collisions(request.start, request.start, 0);
  best[key(request.start, 0)] = c0;
  emit(request.start, 0, c0, -1);

  while (!open.empty()) {
    const int idx = open.top();
    open.pop();
    const Node n = nodes[idx];
    if (n.terminal != 0) {
      out.status = SearchStatus::Found;
      out.path = reconstruct(map, to_goal, nodes, n);
      out.collisions = n.collisions;
      return out;
    }
    if (auto it = best.find(key(n.cell, n.time)); it != best.end() && it->second < n.collisions) continue;

    if (out.expansions >= limit || !meter.charge()) {
      out.status = SearchStatus::BudgetExhausted;
      return out;
    }
    ++out.expansions;

    const int t1 = n.time + 1;
    const auto& nb = map.neighbors(n.cell);
    for (int d = 0; d <= 4; ++d) {
      const Cell v = d < 4 ? nb[d] : n.cell;
      if (v == kNoCell || !to_goal.reachable(v)) continue;
      if (constraints.vertex_blocked(v, t1) || constraints.edge_blocked(n.cell, v, t1)) continue;
      const int col = n.collisions + weight * constraints.soft_collisions(n.cell, v, t1);
      auto [it, inserted] = best.try_emplace(key(v, t1), col);
      if (!inserted) {
        if (it->second <= col) continue;
        it->second = col;
      }
      emit(v, t1, col, idx);
    }
  }
  out.status = SearchStatus::NoPath;
  return out;
}

}  // namespace rtmapf
