#include "rtmapf/synth.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "rtmapf/rng.hpp"
#include "rtmapf/search.hpp"

namespace rtmapf {

const std::vector<std::string>& benchmark_grid_names() {
  static const std::vector<std::string> names = {"room-32-32-4", "random-32-32-10", "random-32-32-20",
                                                 "maze-32-32-2", "maze-32-32-4",    "empty-32-32"};
  return names;
}

bool is_benchmark_grid(const std::string& name) {
  const auto& n = benchmark_grid_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

GridMap make_benchmark_map(const std::string& name, std::uint64_t seed) {
  if (name == "empty-32-32") return GridMap::open(32, 32);
  if (name == "random-32-32-10") return make_random_map(32, 32, 0.10, seed);
  if (name == "random-32-32-20") return make_random_map(32, 32, 0.20, seed);
  if (name == "room-32-32-4") return make_room_map(32, 32, 3, seed);
  if (name == "maze-32-32-2") return make_maze_map(32, 32, 2, seed);
  if (name == "maze-32-32-4") return make_maze_map(32, 32, 4, seed);
  throw std::invalid_argument("unknown benchmark grid '" + name + "'");
}

GridMap make_random_map(int width, int height, double obstacle_ratio, std::uint64_t seed) {
  Rng rng(seed);
  const int cells = width * height;
  const int obstacles = static_cast<int>(obstacle_ratio * cells + 0.5);
  std::vector<int> order(cells);
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(std::span<int>(order));
  std::vector<bool> blocked(cells, false);
  for (int i = 0; i < obstacles; ++i) blocked[order[i]] = true;
  return GridMap(width, height, std::move(blocked));
}

GridMap make_room_map(int width, int height, int room, std::uint64_t seed) {
  Rng rng(seed);
  const int pitch = room + 1;
  std::vector<bool> blocked(static_cast<std::size_t>(width) * height, false);
  auto at = [&](int r, int c) { return blocked[static_cast<std::size_t>(r) * width + c]; };
  for (int r = 0; r < height; ++r)
    for (int c = 0; c < width; ++c)
      if (r % pitch == room || c % pitch == room) at(r, c) = true;
  // One door in every wall segment separating two rooms.
  const int rooms_down = (height + 1) / pitch;
  const int rooms_across = (width + 1) / pitch;
  for (int i = 0; i < rooms_down; ++i) {
    for (int j = 0; j < rooms_across; ++j) {
      const int r0 = i * pitch;
      const int c0 = j * pitch;
      if (j + 1 < rooms_across && c0 + room < width)
        at(r0 + static_cast<int>(rng.below(room)), c0 + room) = false;
      if (i + 1 < rooms_down && r0 + room < height)
        at(r0 + room, c0 + static_cast<int>(rng.below(room))) = false;
    }
  }
  return GridMap(width, height, std::move(blocked));
}

GridMap make_maze_map(int width, int height, int corridor, std::uint64_t seed) {
  Rng rng(seed);
  const int pitch = corridor + 1;
  const int rows = (height + 1) / pitch;
  const int cols = (width + 1) / pitch;
  std::vector<bool> blocked(static_cast<std::size_t>(width) * height, true);
  auto open_block = [&](int r0, int c0, int h, int w) {
    for (int r = r0; r < r0 + h && r < height; ++r)
      for (int c = c0; c < c0 + w && c < width; ++c) blocked[static_cast<std::size_t>(r) * width + c] = false;
  };
  std::vector<bool> visited(static_cast<std::size_t>(rows) * cols, false);
  std::vector<int> stack{0};
  visited[0] = true;
  open_block(0, 0, corridor, corridor);
  static constexpr int kDr[4] = {-1, 0, 1, 0};
  static constexpr int kDc[4] = {0, 1, 0, -1};
  while (!stack.empty()) {
    const int cur = stack.back();
    const int r = cur / cols, c = cur % cols;
    int options[4];
    int n = 0;
    for (int d = 0; d < 4; ++d) {
      const int nr = r + kDr[d], nc = c + kDc[d];
      if (nr >= 0 && nr < rows && nc >= 0 && nc < cols && !visited[nr * cols + nc]) options[n++] = d;
    }
    if (n == 0) {
      stack.pop_back();
      continue;
    }
    const int d = options[rng.below(n)];
    const int nr = r + kDr[d], nc = c + kDc[d];
    visited[nr * cols + nc] = true;
    open_block(nr * pitch, nc * pitch, corridor, corridor);
    // Knock out the wall between the two maze cells.
    open_block(std::min(r, nr) * pitch + (kDr[d] != 0 ? corridor : 0),
               std::min(c, nc) * pitch + (kDc[d] != 0 ? corridor : 0), kDr[d] != 0 ? 1 : corridor,
               kDc[d] != 0 ? 1 : corridor);
    stack.push_back(nr * cols + nc);
  }
  return GridMap(width, height, std::move(blocked));
}

std::vector<Cell> largest_component(const GridMap& map) {
  std::vector<int> label(map.size(), -1);
  std::vector<Cell> best;
  int next = 0;
  for (Cell s = 0; s < map.size(); ++s) {
    if (map.blocked(s) || label[s] >= 0) continue;
    std::vector<Cell> comp{s};
    label[s] = next;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (Cell n : map.neighbors(comp[i]))
        if (n != kNoCell && label[n] < 0) {
          label[n] = next;
          comp.push_back(n);
        }
    if (comp.size() > best.size()) best = std::move(comp);
    ++next;
  }
  std::sort(best.begin(), best.end());
  return best;
}

std::vector<ScenarioEntry> make_random_scenario(const GridMap& map, const std::string& map_name, int count,
                                                std::uint64_t seed) {
  auto cells = largest_component(map);
  if (count > static_cast<int>(cells.size()))
    throw std::invalid_argument("scenario larger than the map's largest component");
  Rng rng(seed);
  auto starts = cells;
  auto goals = cells;
  rng.shuffle(std::span<Cell>(starts));
  rng.shuffle(std::span<Cell>(goals));
  std::vector<ScenarioEntry> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    const DistanceMap d(map, goals[i]);
    ScenarioEntry e;
    e.bucket = d[starts[i]] / 4;
    e.map_name = map_name + ".map";
    e.map_width = map.width();
    e.map_height = map.height();
    e.start_x = map.col(starts[i]);
    e.start_y = map.row(starts[i]);
    e.goal_x = map.col(goals[i]);
    e.goal_y = map.row(goals[i]);
    e.optimal_length = d[starts[i]];
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace rtmapf
