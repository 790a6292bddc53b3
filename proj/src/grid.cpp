#include "rtmapf/grid.hpp"

#include <algorithm>
#include <stdexcept>

namespace rtmapf {

GridMap::GridMap(int width, int height, std::vector<bool> blocked)
    : width_(width), height_(height) {
  if (width < 1 || height < 1) throw std::invalid_argument("grid dimensions must be >= 1");
  if (static_cast<int>(blocked.size()) != width * height)
    throw std::invalid_argument("blocked mask size does not match grid dimensions");
  blocked_.assign(blocked.begin(), blocked.end());
  adjacency_.resize(blocked_.size());
  static constexpr int kDr[4] = {-1, 0, 1, 0};
  static constexpr int kDc[4] = {0, 1, 0, -1};
  for (Cell c = 0; c < size(); ++c) {
    for (int d = 0; d < 4; ++d) {
      const int r = row(c) + kDr[d];
      const int q = col(c) + kDc[d];
      adjacency_[c][d] = (!blocked_[c] && in_bounds(r, q) && !blocked_[cell(r, q)]) ? cell(r, q) : kNoCell;
    }
  }
}

GridMap GridMap::open(int width, int height) {
  return GridMap(width, height, std::vector<bool>(static_cast<std::size_t>(width) * height, false));
}

int GridMap::blocked_count() const {
  return static_cast<int>(std::count(blocked_.begin(), blocked_.end(), std::uint8_t{1}));
}

bool GridMap::adjacent(Cell a, Cell b) const {
  if (!valid(a)) return false;
  const auto& nb = adjacency_[a];
  return std::find(nb.begin(), nb.end(), b) != nb.end() && b != kNoCell;
}

int GridMap::direction(Cell a, Cell b) const {
  if (b == a - width_) return kUp;
  if (b == a + 1) return kRight;
  if (b == a + width_) return kDown;
  return kLeft;
}

std::string GridMap::describe(Cell c) const {
  return "(" + std::to_string(row(c)) + "," + std::to_string(col(c)) + ")";
}

}  // namespace rtmapf
