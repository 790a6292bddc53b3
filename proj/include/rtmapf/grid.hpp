#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace rtmapf {

// Row-major cell index: row * width + col.
using Cell = std::int32_t;
inline constexpr Cell kNoCell = -1;

// Move directions, in the order successors are generated.
enum Direction : int { kUp = 0, kRight = 1, kDown = 2, kLeft = 3 };

// 4-connected grid with blocked cells. G = (V, E) with V the unblocked cells
// and E the unit-cost 4-neighbor adjacency.
class GridMap {
 public:
  GridMap() = default;
  GridMap(int width, int height, std::vector<bool> blocked);

  static GridMap open(int width, int height);

  int width() const { return width_; }
  int height() const { return height_; }
  int size() const { return width_ * height_; }

  Cell cell(int row, int col) const { return row * width_ + col; }
  int row(Cell c) const { return c / width_; }
  int col(Cell c) const { return c % width_; }

  bool in_bounds(int row, int col) const {
    return row >= 0 && row < height_ && col >= 0 && col < width_;
  }
  bool valid(Cell c) const { return c >= 0 && c < size(); }
  bool blocked(Cell c) const { return blocked_[c] != 0; }
  bool passable(Cell c) const { return valid(c) && blocked_[c] == 0; }
  int blocked_count() const;

  // Passable neighbor in direction d, or kNoCell.
  Cell neighbor(Cell c, int d) const { return adjacency_[c][d]; }
  const std::array<Cell, 4>& neighbors(Cell c) const { return adjacency_[c]; }

  bool adjacent(Cell a, Cell b) const;
  // Direction of the single move a -> b; requires adjacent(a, b).
  int direction(Cell a, Cell b) const;

  std::string describe(Cell c) const;

  friend bool operator==(const GridMap& a, const GridMap& b) {
    return a.width_ == b.width_ && a.height_ == b.height_ && a.blocked_ == b.blocked_;
  }

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> blocked_;
  std::vector<std::array<Cell, 4>> adjacency_;
};

}  // namespace rtmapf
