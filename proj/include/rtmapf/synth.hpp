#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rtmapf/benchio.hpp"
#include "rtmapf/grid.hpp"

namespace rtmapf {

// Generated stand-ins for the 32x32 benchmark grids, built from the same
// recipes: open grid, uniform random obstacles, 3x3 rooms joined by doors, and
// perfect mazes with a given corridor width.
const std::vector<std::string>& benchmark_grid_names();
bool is_benchmark_grid(const std::string& name);
GridMap make_benchmark_map(const std::string& name, std::uint64_t seed = 1);

GridMap make_random_map(int width, int height, double obstacle_ratio, std::uint64_t seed);
GridMap make_room_map(int width, int height, int room, std::uint64_t seed);
GridMap make_maze_map(int width, int height, int corridor, std::uint64_t seed);

// Largest 4-connected component of passable cells, ascending.
std::vector<Cell> largest_component(const GridMap& map);

// Random start/goal pairs inside the largest component with distinct starts
// and distinct goals; optimal_length is the 4-connected distance.
std::vector<ScenarioEntry> make_random_scenario(const GridMap& map, const std::string& map_name, int count,
                                                std::uint64_t seed);

}  // namespace rtmapf
