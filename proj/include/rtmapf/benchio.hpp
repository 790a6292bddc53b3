#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rtmapf/domain.hpp"

namespace rtmapf {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// MovingAI map format. '.' and 'G' are passable; '@', 'O', 'T', 'W' are blocked.
GridMap parse_map(std::string_view text);
std::string serialize_map(const GridMap& map);

// One line of a MovingAI "version 1" scenario. Coordinates are x = column, y = row:
// the entry "0 map 32 32 5 2 7 9 11.0" starts at row 2, column 5.
struct ScenarioEntry {
  int bucket = 0;
  std::string map_name;
  int map_width = 0;
  int map_height = 0;
  int start_x = 0;
  int start_y = 0;
  int goal_x = 0;
  int goal_y = 0;
  double optimal_length = 0.0;
};

std::vector<ScenarioEntry> parse_scen_entries(std::string_view text);
std::string serialize_scen(const std::vector<ScenarioEntry>& entries);

// First n entries as agents 0..n-1, checked against the map: in bounds,
// unblocked, distinct starts and distinct goals.
std::vector<AgentTask> scenario_tasks(const std::vector<ScenarioEntry>& entries, const GridMap& map, int n);
std::vector<AgentTask> parse_scen(std::string_view text, const GridMap& map, int n);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

struct RunRecord {
  std::string grid_name;
  std::string algorithm;
  std::string policy;
  int agent_count = 0;
  int window = 0;
  int horizon = 0;
  long budget = 0;
  unsigned long long seed = 0;
  int scen_id = 0;
  int makespan = 0;
  bool solved = false;
  int periods = 0;
  long expansions_total = 0;
};

std::string results_header();
std::string format_record(const RunRecord& record);
// Header row plus one row per record, LF line endings.
std::string write_results(const std::vector<RunRecord>& records);
std::vector<RunRecord> read_results(std::string_view csv);

// Per (algorithm, policy): distinct solved makespans ascending with the
// cumulative number of solved runs at or below each.
std::string cactus_data(const std::vector<RunRecord>& records);

}  // namespace rtmapf
