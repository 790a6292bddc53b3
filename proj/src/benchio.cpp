#include "rtmapf/benchio.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_set>

namespace rtmapf {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = end + 1;
  }
  return lines;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t end = line.find(sep, pos);
    out.push_back(line.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

std::vector<std::string_view> split_whitespace(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    if (end > pos) out.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view s, int line, const char* what) {
  T value{};
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || s.empty())
    throw ParseError(line, std::string("invalid ") + what + " '" + std::string(s) + "'");
  return value;
}

double parse_double(std::string_view s, int line, const char* what) {
  std::string tmp(s);
  char* end = nullptr;
  const double v = std::strtod(tmp.c_str(), &end);
  if (tmp.empty() || end != tmp.c_str() + tmp.size())
    throw ParseError(line, std::string("invalid ") + what + " '" + tmp + "'");
  return v;
}

int header_value(std::string_view line, std::string_view key, int lineno) {
  const auto parts = split_whitespace(line);
  if (parts.size() != 2 || parts[0] != key)
    throw ParseError(lineno, "expected '" + std::string(key) + " <n>', got '" + std::string(line) + "'");
  return parse_number<int>(parts[1], lineno, "dimension");
}

}  // namespace

GridMap parse_map(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.size() < 4) throw ParseError(static_cast<int>(lines.size()) + 1, "truncated map header");
  const auto type = split_whitespace(lines[0]);
  if (type.size() != 2 || type[0] != "type") throw ParseError(1, "expected 'type <name>'");
  const int height = header_value(lines[1], "height", 2);
  const int width = header_value(lines[2], "width", 3);
  if (height < 1 || width < 1) throw ParseError(2, "map dimensions must be positive");
  if (split_whitespace(lines[3]) != std::vector<std::string_view>{"map"}) throw ParseError(4, "expected 'map'");

  std::size_t rows_end = lines.size();
  while (rows_end > 4 && lines[rows_end - 1].empty()) --rows_end;
  const int rows = static_cast<int>(rows_end - 4);
  if (rows != height)
    throw ParseError(static_cast<int>(rows_end) + 1, "expected " + std::to_string(height) + " rows, found " +
                                                         std::to_string(rows));
  std::vector<bool> blocked(static_cast<std::size_t>(width) * height);
  for (int r = 0; r < height; ++r) {
    const auto row = lines[4 + r];
    const int lineno = 5 + r;
    if (static_cast<int>(row.size()) != width)
      throw ParseError(lineno, "expected " + std::to_string(width) + " cells, found " + std::to_string(row.size()));
    for (int c = 0; c < width; ++c) {
      switch (row[c]) {
        case '.':
        case 'G':
          break;
        case '@':
        case 'O':
        case 'T':
        case 'W':
          blocked[static_cast<std::size_t>(r) * width + c] = true;
          break;
        default:
          throw ParseError(lineno, std::string("unknown cell character '") + row[c] + "'");
      }
    }
  }
  return GridMap(width, height, std::move(blocked));
}

std::string serialize_map(const GridMap& map) {
  std::string out = "type octile\nheight " + std::to_string(map.height()) + "\nwidth " +
                    std::to_string(map.width()) + "\nmap\n";
  for (int r = 0; r < map.height(); ++r) {
    for (int c = 0; c < map.width(); ++c) out += map.blocked(map.cell(r, c)) ? '@' : '.';
    out += '\n';
  }
  return out;
}

std::vector<ScenarioEntry> parse_scen_entries(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty() || split_whitespace(lines[0]) != std::vector<std::string_view>{"version", "1"})
    throw ParseError(1, "expected 'version 1'");
  std::vector<ScenarioEntry> out;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const int lineno = static_cast<int>(i) + 1;
    if (lines[i].empty()) continue;
    auto f = split(lines[i], '\t');
    if (f.size() != 9) f = split_whitespace(lines[i]);
    if (f.size() != 9) throw ParseError(lineno, "expected 9 fields, found " + std::to_string(f.size()));
    ScenarioEntry e;
    e.bucket = parse_number<int>(f[0], lineno, "bucket");
    e.map_name = std::string(f[1]);
    e.map_width = parse_number<int>(f[2], lineno, "width");
    e.map_height = parse_number<int>(f[3], lineno, "height");
    e.start_x = parse_number<int>(f[4], lineno, "start x");
    e.start_y = parse_number<int>(f[5], lineno, "start y");
    e.goal_x = parse_number<int>(f[6], lineno, "goal x");
    e.goal_y = parse_number<int>(f[7], lineno, "goal y");
    e.optimal_length = parse_double(f[8], lineno, "optimal length");
    auto inside = [&](int x, int y) { return x >= 0 && y >= 0 && x < e.map_width && y < e.map_height; };
    if (!inside(e.start_x, e.start_y) || !inside(e.goal_x, e.goal_y))
      throw ParseError(lineno, "coordinates outside the declared map dimensions");
    out.push_back(std::move(e));
  }
  return out;
}

std::string serialize_scen(const std::vector<ScenarioEntry>& entries) {
  std::string out = "version 1\n";
  char buf[64];
  for (const auto& e : entries) {
    std::snprintf(buf, sizeof buf, "%.8f", e.optimal_length);
    out += std::to_string(e.bucket) + '\t' + e.map_name + '\t' + std::to_string(e.map_width) + '\t' +
           std::to_string(e.map_height) + '\t' + std::to_string(e.start_x) + '\t' + std::to_string(e.start_y) +
           '\t' + std::to_string(e.goal_x) + '\t' + std::to_string(e.goal_y) + '\t' + buf + '\n';
  }
  return out;
}

std::vector<AgentTask> scenario_tasks(const std::vector<ScenarioEntry>& entries, const GridMap& map, int n) {
  if (n < 0) throw std::invalid_argument("agent count must be non-negative");
  if (n > static_cast<int>(entries.size()))
    throw std::invalid_argument("scenario has " + std::to_string(entries.size()) + " entries, " +
                                std::to_string(n) + " requested");
  std::vector<AgentTask> tasks;
  std::unordered_set<Cell> starts, goals;
  for (int i = 0; i < n; ++i) {
    const auto& e = entries[i];
    const int lineno = i + 2;
    if (!map.in_bounds(e.start_y, e.start_x) || !map.in_bounds(e.goal_y, e.goal_x))
      throw ParseError(lineno, "coordinates outside the map");
    const Cell s = map.cell(e.start_y, e.start_x);
    const Cell g = map.cell(e.goal_y, e.goal_x);
    if (map.blocked(s) || map.blocked(g)) throw ParseError(lineno, "start or goal on a blocked cell");
    if (!starts.insert(s).second) throw ParseError(lineno, "duplicate start cell");
    if (!goals.insert(g).second) throw ParseError(lineno, "duplicate goal cell");
    tasks.push_back({i, s, g});
  }
  return tasks;
}

std::vector<AgentTask> parse_scen(std::string_view text, const GridMap& map, int n) {
  return scenario_tasks(parse_scen_entries(text), map, n);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw std::runtime_error("error writing '" + path + "'");
}

std::string results_header() {
  return "grid,algorithm,policy,agents,window,horizon,budget,seed,scen_id,makespan,solved,periods,expansions_total";
}

std::string format_record(const RunRecord& r) {
  std::ostringstream ss;
  ss << r.grid_name << ',' << r.algorithm << ',' << r.policy << ',' << r.agent_count << ',' << r.window << ','
     << r.horizon << ',' << r.budget << ',' << r.seed << ',' << r.scen_id << ',' << r.makespan << ','
     << (r.solved ? 1 : 0) << ',' << r.periods << ',' << r.expansions_total;
  return ss.str();
}

std::string write_results(const std::vector<RunRecord>& records) {
  std::string out = results_header() + '\n';
  for (const auto& r : records) out += format_record(r) + '\n';
  return out;
}

std::vector<RunRecord> read_results(std::string_view csv) {
  const auto lines = split_lines(csv);
  std::vector<RunRecord> out;
  if (lines.empty() || (lines.size() == 1 && lines[0].empty())) return out;
  if (lines[0] != results_header()) throw ParseError(1, "unexpected results header");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const int lineno = static_cast<int>(i) + 1;
    if (lines[i].empty()) continue;
    const auto f = split(lines[i], ',');
    if (f.size() != 13) throw ParseError(lineno, "expected 13 columns, found " + std::to_string(f.size()));
    RunRecord r;
    r.grid_name = std::string(f[0]);
    r.algorithm = std::string(f[1]);
    r.policy = std::string(f[2]);
    r.agent_count = parse_number<int>(f[3], lineno, "agents");
    r.window = parse_number<int>(f[4], lineno, "window");
    r.horizon = parse_number<int>(f[5], lineno, "horizon");
    r.budget = parse_number<long>(f[6], lineno, "budget");
    r.seed = parse_number<unsigned long long>(f[7], lineno, "seed");
    r.scen_id = parse_number<int>(f[8], lineno, "scen_id");
    r.makespan = parse_number<int>(f[9], lineno, "makespan");
    const int solved = parse_number<int>(f[10], lineno, "solved");
    if (solved != 0 && solved != 1) throw ParseError(lineno, "solved must be 0 or 1");
    r.solved = solved == 1;
    r.periods = parse_number<int>(f[11], lineno, "periods");
    r.expansions_total = parse_number<long>(f[12], lineno, "expansions_total");
    out.push_back(std::move(r));
  }
  return out;
}

std::string cactus_data(const std::vector<RunRecord>& records) {
  std::map<std::pair<std::string, std::string>, std::vector<int>> solved;
  for (const auto& r : records) {
    auto& v = solved[{r.algorithm, r.policy}];
    if (r.solved) v.push_back(r.makespan);
  }
  std::string out = "algorithm,policy,makespan,cumulative_solved\n";
  for (auto& [key, makespans] : solved) {
    std::sort(makespans.begin(), makespans.end());
    for (std::size_t i = 0; i < makespans.size(); ++i) {
      if (i + 1 < makespans.size() && makespans[i + 1] == makespans[i]) continue;
      out += key.first + ',' + key.second + ',' + std::to_string(makespans[i]) + ',' + std::to_string(i + 1) + '\n';
    }
  }
  return out;
}

}  // namespace rtmapf
