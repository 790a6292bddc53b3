#include "rtmapf/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace rtmapf {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

long to_long(const std::string& s, const std::string& key) {
  try {
    std::size_t used = 0;
    const long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("invalid integer for '" + key + "': '" + s + "'");
  }
}

std::vector<int> to_int_list(const std::string& s, const std::string& key) {
  std::vector<int> out;
  for (const auto& item : split_list(s)) out.push_back(static_cast<int>(to_long(item, key)));
  return out;
}

// Table column order.
int column_rank(const std::string& algorithm, const std::string& policy) {
  static const std::vector<std::pair<std::string, std::string>> order = {
      {"pibt", "none"},       {"lns2+pibt", "cpb"}, {"lns2+pibt", "shared"}, {"lns2", "cpb"},
      {"lns2", "fixed:100"},  {"lns2", "fixed:50"}, {"lns2", "shared"},      {"prp", "fixed"},
      {"prp", "shared"}};
  for (std::size_t i = 0; i < order.size(); ++i)
    if (order[i].first == algorithm && order[i].second == policy) return static_cast<int>(i);
  return static_cast<int>(order.size());
}

}  // namespace

PlannerEntry parse_planner(const std::string& token) {
  const auto colon = token.find(':');
  const std::string algo = token.substr(0, colon);
  const std::string policy = colon == std::string::npos ? "" : token.substr(colon + 1);
  PlannerEntry e;
  auto& c = e.config;
  if (algo == "pibt") {
    if (!policy.empty() && policy != "none") throw std::invalid_argument("pibt takes no budget policy");
    c.algorithm = Algorithm::Pibt;
  } else if (algo == "prp") {
    c.algorithm = Algorithm::Prp;
    if (policy.empty() || policy == "shared") {
      c.agent_policy = AgentBudgetPolicy::Shared;
    } else if (policy == "fixed") {
      c.agent_policy = AgentBudgetPolicy::Fixed;
    } else {
      throw std::invalid_argument("unknown PrP policy '" + policy + "'");
    }
  } else if (algo == "lns2" || algo == "lns2+pibt") {
    c.algorithm = algo == "lns2" ? Algorithm::Lns2 : Algorithm::Lns2Pibt;
    if (policy.empty() || policy == "shared") {
      c.nb_policy = NeighborhoodBudgetPolicy::shared();
    } else if (policy == "cpb") {
      c.nb_policy = NeighborhoodBudgetPolicy::conflict_proportion();
    } else if (policy.rfind("fixed:", 0) == 0) {
      const long b = to_long(policy.substr(6), "fixed");
      if (b < 1) throw std::invalid_argument("Fixed neighborhood budget must be >= 1");
      c.nb_policy = NeighborhoodBudgetPolicy::fixed(b);
    } else {
      throw std::invalid_argument("unknown neighborhood policy '" + policy + "'");
    }
  } else {
    throw std::invalid_argument("unknown algorithm '" + algo + "'");
  }
  e.algorithm = algorithm_name(c.algorithm);
  e.policy = policy_name(c);
  return e;
}

std::vector<PlannerEntry> default_planners() {
  std::vector<PlannerEntry> out;
  for (const char* t : {"pibt", "lns2+pibt:cpb", "lns2+pibt:shared", "lns2:cpb", "lns2:fixed:100", "lns2:fixed:50",
                        "lns2:shared", "prp:fixed", "prp:shared"})
    out.push_back(parse_planner(t));
  return out;
}

void ExperimentSpec::validate() const {
  if (grid.empty()) throw std::invalid_argument("experiment needs a grid name");
  if (map_path.empty()) throw std::invalid_argument("experiment needs a map file");
  if (scen_paths.empty()) throw std::invalid_argument("experiment needs at least one scenario file");
  if (sweep_values.empty()) throw std::invalid_argument("experiment needs a non-empty sweep list");
  if (sweep == SweepKind::Window && fixed_agents < 1)
    throw std::invalid_argument("window sweep needs a fixed agent count");
  if (sweep == SweepKind::Agents && fixed_window < 1) throw std::invalid_argument("agent sweep needs window >= 1");
  if (planners.empty()) throw std::invalid_argument("experiment needs at least one planner");
  if (budget_multiplier < 1 && !budget) throw std::invalid_argument("budget multiplier must be >= 1");
}

std::vector<int> exp1_agent_counts(const std::string& grid) {
  if (grid == "room-32-32-4" || grid == "random-32-32-10" || grid == "random-32-32-20") return {40, 80, 100, 150, 200};
  // Maze-2 also gets a 30-agent row below the usual 40..100 range.
  if (grid == "maze-32-32-2") return {30, 40, 60, 80, 100};
  if (grid == "maze-32-32-4") return {40, 60, 80, 100};
  if (grid == "empty-32-32") return {100, 150, 200, 250, 300, 350};
  throw std::invalid_argument("no exp1 preset for grid '" + grid + "'");
}

int exp2_agent_count(const std::string& grid) {
  if (grid == "room-32-32-4") return 120;
  if (grid == "random-32-32-10") return 150;
  if (grid == "random-32-32-20") return 110;
  if (grid == "maze-32-32-2") return 40;
  if (grid == "maze-32-32-4") return 25;
  if (grid == "empty-32-32") return 340;
  throw std::invalid_argument("no exp2 preset for grid '" + grid + "'");
}

std::string benchmark_map_path(const std::string& data_dir, const std::string& grid) {
  return data_dir + "/" + grid + ".map";
}

std::string benchmark_scen_path(const std::string& data_dir, const std::string& grid, int index) {
  return data_dir + "/scen-random/" + grid + "-random-" + std::to_string(index) + ".scen";
}

ExperimentSpec preset_spec(const std::string& preset, const std::string& grid, const std::string& data_dir,
                           int scens) {
  ExperimentSpec s;
  s.grid = grid;
  s.map_path = benchmark_map_path(data_dir, grid);
  for (int i = 1; i <= scens; ++i) s.scen_paths.push_back(benchmark_scen_path(data_dir, grid, i));
  s.planners = default_planners();
  if (preset == "exp1") {
    s.sweep = SweepKind::Agents;
    s.sweep_values = exp1_agent_counts(grid);
    s.fixed_window = 5;
  } else if (preset == "exp2") {
    s.sweep = SweepKind::Window;
    s.sweep_values = {2, 3, 4, 5, 6, 7, 8};
    s.fixed_agents = exp2_agent_count(grid);
  } else {
    throw std::invalid_argument("unknown preset '" + preset + "'");
  }
  return s;
}

ExperimentSpec parse_experiment_spec(const std::string& text, const std::string& base_dir) {
  ExperimentSpec s;
  std::map<std::string, std::string> kv;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(lineno, "expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    if (kv.count(key)) throw ParseError(lineno, "duplicate key '" + key + "'");
    kv[key] = trim(line.substr(eq + 1));
  }
  auto take = [&kv](const std::string& key) -> std::optional<std::string> {
    auto it = kv.find(key);
    if (it == kv.end()) return std::nullopt;
    std::string v = it->second;
    kv.erase(it);
    return v;
  };
  auto resolve_path = [&base_dir](const std::string& p) {
    return (!p.empty() && p[0] == '/') || base_dir.empty() ? p : base_dir + "/" + p;
  };

  const auto grid = take("grid");
  if (!grid) throw std::invalid_argument("experiment spec needs 'grid'");
  s.grid = *grid;
  const std::string data_dir = resolve_path(take("data_dir").value_or("."));
  int scens = 25;
  if (auto v = take("scens")) scens = static_cast<int>(to_long(*v, "scens"));
  if (auto v = take("map")) {
    s.map_path = resolve_path(*v);
  } else {
    s.map_path = benchmark_map_path(data_dir, s.grid);
  }
  if (auto v = take("scen_files")) {
    for (const auto& p : split_list(*v)) s.scen_paths.push_back(resolve_path(p));
  } else {
    for (int i = 1; i <= scens; ++i) s.scen_paths.push_back(benchmark_scen_path(data_dir, s.grid, i));
  }

  auto agents = take("agents");
  auto windows = take("windows");
  if (agents.has_value() == windows.has_value())
    throw std::invalid_argument("experiment spec needs exactly one of 'agents' or 'windows'");
  if (agents) {
    s.sweep = SweepKind::Agents;
    s.sweep_values = to_int_list(*agents, "agents");
    if (auto v = take("window")) s.fixed_window = static_cast<int>(to_long(*v, "window"));
  } else {
    s.sweep = SweepKind::Window;
    s.sweep_values = to_int_list(*windows, "windows");
    auto v = take("agent_count");
    if (!v) throw std::invalid_argument("window sweep needs 'agent_count'");
    s.fixed_agents = static_cast<int>(to_long(*v, "agent_count"));
  }
  if (auto v = take("budget_multiplier")) s.budget_multiplier = to_long(*v, "budget_multiplier");
  if (auto v = take("budget")) s.budget = to_long(*v, "budget");
  if (auto v = take("horizon")) s.horizon = static_cast<int>(to_long(*v, "horizon"));
  if (auto v = take("cap")) s.makespan_cap = static_cast<int>(to_long(*v, "cap"));
  if (auto v = take("seed")) s.seed = static_cast<std::uint64_t>(to_long(*v, "seed"));
  if (auto v = take("nb_size")) s.nb_size = static_cast<int>(to_long(*v, "nb_size"));
  if (auto v = take("fail_policy")) {
    if (*v == "istay") s.fail_policy = FailPolicy::IStay;
    else if (*v == "allstay") s.fail_policy = FailPolicy::AllStay;
    else throw std::invalid_argument("unknown fail policy '" + *v + "'");
  }
  if (auto v = take("algorithms")) {
    for (const auto& t : split_list(*v)) s.planners.push_back(parse_planner(t));
  } else {
    s.planners = default_planners();
  }
  if (!kv.empty()) throw std::invalid_argument("unknown experiment key '" + kv.begin()->first + "'");
  s.validate();
  return s;
}

RunRecord make_record(const std::string& grid, const PlannerEntry& planner, const Instance& instance,
                      std::uint64_t seed, int scen_id, const EpisodeResult& result) {
  RunRecord r;
  r.grid_name = grid;
  r.algorithm = planner.algorithm;
  r.policy = planner.policy;
  r.agent_count = instance.agent_count();
  r.window = instance.window;
  r.horizon = instance.horizon;
  r.budget = instance.budget;
  r.seed = seed;
  r.scen_id = scen_id;
  r.makespan = result.solved ? result.makespan : instance.makespan_cap;
  r.solved = result.solved;
  r.periods = result.periods;
  r.expansions_total = result.total_expansions();
  return r;
}

std::vector<RunRecord> run_bench(const ExperimentSpec& spec, int jobs, const ProgressFn& progress) {
  spec.validate();
  const GridMap map = parse_map(read_file(spec.map_path));
  std::vector<std::vector<ScenarioEntry>> scens;
  for (const auto& p : spec.scen_paths) scens.push_back(parse_scen_entries(read_file(p)));

  struct Task {
    std::size_t planner;
    int sweep_value;
    int scen;
  };
  std::vector<Task> tasks;
  for (std::size_t p = 0; p < spec.planners.size(); ++p)
    for (int v : spec.sweep_values)
      for (int s = 0; s < static_cast<int>(scens.size()); ++s) tasks.push_back({p, v, s});

  std::vector<RunRecord> records(tasks.size());
  std::atomic<std::size_t> next{0}, done{0};
  std::exception_ptr failure;
  std::mutex mu;
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        const Task& t = tasks[i];
        const int agents = spec.sweep == SweepKind::Agents ? t.sweep_value : spec.fixed_agents;
        const int window = spec.sweep == SweepKind::Window ? t.sweep_value : spec.fixed_window;
        Instance inst;
        inst.map = map;
        inst.agents = scenario_tasks(scens[t.scen], map, agents);
        inst.window = window;
        inst.horizon = spec.horizon.value_or(2 * window);
        inst.budget = spec.budget.value_or(spec.budget_multiplier * agents);
        inst.makespan_cap = spec.makespan_cap;
        PlannerConfig config = spec.planners[t.planner].config;
        config.fail_policy = spec.fail_policy;
        config.nb_size = spec.nb_size;
        const std::uint64_t seed = spec.seed + static_cast<std::uint64_t>(t.scen);
        const auto result = run_episode(inst, config, seed);
        records[i] = make_record(spec.grid, spec.planners[t.planner], inst, seed, t.scen + 1, result);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
      }
      const std::size_t d = ++done;
      if (progress) {
        std::lock_guard lock(mu);
        progress(d, tasks.size());
      }
    }
  };
  jobs = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);

  const bool by_agents = spec.sweep == SweepKind::Agents;
  std::stable_sort(records.begin(), records.end(), [by_agents](const RunRecord& a, const RunRecord& b) {
    const int va = by_agents ? a.agent_count : a.window;
    const int vb = by_agents ? b.agent_count : b.window;
    return std::tie(a.grid_name, a.algorithm, a.policy, va, a.scen_id) <
           std::tie(b.grid_name, b.algorithm, b.policy, vb, b.scen_id);
  });
  return records;
}

std::string aggregate_table(const std::vector<RunRecord>& records) {
  if (records.empty()) return "";
  std::set<int> agent_values, window_values;
  for (const auto& r : records) {
    agent_values.insert(r.agent_count);
    window_values.insert(r.window);
  }
  const bool by_window = agent_values.size() == 1 && window_values.size() > 1;

  using Column = std::tuple<int, std::string, std::string>;
  std::set<Column> columns;
  std::map<std::pair<int, Column>, std::pair<double, int>> cells;
  std::set<int> rows;
  for (const auto& r : records) {
    const Column col{column_rank(r.algorithm, r.policy), r.algorithm, r.policy};
    const int row = by_window ? r.window : r.agent_count;
    columns.insert(col);
    rows.insert(row);
    auto& cell = cells[{row, col}];
    cell.first += r.makespan;
    cell.second += 1;
  }
  std::string out = by_window ? "window" : "agents";
  for (const auto& [rank, algo, policy] : columns) out += "," + algo + "/" + policy;
  out += '\n';
  char buf[32];
  for (int row : rows) {
    out += std::to_string(row);
    for (const auto& col : columns) {
      out += ',';
      auto it = cells.find({row, col});
      if (it == cells.end()) continue;
      std::snprintf(buf, sizeof buf, "%.2f", it->second.first / it->second.second);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

Report make_report(const std::vector<RunRecord>& records) {
  std::map<std::string, std::vector<RunRecord>> by_grid;
  for (const auto& r : records) by_grid[r.grid_name].push_back(r);
  Report report;
  for (const auto& [grid, rs] : by_grid) {
    report.cactus[grid] = cactus_data(rs);
    report.table[grid] = aggregate_table(rs);
  }
  return report;
}

}  // namespace rtmapf
