#include <doctest.h>

#include <filesystem>

#include "rtmapf/experiment.hpp"
#include "rtmapf/synth.hpp"

using namespace rtmapf;

TEST_CASE("parse_planner") {
  const auto e = parse_planner("lns2:fixed:50");
  CHECK(e.algorithm == "lns2");
  CHECK(e.policy == "fixed:50");
  CHECK(e.config.nb_policy == NeighborhoodBudgetPolicy::fixed(50));
  CHECK(parse_planner("pibt").policy == "none");
  CHECK(parse_planner("prp:fixed").config.agent_policy == AgentBudgetPolicy::Fixed);
  CHECK(parse_planner("lns2+pibt:cpb").config.algorithm == Algorithm::Lns2Pibt);
  CHECK_THROWS_AS(parse_planner("astar"), std::invalid_argument);
  CHECK_THROWS_AS(parse_planner("lns2:fixed:0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_planner("prp:cpb"), std::invalid_argument);
  CHECK(default_planners().size() == 9);
}

TEST_CASE("experiment spec parsing") {
  const auto s = parse_experiment_spec(
      "grid = room-32-32-4\n# comment\nmap = m.map\nscen_files = a.scen, b.scen\nagents = 10, 20\n"
      "window = 3\nbudget = 500\nalgorithms = pibt, lns2:cpb\n",
      "base");
  CHECK(s.map_path == "base/m.map");
  CHECK(s.scen_paths == std::vector<std::string>{"base/a.scen", "base/b.scen"});
  CHECK(s.sweep == SweepKind::Agents);
  CHECK(s.sweep_values == std::vector<int>{10, 20});
  CHECK(s.fixed_window == 3);
  CHECK(s.budget == 500L);
  CHECK(s.planners.size() == 2);

  const auto w = parse_experiment_spec("grid = g\ndata_dir = /d\nscens = 2\nwindows = 2,4\nagent_count = 7\n");
  CHECK(w.map_path == "/d/g.map");
  CHECK(w.scen_paths.back() == "/d/scen-random/g-random-2.scen");
  CHECK(w.sweep == SweepKind::Window);
  CHECK(w.fixed_agents == 7);
  CHECK(w.planners.size() == 9);

  CHECK_THROWS_AS(parse_experiment_spec("grid = g\nagents = 1\nwindows = 2\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_experiment_spec("grid = g\nagents = 1\ncolour = red\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_experiment_spec("grid = g\nagents = x\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_experiment_spec("grid = g\nagents\n"), ParseError);
}

TEST_CASE("presets") {
  const auto s = preset_spec("exp1", "maze-32-32-2", "data", 3);
  CHECK(s.sweep_values.front() == 30);
  CHECK(s.scen_paths.size() == 3);
  CHECK(preset_spec("exp2", "empty-32-32", "data", 1).fixed_agents == 340);
  CHECK_THROWS_AS(preset_spec("exp3", "empty-32-32", "data", 1), std::invalid_argument);
}

namespace {

RunRecord rec(const std::string& algo, const std::string& policy, int agents, int makespan, bool solved) {
  RunRecord r;
  r.grid_name = "g";
  r.algorithm = algo;
  r.policy = policy;
  r.agent_count = agents;
  r.window = 5;
  r.makespan = makespan;
  r.solved = solved;
  return r;
}

}  // namespace

TEST_CASE("aggregate table averages capped makespans") {
  const std::vector<RunRecord> rs = {rec("pibt", "none", 10, 40, true), rec("pibt", "none", 10, 60, true)};
  CHECK(aggregate_table(rs) == "agents,pibt/none\n10,50.00\n");
  const std::vector<RunRecord> grid = {rec("prp", "shared", 10, 30, true), rec("pibt", "none", 10, 20, true),
                                     rec("prp", "shared", 20, 100, false), rec("pibt", "none", 20, 45, true),
                                     rec("pibt", "none", 20, 46, true)};
  CHECK(aggregate_table(grid) == "agents,pibt/none,prp/shared\n10,20.00,30.00\n20,45.50,100.00\n");
  CHECK(aggregate_table({}).empty());
}

TEST_CASE("report splits by grid") {
  std::vector<RunRecord> rs = {rec("pibt", "none", 10, 30, true), rec("pibt", "none", 10, 50, true),
                               rec("pibt", "none", 10, 50, true), rec("pibt", "none", 10, 100, false)};
  rs.push_back(rec("pibt", "none", 10, 5, true));
  rs.back().grid_name = "h";
  const auto r = make_report(rs);
  CHECK(r.cactus.at("g") == "algorithm,policy,makespan,cumulative_solved\npibt,none,30,1\npibt,none,50,3\n");
  CHECK(r.table.at("g") == "agents,pibt/none\n10,57.50\n");
  CHECK(r.cactus.count("h") == 1);
  CHECK(make_report({}).cactus.empty());
}

TEST_CASE("run_bench is deterministic and independent of the job count") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "rtmapf_bench_test";
  fs::create_directories(dir / "scen-random");
  const auto map = make_random_map(12, 12, 0.15, 4);
  write_file((dir / "tiny.map").string(), serialize_map(map));
  for (int i = 1; i <= 2; ++i)
    write_file((dir / "scen-random" / ("tiny-random-" + std::to_string(i) + ".scen")).string(),
               serialize_scen(make_random_scenario(map, "tiny.map", 20, i)));
  ExperimentSpec spec = parse_experiment_spec(
      "grid = tiny\ndata_dir = " + dir.string() + "\nscens = 2\nagents = 4, 8\nwindow = 3\ncap = 40\n"
      "algorithms = pibt, prp:fixed, lns2:cpb, lns2+pibt:cpb\n");
  const auto a = run_bench(spec, 1);
  const auto b = run_bench(spec, 3);
  CHECK(a.size() == 4 * 2 * 2);
  CHECK(write_results(a) == write_results(b));
  CHECK(a.front().scen_id == 1);
  CHECK(a.front().seed == 1);
  CHECK(a.front().budget == 15 * a.front().agent_count);
  CHECK(a.front().horizon == 6);
  fs::remove_all(dir);
}
