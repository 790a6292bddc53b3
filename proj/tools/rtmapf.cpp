// rtmapf: solve single instances, run benchmark sweeps, and summarize results.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "rtmapf/benchio.hpp"
#include "rtmapf/experiment.hpp"
#include "rtmapf/runtime.hpp"
#include "rtmapf/synth.hpp"

namespace fs = std::filesystem;
using namespace rtmapf;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;

FailPolicy parse_fail_policy(const std::string& s) {
  if (s == "istay") return FailPolicy::IStay;
  if (s == "allstay") return FailPolicy::AllStay;
  throw std::invalid_argument("unknown fail policy '" + s + "'");
}

std::string stem(const std::string& path) { return fs::path(path).stem().string(); }

struct SolveArgs {
  std::string map, scen, algo = "lns2", agent_policy = "shared", nb_policy = "cpb", fail = "istay", out;
  int agents = 1, nb_size = 4, window = 5, cap = 100;
  std::optional<int> horizon;
  long multiplier = 15;
  std::optional<long> budget;
  unsigned long long seed = 1;
  bool trace = false;
};

int cmd_solve(const SolveArgs& a) {
  const GridMap map = parse_map(read_file(a.map));
  Instance inst;
  inst.map = map;
  inst.agents = parse_scen(read_file(a.scen), map, a.agents);
  inst.window = a.window;
  inst.horizon = a.horizon.value_or(2 * a.window);
  inst.budget = a.budget.value_or(a.multiplier * a.agents);
  inst.makespan_cap = a.cap;

  std::string token = a.algo;
  if (a.algo == "prp") token += ":" + a.agent_policy;
  if (a.algo == "lns2" || a.algo == "lns2+pibt") token += ":" + a.nb_policy;
  PlannerEntry planner = parse_planner(token);
  planner.config.fail_policy = parse_fail_policy(a.fail);
  planner.config.nb_size = a.nb_size;
  if (a.algo != "prp") {
    planner.config.agent_policy = a.agent_policy == "fixed" ? AgentBudgetPolicy::Fixed : AgentBudgetPolicy::Shared;
    if (a.agent_policy != "fixed" && a.agent_policy != "shared")
      throw std::invalid_argument("unknown agent budget policy '" + a.agent_policy + "'");
  }

  TraceSink sink;
  if (a.trace) {
    sink = [&map](const PeriodTrace& p) {
      std::cout << "period " << p.period << " t=" << p.start_time << " expansions=" << p.expansions
                << " conflicts_before=" << p.conflicts_before << " conflicts_after=" << p.conflicts_after
                << " stayed=" << p.stayed;
      if (p.chose_pibt) std::cout << " pibt";
      std::cout << " positions=";
      for (std::size_t i = 0; i < p.positions.size(); ++i) std::cout << (i ? " " : "") << map.describe(p.positions[i]);
      std::cout << '\n';
    };
  }
  const auto result = run_episode(inst, planner.config, a.seed, sink);
  const auto record = make_record(stem(a.map), planner, inst, a.seed, 0, result);
  std::cout << format_record(record) << '\n';
  if (!a.out.empty()) write_file(a.out, write_results({record}));
  return 0;
}

struct BenchArgs {
  std::string spec, grid, data_dir = "data", out, agg, fail, algos;
  int scens = 25, jobs = 1;
  std::optional<int> window, horizon, cap, nb_size;
  std::optional<long> multiplier, budget;
  std::optional<unsigned long long> seed;
  bool quiet = false;
};

int cmd_bench(const BenchArgs& a) {
  ExperimentSpec spec;
  if (a.spec == "exp1" || a.spec == "exp2") {
    if (a.grid.empty()) throw std::invalid_argument("presets need --grid");
    spec = preset_spec(a.spec, a.grid, a.data_dir, a.scens);
  } else {
    spec = parse_experiment_spec(read_file(a.spec), fs::path(a.spec).parent_path().string());
  }
  if (a.window) {
    if (spec.sweep == SweepKind::Window) throw std::invalid_argument("--window conflicts with a window sweep");
    spec.fixed_window = *a.window;
  }
  if (a.horizon) spec.horizon = *a.horizon;
  if (a.cap) spec.makespan_cap = *a.cap;
  if (a.nb_size) spec.nb_size = *a.nb_size;
  if (a.multiplier) spec.budget_multiplier = *a.multiplier;
  if (a.budget) spec.budget = *a.budget;
  if (a.seed) spec.seed = *a.seed;
  if (!a.fail.empty()) spec.fail_policy = parse_fail_policy(a.fail);
  if (!a.algos.empty()) {
    spec.planners.clear();
    std::stringstream ss(a.algos);
    std::string t;
    while (std::getline(ss, t, ',')) spec.planners.push_back(parse_planner(t));
  }
  spec.validate();

  ProgressFn progress;
  if (!a.quiet)
    progress = [](std::size_t done, std::size_t total) {
      if (done % 10 == 0 || done == total) std::cerr << "\r" << done << "/" << total << std::flush;
    };
  const auto records = run_bench(spec, a.jobs, progress);
  if (!a.quiet) std::cerr << '\n';
  const std::string results = write_results(records);
  const std::string aggregate = aggregate_table(records);
  if (a.out.empty()) {
    std::cout << results;
    std::cerr << aggregate;
  } else {
    write_file(a.out, results);
    std::string agg = a.agg;
    if (agg.empty()) {
      fs::path p(a.out);
      agg = (p.parent_path() / (p.stem().string() + "_aggregate.csv")).string();
    }
    write_file(agg, aggregate);
  }
  return 0;
}

int cmd_report(const std::string& input, const std::string& out_dir) {
  const auto report = make_report(read_results(read_file(input)));
  if (out_dir.empty()) {
    for (const auto& [grid, csv] : report.table) std::cout << "# " << grid << " aggregate\n" << csv;
    for (const auto& [grid, csv] : report.cactus) std::cout << "# " << grid << " cactus\n" << csv;
    return 0;
  }
  fs::create_directories(out_dir);
  for (const auto& [grid, csv] : report.table) write_file(out_dir + "/" + grid + "_table.csv", csv);
  for (const auto& [grid, csv] : report.cactus) write_file(out_dir + "/" + grid + "_cactus.csv", csv);
  return 0;
}

int cmd_gen(const std::string& data_dir, std::vector<std::string> grids, int scens, int entries,
            unsigned long long seed) {
  if (grids.empty()) grids = benchmark_grid_names();
  fs::create_directories(fs::path(data_dir) / "scen-random");
  for (const auto& grid : grids) {
    const GridMap map = make_benchmark_map(grid, seed);
    write_file(benchmark_map_path(data_dir, grid), serialize_map(map));
    const int count = std::min<int>(entries, static_cast<int>(largest_component(map).size()));
    for (int i = 1; i <= scens; ++i)
      write_file(benchmark_scen_path(data_dir, grid, i),
                 serialize_scen(make_random_scenario(map, grid + ".map", count, seed * 1000 + i)));
    std::cerr << grid << ": " << map.size() - map.blocked_count() << " free cells, " << scens << " scenarios\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Real-time multi-agent pathfinding with budgeted windowed planners"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Run one episode and print its result row");
  s->add_option("--map", solve.map, "MovingAI .map file")->required();
  s->add_option("--scen", solve.scen, "MovingAI .scen file")->required();
  s->add_option("--agents", solve.agents, "Number of agents taken from the scenario");
  s->add_option("--algo", solve.algo, "pibt | prp | lns2 | lns2+pibt");
  s->add_option("--agent-budget-policy", solve.agent_policy, "shared | fixed");
  s->add_option("--nb-policy", solve.nb_policy, "shared | fixed:<B_F> | cpb");
  s->add_option("--nb-size", solve.nb_size, "Neighborhood size");
  s->add_option("--window", solve.window, "Execution window");
  s->add_option("--horizon", solve.horizon, "Planning horizon (default 2 * window)");
  s->add_option("--budget-multiplier", solve.multiplier, "Expansions per agent per period");
  s->add_option("--budget", solve.budget, "Absolute expansions per period");
  s->add_option("--cap", solve.cap, "Makespan cap");
  s->add_option("--seed", solve.seed, "Random seed");
  s->add_option("--fail-policy", solve.fail, "allstay | istay");
  s->add_flag("--trace", solve.trace, "Print per-period details");
  s->add_option("--out", solve.out, "Also write a results CSV");

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Run an experiment sweep");
  b->add_option("spec", bench.spec, "Spec file, or preset exp1 / exp2")->required();
  b->add_option("--grid", bench.grid, "Grid name for presets");
  b->add_option("--data-dir", bench.data_dir, "Directory with maps and scen-random/");
  b->add_option("--scens", bench.scens, "Scenario files per cell (presets)");
  b->add_option("--algo", bench.algos, "Comma separated planners, e.g. lns2:cpb,pibt");
  b->add_option("--window", bench.window, "Fixed execution window");
  b->add_option("--horizon", bench.horizon, "Planning horizon");
  b->add_option("--budget-multiplier", bench.multiplier, "Expansions per agent per period");
  b->add_option("--budget", bench.budget, "Absolute expansions per period");
  b->add_option("--cap", bench.cap, "Makespan cap");
  b->add_option("--seed", bench.seed, "Base seed");
  b->add_option("--nb-size", bench.nb_size, "Neighborhood size");
  b->add_option("--fail-policy", bench.fail, "allstay | istay");
  b->add_option("--jobs", bench.jobs, "Parallel workers");
  b->add_option("--out", bench.out, "Results CSV path");
  b->add_option("--aggregate", bench.agg, "Aggregate CSV path");
  b->add_flag("--quiet", bench.quiet, "No progress output");

  std::string report_in, report_out;
  auto* r = app.add_subcommand("report", "Cactus data and aggregate tables from a results CSV");
  r->add_option("results", report_in, "Results CSV")->required();
  r->add_option("--out", report_out, "Output directory (default: stdout)");

  std::string gen_dir = "data";
  std::vector<std::string> gen_grids;
  int gen_scens = 25, gen_entries = 1000;
  unsigned long long gen_seed = 1;
  auto* g = app.add_subcommand("gen", "Write generated benchmark-style maps and scenarios");
  g->add_option("--data-dir", gen_dir, "Output directory");
  g->add_option("--grid", gen_grids, "Grid names (default: all six)");
  g->add_option("--scens", gen_scens, "Scenario files per grid");
  g->add_option("--entries", gen_entries, "Max entries per scenario file");
  g->add_option("--seed", gen_seed, "Generator seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*s) return cmd_solve(solve);
    if (*b) return cmd_bench(bench);
    if (*r) return cmd_report(report_in, report_out);
    if (*g) return cmd_gen(gen_dir, gen_grids, gen_scens, gen_entries, gen_seed);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}
