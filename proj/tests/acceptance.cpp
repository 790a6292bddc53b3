// Acceptance gate. Prints one PASS/FAIL line per criterion and exits non-zero
// if any criterion fails. Tolerances are fixed here; see the line for each.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "rtmapf/experiment.hpp"
#include "rtmapf/lns2.hpp"
#include "rtmapf/prp.hpp"
#include "rtmapf/runtime.hpp"
#include "rtmapf/synth.hpp"

using namespace rtmapf;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail) {
  std::printf("%s criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, double a, double b) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

// Criteria 1 and 2 share the same runs.
void safety_and_budget() {
  std::vector<PlannerConfig> configs;
  for (const auto& p : default_planners())
    for (auto fp : {FailPolicy::AllStay, FailPolicy::IStay}) {
      PlannerConfig c = p.config;
      c.fail_policy = fp;
      configs.push_back(c);
    }
  // PrP-style intra-neighborhood Fixed for LNS2 is a supported variant; cover it too.
  {
    PlannerConfig c = parse_planner("lns2:cpb").config;
    c.agent_policy = AgentBudgetPolicy::Fixed;
    configs.push_back(c);
  }

  const int instances = 56;
  long episodes = 0, conflict_violations = 0, periods = 0, budget_violations = 0, pibt_charges = 0;
  for (int i = 0; i < instances; ++i) {
    Rng pick(1000 + i);
    const int k = 2 + static_cast<int>(pick.below(19));
    Instance inst = fixtures::random_instance(16, 16, 0.2, k, 5000 + i);
    inst.window = 1 + static_cast<int>(pick.below(6));
    inst.horizon = 2 * inst.window;
    inst.budget = 15L * k;
    inst.makespan_cap = 100;
    for (const auto& c : configs) {
      const auto r = run_episode(inst, c, 77 + i, [&](const PeriodTrace& p) {
        ++periods;
        if (p.expansions > inst.budget) ++budget_violations;
        if (c.algorithm == Algorithm::Pibt && p.expansions != 0) ++pibt_charges;
      });
      ++episodes;
      const auto exec = executed_paths(r);
      conflict_violations += static_cast<long>(
          oracle::brute_force_conflicts(exec, static_cast<int>(r.trajectory.size())).size());
      for (const auto& path : exec.paths)
        if (!is_valid_path(inst.map, path)) ++conflict_violations;
    }
  }
  report(1, episodes >= 1000 && conflict_violations == 0, "executed trajectories are conflict-free",
         std::to_string(episodes) + " episodes, " + std::to_string(conflict_violations) + " violations, tolerance 0");
  report(2, budget_violations == 0 && pibt_charges == 0 && periods > 0, "per-period expansions within budget",
         std::to_string(periods) + " periods, " + std::to_string(budget_violations) + " over budget, " +
             std::to_string(pibt_charges) + " PIBT charges, tolerance 0");
}

void formulas() {
  long violations = 0;
  for (int n = 1; n <= 16; ++n)
    for (int w = 1; w <= 16; ++w) {
      long sum = 0;
      for (int i = 1; i <= n; ++i) sum += i;
      if (neighborhood_lower_bound(n, w) != (sum + 1) * w) ++violations;
    }
  Rng rng(2024);
  int trials = 0;
  for (; trials < 5000; ++trials) {
    const int k = 1 + static_cast<int>(rng.below(60));
    std::vector<int> conflicts(k);
    for (auto& c : conflicts) c = static_cast<int>(rng.below(9));
    const long remaining = static_cast<long>(rng.below(200000));
    const long total = std::accumulate(conflicts.begin(), conflicts.end(), 0L);
    // Random partition into neighborhoods of size 1..8.
    std::vector<int> ids(k);
    std::iota(ids.begin(), ids.end(), 0);
    rng.shuffle(std::span<int>(ids));
    long sum = 0;
    for (std::size_t at = 0; at < ids.size();) {
      const std::size_t len = std::min<std::size_t>(1 + rng.below(8), ids.size() - at);
      const std::span<const int> part(ids.data() + at, len);
      at += len;
      long mass = 0;
      for (int a : part) mass += conflicts[a];
      const long share = conflict_share(part, conflicts, remaining);
      const long expected = total == 0 ? 0 : static_cast<long>(static_cast<__int128>(remaining) * mass / total);
      if (share != expected) ++violations;
      const long floor = neighborhood_lower_bound(static_cast<int>(len), 5);
      const long budget =
          neighborhood_budget(NeighborhoodBudgetPolicy::conflict_proportion(), part, conflicts, remaining, 5);
      if (budget != std::min(remaining, std::max(expected, floor))) ++violations;
      sum += share;
    }
    if (sum > remaining) ++violations;
  }
  report(3, violations == 0, "lower bound and conflict-proportional allocation formulas",
         "256 lower-bound cases, " + std::to_string(trials) + " random partitions, " + std::to_string(violations) +
             " violations, tolerance 0");
}

void difficult_configuration() {
  const int w = 5, h = 20;
  const auto cal = fixtures::calibrate_difficult(w, h);
  const auto inst = fixtures::difficult_configuration(w, h, cal.budget);
  const auto dmaps = build_distance_maps(inst.map, inst.goals());
  const auto starts = inst.starts();
  std::vector<int> order(7);
  std::iota(order.begin(), order.end(), 0);
  BudgetMeter ms(inst.budget), mf(inst.budget);
  const auto shared = prp_plan(inst, dmaps, starts, order, {AgentBudgetPolicy::Shared, false}, ms);
  const auto fixed = prp_plan(inst, dmaps, starts, order, {AgentBudgetPolicy::Fixed, false}, mf);
  std::set<int> fixed_set;
  for (int a = 0; a < 7; ++a)
    if (fixed.agents[a].planned) fixed_set.insert(a);
  const bool drains = cal.expensive > cal.budget - cal.agent0;
  const bool ok = drains && shared.planned_count() <= 2 && fixed_set == std::set<int>{0, 4, 5, 6};
  std::string planned;
  for (int a : fixed_set) planned += (planned.empty() ? "" : " ") + std::to_string(a);
  report(4, ok, "difficult configuration: Shared starves, Fixed plans 0,4,5,6",
         "B=" + std::to_string(cal.budget) + " agent0=" + std::to_string(cal.agent0) +
             " expensive=" + std::to_string(cal.expensive) + " easy=" + std::to_string(cal.easy) +
             "; Shared planned " + std::to_string(shared.planned_count()) + ", Fixed planned {" + planned + "}");
}

void search_oracle() {
  int deviations = 0, queries = 0;
  Rng rng(8);
  while (queries < 200) {
    const GridMap map = make_random_map(8, 8, 0.2, 1 + rng.below(1000000));
    const auto comp = largest_component(map);
    const Cell s = comp[rng.below(comp.size())];
    const Cell g = comp[rng.below(comp.size())];
    const ConstraintTable table(map, 8);
    BudgetMeter meter(1'000'000);
    const auto out = plan_path(map, DistanceMap(map, g), table, {s, g, 8, 1'000'000, 1, false}, meter);
    const int ref = oracle::bfs_distances(map, g)[s];
    if (!out.found() || out.path.cost() != ref) ++deviations;
    ++queries;
  }
  report(5, deviations == 0, "constraint-free search cost equals BFS distance",
         std::to_string(queries) + " queries, " + std::to_string(deviations) + " deviations, tolerance 0");
}

// Writes a generated benchmark grid with 25 scenario files and returns the data
// directory. Same data as `rtmapf gen --seed 1`.
std::string prepare_grid(const fs::path& root, const std::string& grid) {
  const fs::path dir = root / grid;
  fs::create_directories(dir / "scen-random");
  const auto map = make_benchmark_map(grid, 1);
  const int entries = std::min<int>(1000, static_cast<int>(largest_component(map).size()));
  write_file(benchmark_map_path(dir.string(), grid), serialize_map(map));
  for (int i = 1; i <= 25; ++i)
    write_file(benchmark_scen_path(dir.string(), grid, i),
               serialize_scen(make_random_scenario(map, grid + ".map", entries, 1000 + static_cast<std::uint64_t>(i))));
  return dir.string();
}

ExperimentSpec directional_spec(const std::string& data_dir, const std::string& grid, int agents,
                                const std::vector<std::string>& planners) {
  ExperimentSpec s;
  s.grid = grid;
  s.map_path = benchmark_map_path(data_dir, grid);
  for (int i = 1; i <= 25; ++i) s.scen_paths.push_back(benchmark_scen_path(data_dir, grid, i));
  s.sweep = SweepKind::Agents;
  s.sweep_values = {agents};
  s.fixed_window = 5;
  s.budget = 15L * agents;
  s.makespan_cap = 100;
  s.seed = 1;
  for (const auto& p : planners) s.planners.push_back(parse_planner(p));
  return s;
}

std::map<std::string, double> means(const std::vector<RunRecord>& records) {
  std::map<std::string, std::pair<double, int>> acc;
  for (const auto& r : records) {
    auto& a = acc[r.algorithm + "/" + r.policy];
    a.first += r.makespan;
    a.second += 1;
  }
  std::map<std::string, double> out;
  for (const auto& [k, v] : acc) out[k] = v.first / v.second;
  return out;
}

void directional(const fs::path& root) {
  const std::vector<std::string> lns2 = {"lns2:cpb", "lns2:shared"};

  const auto random_dir = prepare_grid(root, "random-32-32-20");
  const auto spec_random = directional_spec(random_dir, "random-32-32-20", 100, lns2);
  const auto random_runs = run_bench(spec_random, 1);
  const auto mr = means(random_runs);

  const auto empty_dir = prepare_grid(root, "empty-32-32");
  const auto spec_empty = directional_spec(empty_dir, "empty-32-32", 300, lns2);
  const auto empty_runs = run_bench(spec_empty, 1);
  const auto me = means(empty_runs);

  const double r_cpb = mr.at("lns2/cpb"), r_sh = mr.at("lns2/shared");
  const double e_cpb = me.at("lns2/cpb"), e_sh = me.at("lns2/shared");
  report(6, r_cpb < r_sh && e_cpb < e_sh, "CPB beats Shared for LNS2 (direction only)",
         fmt("random-32-32-20 x100: cpb %.2f vs shared %.2f", r_cpb, r_sh) + "; " +
             fmt("empty-32-32 x300: cpb %.2f vs shared %.2f", e_cpb, e_sh));

  const auto room_dir = prepare_grid(root, "room-32-32-4");
  const auto spec_room = directional_spec(room_dir, "room-32-32-4", 150, {"lns2+pibt:cpb", "pibt"});
  const auto mroom = means(run_bench(spec_room, 1));
  const double h = mroom.at("lns2+pibt/cpb"), p = mroom.at("pibt/none");
  report(7, h < p, "LNS2(CPB)+PIBT beats PIBT on room-32-32-4 (direction only)",
         fmt("150 agents: hybrid %.2f vs pibt %.2f", h, p));

  const bool same = write_results(run_bench(spec_random, 1)) == write_results(random_runs) &&
                    write_results(run_bench(spec_empty, 2)) == write_results(empty_runs);
  report(8, same, "rerunning criterion 6 gives byte-identical results CSV",
         std::to_string(random_runs.size() + empty_runs.size()) + " records compared");
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  const fs::path root = fs::temp_directory_path() / "rtmapf_acceptance";
  fs::remove_all(root);
  fs::create_directories(root);

  safety_and_budget();
  formulas();
  difficult_configuration();
  search_oracle();
  directional(root);

  fs::remove_all(root);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s: %d failed, %.1f s\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures, secs);
  return failures == 0 ? 0 : 1;
}
