// Acceptance gate: one line per criterion, nonzero exit when any fails.
// Criteria 2, 4, 5, 6 re-examine the instance sweep performed by
// criterion 1, so the sweep results are kept in a shared table.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "copsweep/bench.hpp"
#include "support.hpp"

using namespace copsweep;
using copsweep::testing::random_connected_graph;
using copsweep::testing::robber_escapes;

#define REQUIRE(cond)                                                  \
  do {                                                                 \
    if (!(cond)) {                                                     \
      std::printf("[FAIL] %s:%d: %s\n", __FILE__, __LINE__, #cond);    \
      return false;                                                    \
    }                                                                  \
  } while (0)

namespace {

struct RunSummary {
  std::string family;
  long long n = 0;
  bool stt = false, teleport = false, tree_f1 = false;
  bool captured = false;
  bool snapshot_invariant = false;
  bool strict_decrease = false;
  long long cops = 0, cop_bound = 0, peak = -1, iterations = -1;
  long long fn = 0;
  double node_bound = -1;
};

struct SweepData {
  std::vector<RunSummary> runs;
  long long instances = 0;
  double seconds = 0;
};

SweepData g_sweep;

SizeFn budget_one() {
  return [](long long) { return 1LL; };
}

// No balanced 2/3-separator can exceed this, so any valid strategy runs
// within it on any connected graph.
SizeFn budget_two_thirds() {
  return [](long long x) { return (2 * x + 2) / 3; };
}

SizeFn budget_planar() { return make_budget({"sqrt", 1, 2 * std::sqrt(2.0)}); }

SeparatorFn strategy_of(StrategyKind kind) {
  SeparatorStrategy s;
  s.kind = kind;
  return make_strategy(s);
}

void sweep_instance(const std::string& family, const Graph& g,
                    const SeparatorFn& fn, const SizeFn& f,
                    const PathDecomposition& d, bool tree_f1,
                    std::vector<RunSummary>& out) {
  long long n = g.n();
  long long cop_bound = cop_bound_C_f(f, n);
  long long fn_val = checked_budget(f, n);
  RunResult runs[4] = {stt_schedule_teleport(g, fn, f),
                       stt_schedule_edge(g, fn, f),
                       pw_schedule(g, d, TravelModel::Teleport),
                       pw_schedule(g, d, TravelModel::Edge)};
  for (int i = 0; i < 4; ++i) {
    VerificationReport rep = verify_schedule(g, runs[i].schedule);
    RunSummary s;
    s.family = family;
    s.n = n;
    s.stt = i < 2;
    s.teleport = i % 2 == 0;
    s.tree_f1 = tree_f1 && s.stt;
    s.captured = rep.captured;
    s.snapshot_invariant = rep.invariant_I.has_value() && *rep.invariant_I;
    s.strict_decrease = true;
    for (std::size_t j = 1; j < rep.territory_trace.size(); ++j)
      if (rep.territory_trace[j] >= rep.territory_trace[j - 1])
        s.strict_decrease = false;
    s.cops = max_concurrent_cops(runs[i]);
    s.cop_bound = cop_bound;
    s.fn = fn_val;
    if (s.stt) {
      s.peak = runs[i].stats.peak_stack_mass;
      s.iterations = runs[i].stats.iterations;
      s.node_bound = 6.0 * double(n) / double(fn_val) - 1;
    }
    out.push_back(std::move(s));
  }
}

// Criterion 1: 500 instances across all families, both engines, both
// travel models, every schedule certified captured, under five minutes.
bool criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<RunSummary> runs;
  long long instances = 0;

  SizeFn one = budget_one();
  SeparatorFn centroid = strategy_of(StrategyKind::TreeCentroid);
  for (int n = 2; n <= 200; n += 2) {
    Graph g = gen_path(n);
    sweep_instance("path", g, centroid, one,
                   normalize_decomposition(tree_path_decomposition(g)), true,
                   runs);
    ++instances;
  }
  for (long long n : {50, 125, 200})
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      Graph g = gen_random_tree(int(n), seed);
      sweep_instance("tree", g, centroid, one,
                     normalize_decomposition(tree_path_decomposition(g)), true,
                     runs);
      ++instances;
    }

  SizeFn planar_f = budget_planar();
  SeparatorFn planar = strategy_of(StrategyKind::PlanarCycle);
  for (int k = 2; k <= 16; ++k) {
    sweep_instance("grid", gen_grid(k), planar, planar_f,
                   grid_path_decomposition(k), false, runs);
    ++instances;
  }

  SizeFn loose = budget_two_thirds();
  for (double alpha : {0.6, 0.75})
    for (long long n : {500, 1000, 2000})
      for (std::uint64_t seed = 0; seed < 14; ++seed) {
        GeometricGraph gg =
            largest_component(gen_hyperbolic({n, alpha, 1.0, seed}));
        SeparatorStrategy st;
        st.kind = StrategyKind::HyperbolicSector;
        st.coords = gg.coords;
        sweep_instance(
            "hyperbolic", gg.graph, make_strategy(st), loose,
            normalize_decomposition(ordered_path_decomposition(gg.graph)),
            false, runs);
        ++instances;
      }

  {
    Graph g = gen_path(1);
    sweep_instance("path", g, centroid, one,
                   normalize_decomposition(tree_path_decomposition(g)), true,
                   runs);
    ++instances;
  }

  g_sweep.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  g_sweep.instances = instances;
  g_sweep.runs = std::move(runs);

  std::printf("  sweep: %lld instances, %zu runs, %.1fs\n", instances,
              g_sweep.runs.size(), g_sweep.seconds);
  REQUIRE(instances == 500);
  REQUIRE(g_sweep.runs.size() == 2000);
  for (auto& s : g_sweep.runs) REQUIRE(s.captured);
  REQUIRE(g_sweep.seconds < 300.0);
  return true;
}

// Criterion 2: on every teleport sweep run, the recorded stack snapshots
// reproduce the territory exactly and the territory strictly shrinks.
bool criterion2() {
  REQUIRE(!g_sweep.runs.empty());
  long long checked = 0;
  for (auto& s : g_sweep.runs) {
    if (!s.stt || !s.teleport) continue;
    REQUIRE(s.snapshot_invariant);
    REQUIRE(s.strict_decrease);
    ++checked;
  }
  REQUIRE(checked == 500);
  return true;
}

// Criterion 3: the territory oracle agrees with an explicit game-tree
// search over robber trajectories on both engines' schedules, including
// every truncation, across 5000 random connected graphs.
bool criterion3() {
  SizeFn loose = budget_two_thirds();
  SeparatorFn bfs = strategy_of(StrategyKind::BfsLevel);
  long long graphs = 0, escapes = 0, captures = 0;
  for (std::uint64_t seed = 0; graphs < 5000; ++seed) {
    int n = 2 + int(seed % 6);
    Graph g = random_connected_graph(n, seed, int(seed % 3));
    RunResult stt = stt_schedule_teleport(g, bfs, loose);
    RunResult pw = pw_schedule(
        g, normalize_decomposition(ordered_path_decomposition(g)),
        TravelModel::Teleport);
    for (const Schedule* sched : {&stt.schedule, &pw.schedule}) {
      Schedule prefix;
      for (std::size_t len = 1; len <= sched->rounds.size(); ++len) {
        prefix.rounds.assign(sched->rounds.begin(),
                             sched->rounds.begin() + len);
        bool captured = verify_schedule(g, prefix).captured;
        bool escaped = robber_escapes(g, prefix);
        REQUIRE(escaped == !captured);
        (escaped ? escapes : captures)++;
      }
    }
    ++graphs;
  }
  REQUIRE(graphs == 5000);
  REQUIRE(escapes > 1000);
  REQUIRE(captures > 1000);
  return true;
}

// Criterion 4: the node-count majorant phi stays below 6x/f(n) - 1 for
// every budget family and every f(n) <= x <= n <= 2000, and every sweep
// run's separation tree met the same bound.
bool criterion4() {
  struct Fam {
    std::string label;
    SizeFn f;
  };
  std::vector<Fam> fams;
  for (long long c : {1, 2, 3, 4})
    fams.push_back({"const:" + std::to_string(c),
                    [c](long long) { return c; }});
  fams.push_back({"ceil-sqrt", [](long long x) {
                    return (long long)std::ceil(std::sqrt(double(x)));
                  }});
  fams.push_back({"ceil-log2", [](long long x) {
                    return (long long)std::ceil(std::log2(double(x) + 1));
                  }});

  for (auto& fam : fams) {
    // phi depends on n only through the clearing threshold f(n), so one
    // table per distinct threshold covers every n sharing it.
    std::map<long long, long long> widest;
    for (long long n = 1; n <= 2000; ++n) {
      long long v = fam.f(n);
      widest[v] = std::max(widest[v], n);
    }
    for (auto [v, nr] : widest) {
      std::vector<long long> t = phi_table(fam.f, nr, nr);
      for (long long x = v; x <= nr; ++x)
        REQUIRE(double(t[x]) <= 6.0 * double(x) / double(v) - 1.0 + 1e-9);
    }
  }

  REQUIRE(!g_sweep.runs.empty());
  for (auto& s : g_sweep.runs)
    if (s.stt && s.n >= s.fn)
      REQUIRE(double(s.iterations) <= s.node_bound + 1e-9);
  return true;
}

// Criterion 5: cop usage never exceeds the closed-form budget C_f(n); on
// unit-budget trees it stays within ell(n) + 2.
bool criterion5() {
  REQUIRE(!g_sweep.runs.empty());
  for (auto& s : g_sweep.runs) {
    if (s.cops > s.cop_bound || (s.tree_f1 && s.cops > ell(s.n) + 2))
      std::printf("  cop budget breach: family=%s n=%lld %s %s cops=%lld "
                  "C_f=%lld f(n)=%lld ell+2=%lld\n",
                  s.family.c_str(), s.n, s.stt ? "stt" : "pw",
                  s.teleport ? "teleport" : "edge", s.cops, s.cop_bound, s.fn,
                  ell(s.n) + 2);
    REQUIRE(s.cops <= s.cop_bound);
    if (s.tree_f1) REQUIRE(s.cops <= ell(s.n) + 2);
  }
  return true;
}

// Criterion 6: peak combined stack mass stays within 3n on every sweep run.
bool criterion6() {
  REQUIRE(!g_sweep.runs.empty());
  for (auto& s : g_sweep.runs) {
    if (!s.stt) continue;
    REQUIRE(s.peak >= 1);
    REQUIRE(s.peak <= 3 * s.n);
  }
  return true;
}

// Criterion 7: on grids in the edge model, the fitted capture-round growth
// exponent of the separation sweep undercuts the bag walk by 0.3.
bool criterion7() {
  SizeFn f = budget_planar();
  SeparatorFn planar = strategy_of(StrategyKind::PlanarCycle);
  std::vector<std::pair<double, double>> stt_pts, pw_pts;
  for (int k : {4, 8, 16, 32}) {
    Graph g = gen_grid(k);
    double n = double(k) * k;
    RunResult stt = stt_schedule_edge(g, planar, f);
    VerificationReport rs = verify_schedule(g, stt.schedule);
    REQUIRE(rs.captured);
    stt_pts.push_back({n, double(*rs.capture_round)});
    RunResult pw = pw_schedule(g, grid_path_decomposition(k), TravelModel::Edge);
    VerificationReport rp = verify_schedule(g, pw.schedule);
    REQUIRE(rp.captured);
    pw_pts.push_back({n, double(*rp.capture_round)});
  }
  double stt_exp = fit_loglog_slope(stt_pts);
  double pw_exp = fit_loglog_slope(pw_pts);
  std::printf("  grid edge capture: stt rounds %g..%g exp=%.3f, pw rounds %g..%g exp=%.3f\n",
              stt_pts.front().second, stt_pts.back().second, stt_exp,
              pw_pts.front().second, pw_pts.back().second, pw_exp);
  REQUIRE(stt_exp <= pw_exp - 0.3);
  return true;
}

// Criterion 8: the cycle separator honors |S| <= 2*sqrt(2)*sqrt(n) and the
// 2/3 balance on every square grid up to k = 12.
bool criterion8() {
  for (int k = 3; k <= 12; ++k) {
    Graph g = gen_grid(k);
    long long n = g.n();
    SeparationResult r = planar_cycle_separator(g);
    REQUIRE((long long)r.s.size() * (long long)r.s.size() <= 8 * n);
    REQUIRE(3 * (long long)r.a.size() <= 2 * n);
    REQUIRE(3 * (long long)r.b.size() <= 2 * n);
    long long s_bound = 0;
    while ((s_bound + 1) * (s_bound + 1) <= 8 * n) ++s_bound;
    REQUIRE(validate_separation(g, r, s_bound).valid());
  }
  return true;
}

// Criterion 9: hyperbolic sweeps are always captured; the growth of the
// median root-separator size is reported against the 1 - alpha target
// (statistical, soft outside the band).
bool criterion9() {
  SizeFn loose = budget_two_thirds();
  for (double alpha : {0.6, 0.75}) {
    std::vector<std::pair<double, double>> pts;
    for (long long n : {500, 1000, 2000, 4000}) {
      std::vector<double> sep_sizes, giant_sizes;
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        GeometricGraph gg =
            largest_component(gen_hyperbolic({n, alpha, 1.0, seed}));
        SeparatorStrategy st;
        st.kind = StrategyKind::HyperbolicSector;
        st.coords = gg.coords;
        SeparatorFn fn = make_strategy(st);
        SeparationResult root =
            separate_region(gg.graph, VertexSet::full(gg.graph.n()), fn);
        sep_sizes.push_back(double(root.s.size()));
        giant_sizes.push_back(double(gg.graph.n()));
        RunResult run = stt_schedule_teleport(gg.graph, fn, loose);
        REQUIRE(verify_schedule(gg.graph, run.schedule).captured);
      }
      pts.push_back({median(giant_sizes), median(sep_sizes)});
    }
    double slope = fit_loglog_slope(pts);
    double target = 1 - alpha;
    bool in_band = std::abs(slope - target) <= 0.2;
    std::printf("  separator growth alpha=%.2f: slope=%.3f target=%.2f+-0.2%s\n",
                alpha, slope, target,
                in_band ? "" : " (outside band; soft report)");
  }
  return true;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Criterion 10: identical configs rerun into fresh output directories give
// byte-identical artifacts.
bool criterion10() {
  namespace fs = std::filesystem;
  ExperimentConfig cfg;
  cfg.family = "tree";
  cfg.sizes = {30, 60};
  cfg.seeds = {1, 2};
  cfg.strategy = "tree-centroid";
  cfg.out_csv = "rows.csv";
  cfg.out_json = "rows.json";
  ExperimentConfig bare = cfg;
  bare.out_csv.clear();
  bare.out_json.clear();

  fs::path base = fs::temp_directory_path() / "copsweep-acceptance";
  fs::remove_all(base);
  std::string csv[2], json[2], cmp_csv[2], cmp_json[2];
  for (int pass = 0; pass < 2; ++pass) {
    fs::path dir = base / ("run" + std::to_string(pass));
    fs::create_directories(dir);
    setenv("COPSWEEP_OUT", dir.c_str(), 1);
    cmd_run(cfg, EngineKind::Stt, nullptr, true);
    cmd_compare(bare, EngineKind::Stt, bare, EngineKind::Pw, "cmp.csv",
                "cmp.json");
    csv[pass] = slurp(dir / "rows.csv");
    json[pass] = slurp(dir / "rows.json");
    cmp_csv[pass] = slurp(dir / "cmp.csv");
    cmp_json[pass] = slurp(dir / "cmp.json");
  }
  unsetenv("COPSWEEP_OUT");
  fs::remove_all(base);

  REQUIRE(!csv[0].empty());
  REQUIRE(!json[0].empty());
  REQUIRE(!cmp_csv[0].empty());
  REQUIRE(!cmp_json[0].empty());
  REQUIRE(csv[0] == csv[1]);
  REQUIRE(json[0] == json[1]);
  REQUIRE(cmp_csv[0] == cmp_csv[1]);
  REQUIRE(cmp_json[0] == cmp_json[1]);
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    bool (*fn)();
  };
  const Criterion criteria[] = {
      {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4},
      {5, criterion5}, {6, criterion6}, {7, criterion7}, {8, criterion8},
      {9, criterion9}, {10, criterion10},
  };
  bool all = true;
  for (auto& c : criteria) {
    bool ok = c.fn();
    std::printf("CRITERION %d %s\n", c.id, ok ? "PASS" : "FAIL");
    std::fflush(stdout);
    all = all && ok;
  }
  return all ? 0 : 1;
}
