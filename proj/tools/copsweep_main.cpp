#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "copsweep/bench.hpp"

using namespace copsweep;

namespace {

std::vector<Polar> read_coords_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open coords: " + path);
  return load_coords(in);
}

std::ofstream open_out(const std::filesystem::path& p) {
  if (!p.parent_path().empty())
    std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  return out;
}

EngineKind engine_from_name(const std::string& s) {
  if (s == "stt") return EngineKind::Stt;
  if (s == "pw") return EngineKind::Pw;
  throw std::invalid_argument("unknown engine: " + s);
}

// Flags shared by run-stt and run-pw. Either a config file drives a whole
// sweep, or --graph runs one file-family instance assembled from the flags.
struct RunFlags {
  std::string config, graph, coords, schedule;
  std::string strategy = "bfs-level";
  std::string f = "const";
  long long f_const = 1;
  double f_scale = 1.0;
  int cap = 16;
  std::string model = "teleport";
  std::string out_csv, out_json;
};

void add_run_flags(CLI::App* cmd, RunFlags& rf, bool with_strategy) {
  cmd->add_option("--config", rf.config, "experiment config (JSON)");
  cmd->add_option("--graph", rf.graph, "single graph file instead of a config");
  cmd->add_option("--coords", rf.coords, "coordinates for --graph");
  cmd->add_option("--schedule", rf.schedule,
                  "dump the schedule of a single-instance run (JSON lines)");
  cmd->add_option("--model", rf.model, "teleport|edge");
  cmd->add_option("--out-csv", rf.out_csv, "result table path");
  cmd->add_option("--out-json", rf.out_json, "result + trace path");
  if (with_strategy) {
    cmd->add_option("--strategy", rf.strategy,
                    "exact|tree-centroid|bfs-level|planar-cycle|hyperbolic-sector");
    cmd->add_option("--cap", rf.cap, "exact-search size cap");
    cmd->add_option("--f", rf.f, "budget family: const|sqrt|log");
    cmd->add_option("--f-const", rf.f_const, "constant budget value");
    cmd->add_option("--f-scale", rf.f_scale, "sqrt budget scale");
  }
}

void run_one_engine(EngineKind engine, const RunFlags& rf) {
  ExperimentConfig cfg;
  if (!rf.config.empty()) {
    if (!rf.graph.empty())
      throw std::invalid_argument("--config and --graph are exclusive");
    cfg = load_config(rf.config);
  } else {
    if (rf.graph.empty())
      throw std::invalid_argument("need --config or --graph");
    cfg.family = "file";
    cfg.graph_file = rf.graph;
    cfg.coords_file = rf.coords;
    cfg.strategy = rf.strategy;
    strategy_from_name(cfg.strategy);
    cfg.cap = rf.cap;
    cfg.budget = {rf.f, rf.f_const, rf.f_scale};
    make_budget(cfg.budget);
    cfg.model = rf.model;
    if (cfg.model != "teleport" && cfg.model != "edge")
      throw std::invalid_argument("unknown model: " + cfg.model);
    cfg.out_csv = rf.out_csv;
    cfg.out_json = rf.out_json;
  }

  std::vector<RunResult> traces;
  std::vector<ResultRow> rows = cmd_run(cfg, engine, &traces);
  if (!rf.schedule.empty()) {
    if (traces.size() != 1)
      throw std::invalid_argument("--schedule needs a single-instance run");
    std::ofstream out = open_out(resolve_out(rf.schedule));
    write_schedule_jsonl(traces[0], out);
  }
  if (cfg.out_csv.empty()) write_rows_csv(rows, std::cout);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"balanced-separator sweeping workbench"};
  app.require_subcommand(1);
  int rc = 0;

  auto* gen = app.add_subcommand("generate", "write a benchmark graph file");
  std::string gen_family, gen_out, gen_coords;
  long long gen_size = 0;
  std::uint64_t gen_seed = 0;
  double gen_alpha = 0.75, gen_cavg = 1.0;
  gen->add_option("--family", gen_family, "path|grid|tree|hyperbolic")
      ->required();
  gen->add_option("--size", gen_size, "vertex count (side length for grids)")
      ->required();
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--alpha", gen_alpha, "hyperbolic power-law parameter");
  gen->add_option("--c-avg", gen_cavg, "hyperbolic average-degree constant");
  gen->add_option("--out", gen_out, "graph file to write")->required();
  gen->add_option("--coords", gen_coords,
                  "also write coordinates (hyperbolic only)");
  gen->callback([&] {
    Graph g(0, {});
    std::vector<Polar> pts;
    if (gen_family == "path") {
      g = gen_path(int(gen_size));
    } else if (gen_family == "grid") {
      g = gen_grid(int(gen_size));
    } else if (gen_family == "tree") {
      g = gen_random_tree(int(gen_size), gen_seed);
    } else if (gen_family == "hyperbolic") {
      // experiments run on the giant component, so that is what we emit
      GeometricGraph gg = largest_component(
          gen_hyperbolic({gen_size, gen_alpha, gen_cavg, gen_seed}));
      g = std::move(gg.graph);
      pts = std::move(gg.coords);
    } else {
      throw std::invalid_argument("unknown family: " + gen_family);
    }
    if (!gen_coords.empty() && gen_family != "hyperbolic")
      throw std::invalid_argument("only hyperbolic graphs carry coordinates");
    {
      std::ofstream out = open_out(gen_out);
      save_graph(g, out);
    }
    if (!gen_coords.empty()) {
      std::ofstream out = open_out(gen_coords);
      save_coords(pts, out);
    }
    std::cerr << "wrote " << gen_out << " (n=" << g.n() << ", m=" << g.m()
              << ")\n";
  });

  auto* sep = app.add_subcommand("separate",
                                 "split a graph with one balanced separator");
  std::string sep_graph, sep_coords, sep_strategy = "bfs-level";
  int sep_cap = 16;
  sep->add_option("--graph", sep_graph, "graph file")->required();
  sep->add_option("--coords", sep_coords, "coordinates file");
  sep->add_option("--strategy", sep_strategy, "separator strategy");
  sep->add_option("--cap", sep_cap, "exact-search size cap");
  sep->callback([&] {
    Graph g = load_graph_file(sep_graph);
    SeparatorStrategy strat;
    strat.kind = strategy_from_name(sep_strategy);
    strat.cap = sep_cap;
    if (!sep_coords.empty()) strat.coords = read_coords_file(sep_coords);
    SeparationResult r =
        separate_region(g, VertexSet::full(g.n()), make_strategy(strat));
    nlohmann::json j;
    j["s"] = r.s.items();
    j["a"] = r.a.items();
    j["b"] = r.b.items();
    j["valid"] = validate_separation(g, r, g.n()).valid();
    std::cout << j.dump(2) << '\n';
  });

  auto* tre = app.add_subcommand("tree", "build and print a separation tree");
  std::string tr_graph, tr_coords, tr_strategy = "bfs-level", tr_f = "const";
  long long tr_fc = 1;
  double tr_fs = 1.0;
  int tr_cap = 16;
  tre->add_option("--graph", tr_graph, "graph file")->required();
  tre->add_option("--coords", tr_coords, "coordinates file");
  tre->add_option("--strategy", tr_strategy, "separator strategy");
  tre->add_option("--cap", tr_cap, "exact-search size cap");
  tre->add_option("--f", tr_f, "budget family: const|sqrt|log");
  tre->add_option("--f-const", tr_fc, "constant budget value");
  tre->add_option("--f-scale", tr_fs, "sqrt budget scale");
  tre->callback([&] {
    Graph g = load_graph_file(tr_graph);
    SeparatorStrategy strat;
    strat.kind = strategy_from_name(tr_strategy);
    strat.cap = tr_cap;
    if (!tr_coords.empty()) strat.coords = read_coords_file(tr_coords);
    SizeFn f = make_budget({tr_f, tr_fc, tr_fs});
    SeparationTree t = build_separation_tree(g, make_strategy(strat),
                                             checked_budget(f, g.n()));
    nlohmann::json j;
    j["nodes"] = t.order.size();
    j["height"] = t.height();
    j["threshold"] = t.threshold;
    j["order"] = t.order;
    nlohmann::json seps = nlohmann::json::object();
    nlohmann::json leaves = nlohmann::json::object();
    for (auto& key : t.order) {
      if (t.is_leaf(key))
        leaves[key] = t.nodes.at(key).items();
      else
        seps[key] = t.separators.at(key).items();
    }
    j["separators"] = std::move(seps);
    j["leaves"] = std::move(leaves);
    std::cout << j.dump(2) << '\n';
  });

  RunFlags stt_flags;
  auto* rst = app.add_subcommand("run-stt",
                                 "sweep with the separation-tree engine");
  add_run_flags(rst, stt_flags, true);
  rst->callback([&] { run_one_engine(EngineKind::Stt, stt_flags); });

  RunFlags pw_flags;
  auto* rpw = app.add_subcommand("run-pw",
                                 "sweep with the path-decomposition engine");
  add_run_flags(rpw, pw_flags, false);
  rpw->callback([&] { run_one_engine(EngineKind::Pw, pw_flags); });

  auto* ver = app.add_subcommand("verify",
                                 "replay a schedule against the territory oracle");
  std::string v_graph, v_schedule;
  ver->add_option("--graph", v_graph, "graph file")->required();
  ver->add_option("--schedule", v_schedule, "schedule file (JSON lines)")
      ->required();
  ver->callback([&] {
    Graph g = load_graph_file(v_graph);
    std::ifstream in(v_schedule);
    if (!in) throw std::runtime_error("cannot open " + v_schedule);
    RunResult run = read_schedule_jsonl(in);
    VerificationReport rep = verify_schedule(g, run.schedule);
    nlohmann::json j;
    j["captured"] = rep.captured;
    if (rep.capture_round) j["capture_round"] = *rep.capture_round;
    j["monotone"] = rep.monotone;
    if (rep.invariant_I) j["invariant_I"] = *rep.invariant_I;
    j["territory_trace"] = rep.territory_trace;
    std::cout << j.dump(2) << '\n';
    if (!rep.captured) rc = 1;
  });

  auto* cmp = app.add_subcommand("compare", "run two engines on one instance set");
  std::string ca, cb, ea = "stt", eb = "pw", cmp_csv, cmp_json;
  cmp->add_option("--config-a", ca, "config for side A")->required();
  cmp->add_option("--config-b", cb, "config for side B")->required();
  cmp->add_option("--engine-a", ea, "stt|pw");
  cmp->add_option("--engine-b", eb, "stt|pw");
  cmp->add_option("--out-csv", cmp_csv, "joined table path");
  cmp->add_option("--out-json", cmp_json, "joined table + exponents path");
  cmp->callback([&] {
    CompareTable t = cmd_compare(load_config(ca), engine_from_name(ea),
                                 load_config(cb), engine_from_name(eb),
                                 cmp_csv, cmp_json);
    nlohmann::json j;
    j["rows"] = t.rows.size();
    j["exponent_a"] = t.exponent_a;
    j["exponent_b"] = t.exponent_b;
    j["exponent_ratio"] = t.exponent_ratio;
    std::cout << j.dump(2) << '\n';
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return rc;
}
