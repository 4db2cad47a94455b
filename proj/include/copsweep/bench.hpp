#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "copsweep/generators.hpp"
#include "copsweep/oracle.hpp"
#include "copsweep/pathdecomp.hpp"
#include "copsweep/septree.hpp"
#include "copsweep/strategies.hpp"
#include "copsweep/stt.hpp"

namespace copsweep {

// Separator budget family: a constant, ceil(scale*sqrt(x)), or
// ceil(log2(x+1)). The sqrt scale exists because strategies promise
// different constants (the cycle separator needs 2*sqrt(2)*sqrt(x)).
struct BudgetChoice {
  std::string kind = "const";
  long long c = 1;
  double scale = 1.0;
};

inline SizeFn make_budget(const BudgetChoice& b) {
  if (b.kind == "const") {
    if (b.c < 1) throw std::invalid_argument("constant budget must be >= 1");
    long long c = b.c;
    return [c](long long) { return c; };
  }
  if (b.kind == "sqrt") {
    double scale = b.scale;
    if (!(scale > 0)) throw std::invalid_argument("sqrt budget scale must be positive");
    return [scale](long long x) {
      return std::max<long long>(
          1, (long long)std::ceil(scale * std::sqrt(double(x))));
    };
  }
  if (b.kind == "log") {
    return [](long long x) {
      return std::max<long long>(1,
                                 (long long)std::ceil(std::log2(double(x) + 1)));
    };
  }
  throw std::invalid_argument("unknown budget kind: " + b.kind);
}

inline std::string budget_label(const BudgetChoice& b) {
  std::ostringstream ss;
  if (b.kind == "const") {
    ss << "const:" << b.c;
  } else if (b.kind == "sqrt") {
    ss << "sqrt:" << b.scale;
  } else {
    ss << b.kind;
  }
  return ss.str();
}

struct ExperimentConfig {
  std::string family;            // path | grid | tree | hyperbolic | file
  std::vector<long long> sizes;  // n for paths/trees/hyperbolic, k for grids
  std::string strategy = "bfs-level";
  int cap = 16;
  BudgetChoice budget;
  std::string model = "teleport";
  std::vector<std::uint64_t> seeds = {0};
  double alpha_pl = 0.75;
  double c_avg = 1.0;
  std::string graph_file;   // family == "file"
  std::string coords_file;  // optional coordinates for file inputs
  std::string out_csv;      // empty = no artifact
  std::string out_json;
};

inline ExperimentConfig parse_config(const nlohmann::json& j) {
  static const std::vector<std::string> known = {
      "family",   "sizes",      "strategy",    "cap",
      "f",        "f_const",    "f_scale",     "model",
      "seeds",    "alpha_pl",   "c_avg",       "graph_file",
      "coords_file", "out_csv", "out_json"};
  for (auto& [key, value] : j.items()) {
    (void)value;
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw std::invalid_argument("unknown config key: " + key);
  }
  ExperimentConfig cfg;
  cfg.family = j.at("family").get<std::string>();
  if (cfg.family != "path" && cfg.family != "grid" && cfg.family != "tree" &&
      cfg.family != "hyperbolic" && cfg.family != "file")
    throw std::invalid_argument("unknown family: " + cfg.family);
  if (j.contains("sizes")) cfg.sizes = j["sizes"].get<std::vector<long long>>();
  if (cfg.family != "file" && cfg.sizes.empty())
    throw std::invalid_argument("config needs a size sweep");
  if (j.contains("strategy")) cfg.strategy = j["strategy"].get<std::string>();
  strategy_from_name(cfg.strategy);
  if (j.contains("cap")) cfg.cap = j["cap"].get<int>();
  if (j.contains("f")) cfg.budget.kind = j["f"].get<std::string>();
  if (j.contains("f_const")) cfg.budget.c = j["f_const"].get<long long>();
  if (j.contains("f_scale")) cfg.budget.scale = j["f_scale"].get<double>();
  make_budget(cfg.budget);
  if (j.contains("model")) cfg.model = j["model"].get<std::string>();
  if (cfg.model != "teleport" && cfg.model != "edge")
    throw std::invalid_argument("unknown model: " + cfg.model);
  if (j.contains("seeds"))
    cfg.seeds = j["seeds"].get<std::vector<std::uint64_t>>();
  if (cfg.seeds.empty()) throw std::invalid_argument("config needs seeds");
  if (j.contains("alpha_pl")) cfg.alpha_pl = j["alpha_pl"].get<double>();
  if (j.contains("c_avg")) cfg.c_avg = j["c_avg"].get<double>();
  if (j.contains("graph_file"))
    cfg.graph_file = j["graph_file"].get<std::string>();
  if (cfg.family == "file" && cfg.graph_file.empty())
    throw std::invalid_argument("file family needs graph_file");
  if (j.contains("coords_file"))
    cfg.coords_file = j["coords_file"].get<std::string>();
  if (j.contains("out_csv")) cfg.out_csv = j["out_csv"].get<std::string>();
  if (j.contains("out_json")) cfg.out_json = j["out_json"].get<std::string>();
  return cfg;
}

inline ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config: " + path);
  nlohmann::json j;
  in >> j;
  return parse_config(j);
}

// Output directory for all artifacts; relative paths in configs resolve
// against it.
inline std::filesystem::path output_dir() {
  if (const char* env = std::getenv("COPSWEEP_OUT")) return env;
  return ".";
}

inline std::filesystem::path resolve_out(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_absolute()) return p;
  return output_dir() / p;
}

enum class EngineKind { Stt, Pw };

inline std::string engine_name(EngineKind e) {
  return e == EngineKind::Stt ? "stt" : "pw";
}

// One benchmark row. Bound columns are -1 on rows where the separation
// machinery is not in play (the pathwidth engine); they serialize as empty
// cells. Wall time is kept out of the artifacts so reruns stay
// byte-identical; cmd_run reports it on stderr instead.
struct ResultRow {
  std::string family;
  long long param = 0;
  std::uint64_t seed = 0;
  std::string engine, strategy, budget, model;
  long long n = 0, d_g = 0, cops_used = 0, capture_rounds = 0;
  long long c_f_bound = -1, tree_nodes = -1, peak_stack_mass = -1;
  double capture_bound = -1, node_bound = -1;
  double wall_time = 0;
};

static const char* kCsvHeader =
    "family,param,seed,engine,strategy,f,model,n,D_G,cops_used,C_f_bound,"
    "capture_rounds,capture_bound,tree_nodes,node_bound,peak_stack_mass";

inline std::string csv_cell(long long v) { return v < 0 ? "" : std::to_string(v); }
inline std::string csv_cell(double v) {
  if (v < 0) return "";
  std::ostringstream ss;
  ss << v;
  return ss.str();
}

inline void write_rows_csv(const std::vector<ResultRow>& rows,
                           std::ostream& out) {
  out << kCsvHeader << '\n';
  for (auto& r : rows) {
    out << r.family << ',' << r.param << ',' << r.seed << ',' << r.engine
        << ',' << r.strategy << ',' << r.budget << ',' << r.model << ','
        << r.n << ',' << r.d_g << ',' << r.cops_used << ','
        << csv_cell(r.c_f_bound) << ',' << r.capture_rounds << ','
        << csv_cell(r.capture_bound) << ',' << csv_cell(r.tree_nodes) << ','
        << csv_cell(r.node_bound) << ',' << csv_cell(r.peak_stack_mass)
        << '\n';
  }
}

inline nlohmann::json schedule_to_json(const RunResult& run) {
  nlohmann::json rounds = nlohmann::json::array();
  for (auto& r : run.schedule.rounds) {
    nlohmann::json jr;
    jr["round"] = r.round;
    jr["occupied"] = r.occupied.items();
    jr["event"] = event_name(r.event);
    jr["index"] = r.index;
    jr["iteration"] = r.iteration;
    jr["final"] = r.phase_final;
    rounds.push_back(std::move(jr));
  }
  return rounds;
}

inline nlohmann::json row_to_json(const ResultRow& r, const RunResult& run) {
  nlohmann::json j;
  j["family"] = r.family;
  j["param"] = r.param;
  j["seed"] = r.seed;
  j["engine"] = r.engine;
  j["strategy"] = r.strategy;
  j["f"] = r.budget;
  j["model"] = r.model;
  j["n"] = r.n;
  j["D_G"] = r.d_g;
  j["cops_used"] = r.cops_used;
  j["capture_rounds"] = r.capture_rounds;
  if (r.c_f_bound >= 0) j["C_f_bound"] = r.c_f_bound;
  if (r.capture_bound >= 0) j["capture_bound"] = r.capture_bound;
  if (r.tree_nodes >= 0) j["tree_nodes"] = r.tree_nodes;
  if (r.node_bound >= 0) j["node_bound"] = r.node_bound;
  if (r.peak_stack_mass >= 0) j["peak_stack_mass"] = r.peak_stack_mass;
  j["schedule"] = schedule_to_json(run);
  return j;
}

// One prepared benchmark instance: the graph, its coordinates when the
// family has any, and the display parameter.
struct BenchInstance {
  Graph graph;
  std::vector<Polar> coords;
  long long param = 0;
  std::uint64_t seed = 0;
};

inline BenchInstance build_instance(const ExperimentConfig& cfg,
                                    long long size, std::uint64_t seed) {
  BenchInstance inst;
  inst.param = size;
  inst.seed = seed;
  if (cfg.family == "path") {
    inst.graph = gen_path(int(size));
  } else if (cfg.family == "grid") {
    inst.graph = gen_grid(int(size));
  } else if (cfg.family == "tree") {
    inst.graph = gen_random_tree(int(size), seed);
  } else if (cfg.family == "hyperbolic") {
    HyperbolicParams hp;
    hp.n = size;
    hp.alpha_pl = cfg.alpha_pl;
    hp.c_avg = cfg.c_avg;
    hp.seed = seed;
    GeometricGraph gg = largest_component(gen_hyperbolic(hp));
    inst.graph = std::move(gg.graph);
    inst.coords = std::move(gg.coords);
  } else if (cfg.family == "file") {
    inst.graph = load_graph_file(cfg.graph_file);
    inst.param = inst.graph.n();
    if (!cfg.coords_file.empty()) {
      std::ifstream in(cfg.coords_file);
      if (!in) throw std::runtime_error("cannot open coords: " + cfg.coords_file);
      inst.coords = load_coords(in);
    }
  } else {
    throw std::invalid_argument("unknown family: " + cfg.family);
  }
  return inst;
}

inline PathDecomposition decomposition_for(const ExperimentConfig& cfg,
                                           const BenchInstance& inst) {
  PathDecomposition raw;
  if (cfg.family == "grid") {
    raw = grid_path_decomposition(int(inst.param));
  } else if (cfg.family == "path" || cfg.family == "tree") {
    raw = tree_path_decomposition(inst.graph);
  } else {
    raw = ordered_path_decomposition(inst.graph);
  }
  return normalize_decomposition(raw);
}

inline RunResult run_engine(const ExperimentConfig& cfg, EngineKind engine,
                            const BenchInstance& inst) {
  if (engine == EngineKind::Pw) {
    PathDecomposition d = decomposition_for(cfg, inst);
    TravelModel model =
        cfg.model == "edge" ? TravelModel::Edge : TravelModel::Teleport;
    return pw_schedule(inst.graph, d, model);
  }
  SeparatorStrategy strat;
  strat.kind = strategy_from_name(cfg.strategy);
  strat.cap = cfg.cap;
  strat.coords = inst.coords;
  SeparatorFn fn = make_strategy(strat);
  SizeFn f = make_budget(cfg.budget);
  if (cfg.model == "edge") return stt_schedule_edge(inst.graph, fn, f);
  return stt_schedule_teleport(inst.graph, fn, f);
}

// Runs every (size, seed) instance of the config through one engine,
// verifies each schedule with the territory oracle, and assembles the
// result table. A schedule the oracle rejects is dumped for replay and
// aborts the run.
inline std::vector<ResultRow> cmd_run(const ExperimentConfig& cfg,
                                      EngineKind engine,
                                      std::vector<RunResult>* traces = nullptr,
                                      bool quiet = false) {
  std::vector<ResultRow> rows;
  std::vector<RunResult> runs;
  for (long long size : cfg.sizes.empty() ? std::vector<long long>{0}
                                          : cfg.sizes) {
    for (std::uint64_t seed : cfg.seeds) {
      auto t_start = std::chrono::steady_clock::now();
      BenchInstance inst = build_instance(cfg, size, seed);
      RunResult run = run_engine(cfg, engine, inst);
      VerificationReport rep = verify_schedule(inst.graph, run.schedule);
      if (!rep.captured) {
        std::filesystem::path dump =
            resolve_out("failed-" + cfg.family + "-" + std::to_string(inst.param) +
                        "-" + std::to_string(seed) + ".jsonl");
        std::filesystem::create_directories(dump.parent_path().empty()
                                                ? "."
                                                : dump.parent_path());
        std::ofstream out(dump);
        write_schedule_jsonl(run, out);
        throw std::runtime_error("schedule failed verification; dumped to " +
                                 dump.string());
      }

      ResultRow row;
      row.family = cfg.family;
      row.param = inst.param;
      row.seed = seed;
      row.engine = engine_name(engine);
      row.strategy = engine == EngineKind::Stt ? cfg.strategy : "";
      row.budget = engine == EngineKind::Stt ? budget_label(cfg.budget) : "";
      row.model = cfg.model;
      row.n = inst.graph.n();
      row.d_g = diameter(inst.graph);
      row.cops_used = max_concurrent_cops(run);
      row.capture_rounds = rep.capture_round.value();
      if (engine == EngineKind::Stt) {
        SizeFn f = make_budget(cfg.budget);
        row.c_f_bound = cop_bound_C_f(f, row.n);
        row.capture_bound = capture_time_bound(row.d_g, row.n, f);
        row.tree_nodes = run.stats.iterations;
        row.node_bound = 6.0 * double(row.n) / double(f(row.n)) - 1;
        row.peak_stack_mass = run.stats.peak_stack_mass;
      }
      row.wall_time =
          std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                        t_start)
              .count();
      if (!quiet)
        std::cerr << "row " << row.family << ":" << row.param << ":" << row.seed
                  << " wall_time=" << row.wall_time << "s\n";
      rows.push_back(std::move(row));
      runs.push_back(std::move(run));
    }
  }

  std::vector<std::size_t> order(rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    auto key = [&](std::size_t i) {
      return std::tie(rows[i].family, rows[i].param, rows[i].seed,
                      rows[i].engine);
    };
    return key(x) < key(y);
  });
  std::vector<ResultRow> sorted_rows;
  std::vector<RunResult> sorted_runs;
  for (std::size_t i : order) {
    sorted_rows.push_back(rows[i]);
    sorted_runs.push_back(runs[i]);
  }

  if (!cfg.out_csv.empty()) {
    auto p = resolve_out(cfg.out_csv);
    if (!p.parent_path().empty()) std::filesystem::create_directories(p.parent_path());
    std::ofstream out(p);
    write_rows_csv(sorted_rows, out);
  }
  if (!cfg.out_json.empty()) {
    nlohmann::json doc = nlohmann::json::array();
    for (std::size_t i = 0; i < sorted_rows.size(); ++i)
      doc.push_back(row_to_json(sorted_rows[i], sorted_runs[i]));
    auto p = resolve_out(cfg.out_json);
    if (!p.parent_path().empty()) std::filesystem::create_directories(p.parent_path());
    std::ofstream out(p);
    out << doc.dump(2) << '\n';
  }
  if (traces) *traces = std::move(sorted_runs);
  return sorted_rows;
}

// Least-squares slope of ln(y) against ln(x).
inline double fit_loglog_slope(const std::vector<std::pair<double, double>>& pts) {
  if (pts.size() < 2)
    throw std::invalid_argument("slope fit needs at least two points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto [x, y] : pts) {
    if (!(x > 0) || !(y > 0))
      throw std::invalid_argument("slope fit needs positive values");
    double lx = std::log(x), ly = std::log(y);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  double m = double(pts.size());
  double denom = m * sxx - sx * sx;
  if (denom == 0) throw std::invalid_argument("slope fit needs distinct x");
  return (m * sxy - sx * sy) / denom;
}

inline double median(std::vector<double> xs) {
  if (xs.empty()) throw std::invalid_argument("median of nothing");
  std::sort(xs.begin(), xs.end());
  std::size_t mid = xs.size() / 2;
  if (xs.size() % 2) return xs[mid];
  return (xs[mid - 1] + xs[mid]) / 2;
}

struct CompareRow {
  std::string family;
  long long param = 0;
  std::uint64_t seed = 0;
  long long n = 0;
  long long capture_a = 0, capture_b = 0;
  double ratio = 0;
};

struct CompareTable {
  std::vector<CompareRow> rows;
  double exponent_a = 0, exponent_b = 0, exponent_ratio = 0;
};

// Joins two runs over the same instance set and fits log-log growth
// exponents of both capture times and of their ratio.
inline CompareTable cmd_compare(const ExperimentConfig& cfg_a, EngineKind eng_a,
                                const ExperimentConfig& cfg_b, EngineKind eng_b,
                                const std::string& out_csv = "",
                                const std::string& out_json = "") {
  std::vector<ResultRow> rows_a = cmd_run(cfg_a, eng_a, nullptr, true);
  std::vector<ResultRow> rows_b = cmd_run(cfg_b, eng_b, nullptr, true);
  if (rows_a.size() != rows_b.size())
    throw std::invalid_argument("mismatched instance sets");

  CompareTable table;
  std::vector<std::pair<double, double>> pts_a, pts_b, pts_ratio;
  for (std::size_t i = 0; i < rows_a.size(); ++i) {
    const auto& a = rows_a[i];
    const auto& b = rows_b[i];
    if (a.family != b.family || a.param != b.param || a.seed != b.seed ||
        a.n != b.n)
      throw std::invalid_argument("mismatched instance sets");
    CompareRow row;
    row.family = a.family;
    row.param = a.param;
    row.seed = a.seed;
    row.n = a.n;
    row.capture_a = a.capture_rounds;
    row.capture_b = b.capture_rounds;
    row.ratio = double(a.capture_rounds) / double(b.capture_rounds);
    table.rows.push_back(row);
    if (a.n > 1) {
      pts_a.emplace_back(double(a.n), double(a.capture_rounds));
      pts_b.emplace_back(double(b.n), double(b.capture_rounds));
      pts_ratio.emplace_back(double(a.n), row.ratio);
    }
  }
  table.exponent_a = fit_loglog_slope(pts_a);
  table.exponent_b = fit_loglog_slope(pts_b);
  table.exponent_ratio = fit_loglog_slope(pts_ratio);

  if (!out_csv.empty()) {
    auto p = resolve_out(out_csv);
    if (!p.parent_path().empty()) std::filesystem::create_directories(p.parent_path());
    std::ofstream out(p);
    out << "family,param,seed,n,capture_a,capture_b,ratio\n";
    for (auto& r : table.rows)
      out << r.family << ',' << r.param << ',' << r.seed << ',' << r.n << ','
          << r.capture_a << ',' << r.capture_b << ',' << r.ratio << '\n';
  }
  if (!out_json.empty()) {
    nlohmann::json doc;
    doc["rows"] = nlohmann::json::array();
    for (auto& r : table.rows) {
      nlohmann::json jr;
      jr["family"] = r.family;
      jr["param"] = r.param;
      jr["seed"] = r.seed;
      jr["n"] = r.n;
      jr["capture_a"] = r.capture_a;
      jr["capture_b"] = r.capture_b;
      jr["ratio"] = r.ratio;
      doc["rows"].push_back(std::move(jr));
    }
    doc["exponent_a"] = table.exponent_a;
    doc["exponent_b"] = table.exponent_b;
    doc["exponent_ratio"] = table.exponent_ratio;
    auto p = resolve_out(out_json);
    if (!p.parent_path().empty()) std::filesystem::create_directories(p.parent_path());
    std::ofstream out(p);
    out << doc.dump(2) << '\n';
  }
  return table;
}

}  // namespace copsweep
