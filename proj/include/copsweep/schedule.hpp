#pragma once

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "copsweep/graph.hpp"
#include "json.hpp"

namespace copsweep {

// What a configuration is doing: first placement of the team, guarding a
// fresh separator, clearing a small region, or occupying a decomposition bag.
enum class EventKind { Initial, Separate, Clear, Bag };

// Teleport: cops jump between configurations (node-search rules).
// Edge: cops walk, one edge per round, between the same configurations.
enum class TravelModel { Teleport, Edge };

inline std::string event_name(EventKind e) {
  switch (e) {
    case EventKind::Initial: return "initial";
    case EventKind::Separate: return "separate";
    case EventKind::Clear: return "clear";
    case EventKind::Bag: return "bag";
  }
  throw std::logic_error("bad event kind");
}

inline EventKind event_from_name(const std::string& s) {
  if (s == "initial") return EventKind::Initial;
  if (s == "separate") return EventKind::Separate;
  if (s == "clear") return EventKind::Clear;
  if (s == "bag") return EventKind::Bag;
  throw std::invalid_argument("unknown event '" + s + "'");
}

struct StackSnapshotEntry {
  std::string index;
  VertexSet set;
};

// One game round. Teleport schedules emit one round per scheduler iteration
// and carry stack snapshots (taken after that iteration's mutations); edge
// schedules emit one round per travel step, grouped into phases, with
// phase_final marking the round that realizes the phase's event.
struct RoundRecord {
  int round = 0;  // 1-based
  VertexSet occupied;
  EventKind event = EventKind::Initial;
  std::string index;  // tree index, or bag number for Bag events
  int iteration = 0;  // scheduler iteration / travel phase
  bool phase_final = true;
  bool has_snapshots = false;
  std::vector<StackSnapshotEntry> stack_b, stack_c;
};

struct Schedule {
  std::vector<RoundRecord> rounds;
};

struct RunStats {
  std::string model;  // "teleport" or "edge"
  int iterations = 0;
  int rounds = 0;
  int max_concurrent_cops = 0;
  int cop_count = 0;              // deployed team size (edge model)
  long long peak_stack_mass = 0;  // max vertices held across both stacks
};

struct RunResult {
  Schedule schedule;
  RunStats stats;
};

inline int max_concurrent_cops(const RunResult& run) {
  if (run.stats.model == "edge") return run.stats.cop_count;
  int best = 0;
  for (auto& r : run.schedule.rounds)
    best = std::max(best, r.occupied.size());
  return best;
}

// ----- JSON-lines export ---------------------------------------------------
//
// One object per round: {round, occupied, event, index, iteration, final}
// plus stack_b/stack_c snapshot arrays on teleport rounds; a trailing
// {"stats": {...}} line closes the stream. Replayable by the oracle.

namespace detail {
inline nlohmann::json set_to_json(const VertexSet& s) {
  return nlohmann::json(s.items());
}
inline VertexSet set_from_json(const nlohmann::json& j) {
  return VertexSet(j.get<std::vector<int>>());
}
inline nlohmann::json stack_to_json(const std::vector<StackSnapshotEntry>& st) {
  nlohmann::json arr = nlohmann::json::array();
  for (auto& e : st) arr.push_back({{"index", e.index}, {"set", set_to_json(e.set)}});
  return arr;
}
inline std::vector<StackSnapshotEntry> stack_from_json(const nlohmann::json& arr) {
  std::vector<StackSnapshotEntry> st;
  for (auto& e : arr)
    st.push_back({e.at("index").get<std::string>(), set_from_json(e.at("set"))});
  return st;
}
}  // namespace detail

inline void write_schedule_jsonl(const RunResult& run, std::ostream& out) {
  for (auto& r : run.schedule.rounds) {
    nlohmann::json j{{"round", r.round},
                     {"occupied", detail::set_to_json(r.occupied)},
                     {"event", event_name(r.event)},
                     {"index", r.index},
                     {"iteration", r.iteration},
                     {"final", r.phase_final}};
    if (r.has_snapshots) {
      j["stack_b"] = detail::stack_to_json(r.stack_b);
      j["stack_c"] = detail::stack_to_json(r.stack_c);
    }
    out << j.dump() << '\n';
  }
  const RunStats& s = run.stats;
  nlohmann::json j{{"stats",
                    {{"model", s.model},
                     {"iterations", s.iterations},
                     {"rounds", s.rounds},
                     {"max_concurrent_cops", s.max_concurrent_cops},
                     {"cop_count", s.cop_count},
                     {"peak_stack_mass", s.peak_stack_mass}}}};
  out << j.dump() << '\n';
}

inline RunResult read_schedule_jsonl(std::istream& in) {
  RunResult run;
  std::string line;
  bool saw_stats = false;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json j = nlohmann::json::parse(line);
    if (j.contains("stats")) {
      auto& s = j["stats"];
      run.stats.model = s.at("model").get<std::string>();
      run.stats.iterations = s.at("iterations").get<int>();
      run.stats.rounds = s.at("rounds").get<int>();
      run.stats.max_concurrent_cops = s.at("max_concurrent_cops").get<int>();
      run.stats.cop_count = s.at("cop_count").get<int>();
      run.stats.peak_stack_mass = s.at("peak_stack_mass").get<long long>();
      saw_stats = true;
      continue;
    }
    RoundRecord r;
    r.round = j.at("round").get<int>();
    r.occupied = detail::set_from_json(j.at("occupied"));
    r.event = event_from_name(j.at("event").get<std::string>());
    r.index = j.at("index").get<std::string>();
    r.iteration = j.at("iteration").get<int>();
    r.phase_final = j.at("final").get<bool>();
    if (j.contains("stack_b")) {
      r.has_snapshots = true;
      r.stack_b = detail::stack_from_json(j.at("stack_b"));
      r.stack_c = detail::stack_from_json(j.at("stack_c"));
    }
    run.schedule.rounds.push_back(std::move(r));
  }
  if (!saw_stats)
    throw std::invalid_argument("schedule stream is missing its stats line");
  return run;
}

}  // namespace copsweep
