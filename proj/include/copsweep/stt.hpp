#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "copsweep/graph.hpp"
#include "copsweep/schedule.hpp"
#include "copsweep/separation.hpp"
#include "copsweep/septree.hpp"
#include "copsweep/travel.hpp"

namespace copsweep {

// Drops the last bit of a tree index. The empty index has no parent; the
// sentinel (nullopt) compares unequal to every real index, so a guard-pop
// loop keyed on it drains the separator stack.
inline std::optional<std::string> del_last(const std::string& w) {
  if (w.empty()) return std::nullopt;
  return std::optional<std::string>(w.substr(0, w.size() - 1));
}

// Sweep scheduler, teleport model. Two stacks drive the traversal: one
// holds still-contaminated regions tagged with tree indices, the other the
// separators currently guarded. Per iteration: pop a region, release every
// guard that does not enclose it, then either clear it outright (small
// regions) or split it and guard the new separator. One configuration is
// emitted per iteration: all guarded separators plus the new separator or
// the cleared region.
inline RunResult stt_schedule_teleport(const Graph& g,
                                       const SeparatorFn& strategy,
                                       const SizeFn& f) {
  if (g.n() < 1) throw std::invalid_argument("sweep needs a nonempty graph");
  if (!is_connected(g)) throw std::invalid_argument("sweep needs a connected graph");
  long long clear_at = checked_budget(f, g.n());

  std::vector<StackSnapshotEntry> stack_b{{"", VertexSet::full(g.n())}};
  std::vector<StackSnapshotEntry> stack_c;

  RunResult run;
  run.stats.model = "teleport";
  long long peak_mass = g.n();
  int max_cops = 0;

  int iter = 0;
  while (!stack_b.empty()) {
    ++iter;
    StackSnapshotEntry region = std::move(stack_b.back());
    stack_b.pop_back();
    std::optional<std::string> enclosing = del_last(region.index);
    while (!stack_c.empty() && (!enclosing || stack_c.back().index != *enclosing))
      stack_c.pop_back();

    RoundRecord r;
    r.round = iter;
    r.iteration = iter;
    r.index = region.index;
    if ((long long)region.set.size() <= clear_at) {
      r.event = EventKind::Clear;
    } else {
      SeparationResult split;
      try {
        split = separate_region(g, region.set, strategy);
      } catch (const std::exception& e) {
        throw std::runtime_error("separation failed at index '" +
                                 region.index + "': " + e.what());
      }
      if ((long long)split.s.size() > checked_budget(f, region.set.size()))
        throw std::runtime_error(
            "strategy broke its contract at index '" + region.index +
            "': separator size " + std::to_string(split.s.size()) +
            " over budget " + std::to_string(f(region.set.size())));
      if (split.s.empty())
        throw std::runtime_error("strategy broke its contract at index '" +
                                 region.index + "': empty separator");
      stack_c.push_back({region.index, split.s});
      if (!split.b.empty()) stack_b.push_back({region.index + "0", split.b});
      if (!split.a.empty()) stack_b.push_back({region.index + "1", split.a});
      r.event = EventKind::Separate;
    }

    VertexSet occ;
    for (auto& e : stack_c) occ = VertexSet::unite(occ, e.set);
    if (r.event == EventKind::Clear) occ = VertexSet::unite(occ, region.set);
    r.occupied = std::move(occ);
    r.has_snapshots = true;
    r.stack_b = stack_b;
    r.stack_c = stack_c;

    long long mass = 0;
    for (auto& e : stack_b) mass += e.set.size();
    for (auto& e : stack_c) mass += e.set.size();
    peak_mass = std::max(peak_mass, mass);
    max_cops = std::max(max_cops, r.occupied.size());
    run.schedule.rounds.push_back(std::move(r));
  }

  run.stats.iterations = iter;
  run.stats.rounds = iter;
  run.stats.max_concurrent_cops = max_cops;
  run.stats.peak_stack_mass = peak_mass;
  return run;
}

// Edge-travel variant: replays the teleport configurations with a fixed
// team (the teleport maximum), walking cops along edges between
// configurations while live separators stay guarded.
inline RunResult stt_schedule_edge(const Graph& g, const SeparatorFn& strategy,
                                   const SizeFn& f) {
  RunResult tele = stt_schedule_teleport(g, strategy, f);
  int team = max_concurrent_cops(tele);

  std::vector<PhaseSpec> phases;
  phases.reserve(tele.schedule.rounds.size());
  for (auto& r : tele.schedule.rounds) {
    VertexSet guards;
    for (auto& e : r.stack_c) guards = VertexSet::unite(guards, e.set);
    PhaseSpec ph;
    ph.event = r.event;
    ph.index = r.index;
    if (r.event == EventKind::Separate) {
      ph.targets = r.stack_c.back().set;  // pushed by this iteration
      ph.stay = VertexSet::minus(guards, ph.targets);
    } else {
      ph.targets = VertexSet::minus(r.occupied, guards);  // the cleared region
      ph.stay = guards;
    }
    phases.push_back(std::move(ph));
  }
  RunResult run = realize_edge_phases(g, team, phases);
  run.stats.peak_stack_mass = tele.stats.peak_stack_mass;
  return run;
}

}  // namespace copsweep
