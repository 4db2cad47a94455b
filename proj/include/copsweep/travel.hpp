#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "copsweep/graph.hpp"
#include "copsweep/schedule.hpp"

namespace copsweep {

// One travel phase: while the cops on `stay` hold their ground, the free
// cops walk until every vertex of `targets` is occupied simultaneously.
struct PhaseSpec {
  VertexSet stay;
  VertexSet targets;
  EventKind event = EventKind::Clear;
  std::string index;
};

// Turns teleport configurations into an edge-travel schedule. The team
// starts stacked on vertex 0; per phase, free cops are matched to targets
// greedily by (BFS distance, cop id, target id) and advance one edge per
// round along shortest paths, everyone stepping simultaneously. A phase
// takes at least one round even when all its targets are already covered.
inline RunResult realize_edge_phases(const Graph& g, int team,
                                     const std::vector<PhaseSpec>& phases) {
  if (g.n() < 1) throw std::invalid_argument("edge travel needs vertices");
  if (team < 1) throw std::invalid_argument("edge travel needs cops");

  RunResult run;
  run.stats.model = "edge";
  run.stats.cop_count = team;
  run.stats.max_concurrent_cops = team;
  run.stats.iterations = int(phases.size());

  std::vector<int> pos(team, 0);
  int round = 0;
  auto emit = [&](EventKind ev, const std::string& index, int iter, bool fin) {
    RoundRecord r;
    r.round = ++round;
    r.occupied = VertexSet(std::vector<int>(pos));
    r.event = ev;
    r.index = index;
    r.iteration = iter;
    r.phase_final = fin;
    run.schedule.rounds.push_back(std::move(r));
  };
  emit(EventKind::Initial, "", 0, true);

  for (std::size_t p = 0; p < phases.size(); ++p) {
    const PhaseSpec& ph = phases[p];
    if (!VertexSet::disjoint(ph.stay, ph.targets))
      throw std::logic_error("phase stay and target sets overlap");
    if (ph.stay.size() + ph.targets.size() > team)
      throw std::logic_error("phase needs more cops than the team has");

    std::vector<bool> pinned(team, false);
    for (int v : ph.stay) {
      int holder = -1;
      for (int c = 0; c < team; ++c)
        if (!pinned[c] && pos[c] == v) {
          holder = c;
          break;
        }
      if (holder < 0)
        throw std::logic_error("guard vertex " + std::to_string(v) +
                               " is unoccupied at phase start");
      pinned[holder] = true;
    }

    // Greedy global matching of free cops to target vertices.
    std::vector<int> pending(ph.targets.begin(), ph.targets.end());
    std::vector<std::vector<int>> dist;
    dist.reserve(pending.size());
    for (int t : pending) dist.push_back(bfs_distances(g, t));
    std::vector<std::vector<int>> path(team);
    std::vector<bool> busy(team, false);
    while (!pending.empty()) {
      int bc = -1, bt = -1, bd = -1;
      for (std::size_t ti = 0; ti < pending.size(); ++ti)
        for (int c = 0; c < team; ++c) {
          if (pinned[c] || busy[c]) continue;
          int d = dist[ti][pos[c]];
          if (d < 0) continue;
          if (bd < 0 || d < bd || (d == bd && (c < bc || (c == bc && pending[ti] < bt)))) {
            bd = d;
            bc = c;
            bt = pending[ti];
          }
        }
      if (bc < 0) throw std::logic_error("no cop can reach a phase target");
      busy[bc] = true;
      path[bc] = shortest_path(g, pos[bc], bt);
      for (std::size_t ti = 0; ti < pending.size(); ++ti)
        if (pending[ti] == bt) {
          pending.erase(pending.begin() + ti);
          dist.erase(dist.begin() + ti);
          break;
        }
    }

    std::size_t steps = 1;
    for (int c = 0; c < team; ++c)
      if (busy[c]) steps = std::max(steps, path[c].size() - 1);
    std::vector<std::size_t> at(team, 0);
    for (std::size_t s = 1; s <= steps; ++s) {
      for (int c = 0; c < team; ++c)
        if (busy[c] && at[c] + 1 < path[c].size()) pos[c] = path[c][++at[c]];
      emit(ph.event, ph.index, int(p) + 1, s == steps);
    }
  }

  run.stats.rounds = round;
  return run;
}

}  // namespace copsweep
