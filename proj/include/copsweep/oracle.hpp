#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "copsweep/graph.hpp"
#include "copsweep/schedule.hpp"

namespace copsweep {

// Where an uncaught robber could possibly be. Empty means capture is
// certain no matter how the robber has played.
struct Territory {
  VertexSet possible;
};

// One game round against cop positions c: cops land first (capturing
// anything underneath), then the robber makes `speed` closed-neighborhood
// steps that never touch an occupied vertex.
inline Territory evolve_territory(const Graph& g, const Territory& r,
                                  const VertexSet& c, int speed = 1) {
  if (speed < 1) throw std::invalid_argument("robber speed must be positive");
  Bits cur = r.possible.to_bits(g.n());
  Bits cops = c.to_bits(g.n());
  cur.subtract(cops);
  for (int s = 0; s < speed; ++s) {
    Bits next = cur;  // passing is allowed
    if (g.has_bit_rows()) {
      cur.for_each([&](int v) { next |= g.bit_row(v); });
    } else {
      cur.for_each([&](int v) {
        for (int w : g.adj(v)) next.set(w);
      });
    }
    next.subtract(cops);
    cur = std::move(next);
  }
  return Territory{VertexSet::from_bits(cur)};
}

struct VerificationReport {
  bool captured = false;
  std::optional<int> capture_round;  // first round with empty territory
  std::vector<int> territory_trace;  // territory size after each round
  bool monotone = true;
  // Per snapshot-bearing round: territory must equal the union of the sets
  // held on the separated-sets stack. Absent for edge-travel schedules.
  std::optional<bool> invariant_I;
};

// Replays a schedule against the optimal invisible robber. Round 1 is the
// initial placement (the robber then picks any unoccupied vertex); every
// later round folds evolve_territory once.
inline VerificationReport verify_schedule(const Graph& g, const Schedule& sched,
                                          int speed = 1) {
  VerificationReport rep;
  if (sched.rounds.empty()) {
    rep.captured = g.n() == 0;
    return rep;
  }
  for (auto& r : sched.rounds)
    if (!r.occupied.empty() && r.occupied[r.occupied.size() - 1] >= g.n())
      throw std::invalid_argument("schedule occupies a vertex outside the graph");

  bool snapshot_ok = true, saw_snapshot = false;
  Territory t{VertexSet::minus(VertexSet::full(g.n()), sched.rounds[0].occupied)};
  for (std::size_t i = 0; i < sched.rounds.size(); ++i) {
    const RoundRecord& r = sched.rounds[i];
    if (i > 0) t = evolve_territory(g, t, r.occupied, speed);
    rep.territory_trace.push_back(t.possible.size());
    if (!rep.capture_round && t.possible.empty()) rep.capture_round = r.round;
    if (r.has_snapshots) {
      saw_snapshot = true;
      VertexSet expect;
      for (auto& e : r.stack_b) expect = VertexSet::unite(expect, e.set);
      if (expect != t.possible) snapshot_ok = false;
    }
  }
  rep.captured = rep.territory_trace.back() == 0;
  for (std::size_t i = 1; i < rep.territory_trace.size(); ++i)
    if (rep.territory_trace[i] > rep.territory_trace[i - 1]) rep.monotone = false;
  if (saw_snapshot) rep.invariant_I = snapshot_ok;
  return rep;
}

inline int capture_time(const Graph& g, const Schedule& sched, int speed = 1) {
  VerificationReport rep = verify_schedule(g, sched, speed);
  if (!rep.captured)
    throw std::runtime_error("schedule does not capture the robber");
  return *rep.capture_round;
}

}  // namespace copsweep
