#include <catch2/catch_amalgamated.hpp>

#include "copsweep/oracle.hpp"
#include "copsweep/stt.hpp"
#include "support.hpp"

using namespace copsweep;
using copsweep::testing::random_attachment_tree;
using copsweep::testing::random_connected_graph;

namespace {

Graph path(int n) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph(n, es);
}

Graph star(int leaves) {
  std::vector<std::pair<int, int>> es;
  for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
  return Graph(leaves + 1, es);
}

Graph cycle(int n) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return Graph(n, es);
}

const SizeFn kOne = [](long long) -> long long { return 1; };
const SizeFn kTwoThirds = [](long long x) { return (2 * x + 2) / 3; };

const SeparatorFn kCentroid = [](const Graph& local, const std::vector<int>&) {
  return tree_centroid_separator(local);
};
const SeparatorFn kBfs = [](const Graph& local, const std::vector<int>&) {
  return bfs_level_separator(local);
};

// stack_c must always be a chain of ancestors: each guarded index extends
// the one below it, and all of them are prefixes of the current node.
void check_guard_discipline(const RunResult& run) {
  for (const RoundRecord& r : run.schedule.rounds) {
    REQUIRE(r.has_snapshots);
    for (std::size_t i = 1; i < r.stack_c.size(); ++i) {
      const std::string &lo = r.stack_c[i - 1].index, &hi = r.stack_c[i].index;
      REQUIRE(hi.size() == lo.size() + 1);
      REQUIRE(hi.substr(0, lo.size()) == lo);
    }
    for (const auto& e : r.stack_c) {
      REQUIRE(e.index.size() <= r.index.size());
      REQUIRE(r.index.substr(0, e.index.size()) == e.index);
      if (r.event == EventKind::Clear) REQUIRE(e.index.size() < r.index.size());
    }
    if (r.event == EventKind::Separate) {
      REQUIRE_FALSE(r.stack_c.empty());
      REQUIRE(r.stack_c.back().index == r.index);
    }
    for (const auto& e : r.stack_b) REQUIRE_FALSE(e.set.empty());
    for (const auto& e : r.stack_c) REQUIRE_FALSE(e.set.empty());
  }
}

}  // namespace

TEST_CASE("tree index parent") {
  REQUIRE_FALSE(del_last("").has_value());
  REQUIRE(del_last("0") == "");
  REQUIRE(del_last("10") == "1");
  REQUIRE(del_last("1101") == "110");
}

TEST_CASE("sweeping a three-path") {
  RunResult run = stt_schedule_teleport(path(3), kCentroid, kOne);
  REQUIRE(run.schedule.rounds.size() == 3);

  const RoundRecord& r1 = run.schedule.rounds[0];
  REQUIRE(r1.occupied == VertexSet({1}));
  REQUIRE(r1.event == EventKind::Separate);
  REQUIRE(r1.index == "");
  REQUIRE(r1.stack_b.size() == 2);
  REQUIRE(r1.stack_b[0].index == "0");
  REQUIRE(r1.stack_b[0].set == VertexSet({2}));
  REQUIRE(r1.stack_b[1].index == "1");
  REQUIRE(r1.stack_b[1].set == VertexSet({0}));
  REQUIRE(r1.stack_c.size() == 1);
  REQUIRE(r1.stack_c[0].index == "");
  REQUIRE(r1.stack_c[0].set == VertexSet({1}));

  const RoundRecord& r2 = run.schedule.rounds[1];
  REQUIRE(r2.occupied == VertexSet({0, 1}));
  REQUIRE(r2.event == EventKind::Clear);
  REQUIRE(r2.index == "1");
  REQUIRE(r2.stack_b.size() == 1);
  REQUIRE(r2.stack_c.size() == 1);

  const RoundRecord& r3 = run.schedule.rounds[2];
  REQUIRE(r3.occupied == VertexSet({1, 2}));
  REQUIRE(r3.event == EventKind::Clear);
  REQUIRE(r3.index == "0");
  REQUIRE(r3.stack_b.empty());
  REQUIRE(r3.stack_c.size() == 1);  // the final guard is never released

  REQUIRE(run.stats.model == "teleport");
  REQUIRE(run.stats.iterations == 3);
  REQUIRE(run.stats.rounds == 3);
  REQUIRE(run.stats.max_concurrent_cops == 2);
  REQUIRE(run.stats.peak_stack_mass == 3);

  VerificationReport rep = verify_schedule(path(3), run.schedule);
  REQUIRE(rep.captured);
  REQUIRE(rep.capture_round == 3);
  REQUIRE(rep.territory_trace == std::vector<int>{2, 1, 0});
  REQUIRE(*rep.invariant_I);
}

TEST_CASE("sweeping a claw separates a disconnected region") {
  // Removing the center leaves three isolated leaves; the region popped
  // next is the two-leaf group, whose split guards one leaf and hands the
  // other back as a singleton child.
  RunResult run = stt_schedule_teleport(star(3), kCentroid, kOne);
  std::vector<VertexSet> occ;
  std::vector<EventKind> events;
  std::vector<std::string> idx;
  for (auto& r : run.schedule.rounds) {
    occ.push_back(r.occupied);
    events.push_back(r.event);
    idx.push_back(r.index);
  }
  REQUIRE(occ == std::vector<VertexSet>{VertexSet({0}), VertexSet({0, 1}),
                                        VertexSet({0, 1, 3}), VertexSet({0, 2})});
  REQUIRE(events == std::vector<EventKind>{EventKind::Separate,
                                           EventKind::Separate, EventKind::Clear,
                                           EventKind::Clear});
  REQUIRE(idx == std::vector<std::string>{"", "1", "11", "0"});
  REQUIRE(run.stats.max_concurrent_cops == 3);
  REQUIRE(run.stats.peak_stack_mass == 4);

  VerificationReport rep = verify_schedule(star(3), run.schedule);
  REQUIRE(rep.captured);
  REQUIRE(rep.capture_round == 4);
  REQUIRE(rep.territory_trace == std::vector<int>{3, 2, 1, 0});
  REQUIRE(*rep.invariant_I);
}

TEST_CASE("sweeping a seven-path") {
  RunResult run = stt_schedule_teleport(path(7), kCentroid, kOne);
  std::vector<VertexSet> occ;
  std::vector<std::string> idx;
  for (auto& r : run.schedule.rounds) {
    occ.push_back(r.occupied);
    idx.push_back(r.index);
  }
  REQUIRE(occ == std::vector<VertexSet>{
                     VertexSet({3}), VertexSet({1, 3}), VertexSet({0, 1, 3}),
                     VertexSet({1, 2, 3}), VertexSet({3, 5}),
                     VertexSet({3, 4, 5}), VertexSet({3, 5, 6})});
  REQUIRE(idx == std::vector<std::string>{"", "1", "11", "10", "0", "01", "00"});
  REQUIRE(run.stats.iterations == 7);
  REQUIRE(run.stats.max_concurrent_cops == 3);
  REQUIRE(run.stats.max_concurrent_cops <= cop_bound_C_f(kOne, 7));
  REQUIRE(capture_time(path(7), run.schedule) == 7);
  check_guard_discipline(run);
}

TEST_CASE("a single vertex is cleared in one round") {
  RunResult run = stt_schedule_teleport(Graph(1, {}), kCentroid, kOne);
  REQUIRE(run.schedule.rounds.size() == 1);
  REQUIRE(run.schedule.rounds[0].occupied == VertexSet({0}));
  REQUIRE(run.schedule.rounds[0].event == EventKind::Clear);
  REQUIRE(run.stats.peak_stack_mass == 1);
  REQUIRE(capture_time(Graph(1, {}), run.schedule) == 1);
}

TEST_CASE("scheduler input and contract guards") {
  REQUIRE_THROWS_AS(stt_schedule_teleport(Graph(0, {}), kCentroid, kOne),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(stt_schedule_teleport(Graph(4, {{0, 1}, {2, 3}}), kBfs, kOne),
                    std::invalid_argument);

  SECTION("an oversized separator is a contract breach") {
    try {
      stt_schedule_teleport(cycle(6), kBfs, kOne);
      FAIL("expected a throw");
    } catch (const std::runtime_error& e) {
      std::string msg = e.what();
      REQUIRE(msg.find("strategy broke its contract at index ''") !=
              std::string::npos);
      REQUIRE(msg.find("over budget 1") != std::string::npos);
    }
  }
  SECTION("an empty separator is a contract breach") {
    SeparatorFn lazy = [](const Graph& local, const std::vector<int>&) {
      return SeparationResult{VertexSet::full(local.n()), VertexSet(),
                              VertexSet()};
    };
    try {
      stt_schedule_teleport(path(5), lazy, kTwoThirds);
      FAIL("expected a throw");
    } catch (const std::runtime_error& e) {
      REQUIRE(std::string(e.what()).find("empty separator") !=
              std::string::npos);
    }
  }
  SECTION("strategy failures carry the tree index") {
    SeparatorFn broken = [](const Graph&,
                            const std::vector<int>&) -> SeparationResult {
      throw std::domain_error("no dice");
    };
    try {
      stt_schedule_teleport(path(5), broken, kOne);
      FAIL("expected a throw");
    } catch (const std::runtime_error& e) {
      REQUIRE(std::string(e.what()) ==
              "separation failed at index '': no dice");
    }
  }
}

TEST_CASE("teleport sweeps on random inputs") {
  SECTION("trees under the unit budget") {
    for (int n : {10, 30})
      for (std::uint64_t seed = 0; seed < 12; ++seed) {
        Graph g = random_attachment_tree(n, seed);
        RunResult run = stt_schedule_teleport(g, kCentroid, kOne);
        check_guard_discipline(run);
        VerificationReport rep = verify_schedule(g, run.schedule);
        REQUIRE(rep.captured);
        REQUIRE(rep.capture_round == run.stats.rounds);
        REQUIRE(*rep.invariant_I);
        for (std::size_t i = 1; i < rep.territory_trace.size(); ++i)
          REQUIRE(rep.territory_trace[i] < rep.territory_trace[i - 1]);
        REQUIRE(run.stats.iterations <= n);
        REQUIRE(run.stats.max_concurrent_cops <= cop_bound_C_f(kOne, n));
        REQUIRE(run.stats.peak_stack_mass <= 3LL * n);
      }
  }
  SECTION("arbitrary connected graphs under a generous budget") {
    for (int n : {8, 14})
      for (std::uint64_t seed = 0; seed < 12; ++seed) {
        Graph g = random_connected_graph(n, seed, n / 2);
        RunResult run = stt_schedule_teleport(g, kBfs, kTwoThirds);
        check_guard_discipline(run);
        VerificationReport rep = verify_schedule(g, run.schedule);
        REQUIRE(rep.captured);
        REQUIRE(*rep.invariant_I);
        for (std::size_t i = 1; i < rep.territory_trace.size(); ++i)
          REQUIRE(rep.territory_trace[i] < rep.territory_trace[i - 1]);
        REQUIRE(run.stats.peak_stack_mass <= 3LL * n);
      }
  }
}

TEST_CASE("walking the three-path sweep along edges") {
  RunResult run = stt_schedule_edge(path(3), kCentroid, kOne);
  std::vector<VertexSet> occ;
  for (auto& r : run.schedule.rounds) occ.push_back(r.occupied);
  REQUIRE(occ == std::vector<VertexSet>{VertexSet({0}), VertexSet({0, 1}),
                                        VertexSet({0, 1}), VertexSet({1}),
                                        VertexSet({1, 2})});
  REQUIRE(run.schedule.rounds[0].event == EventKind::Initial);
  REQUIRE(run.schedule.rounds[2].phase_final);  // zero-travel phase, one round
  REQUIRE(run.stats.model == "edge");
  REQUIRE(run.stats.cop_count == 2);
  REQUIRE(run.stats.rounds == 5);
  REQUIRE(run.stats.iterations == 3);
  REQUIRE(run.stats.peak_stack_mass == 3);
  REQUIRE(max_concurrent_cops(run) == 2);

  VerificationReport rep = verify_schedule(path(3), run.schedule);
  REQUIRE(rep.captured);
  REQUIRE(rep.capture_round == 5);
  REQUIRE(rep.territory_trace == std::vector<int>{2, 1, 1, 1, 0});
  REQUIRE(rep.monotone);
  REQUIRE_FALSE(rep.invariant_I.has_value());
}

TEST_CASE("edge phases on a star stay short") {
  Graph g = star(4);
  RunResult tele = stt_schedule_teleport(g, kCentroid, kOne);
  RunResult run = stt_schedule_edge(g, kCentroid, kOne);
  REQUIRE(run.stats.cop_count == max_concurrent_cops(tele));
  REQUIRE(run.stats.rounds == 8);

  std::vector<int> phase_rounds(run.stats.iterations + 1, 0);
  for (auto& r : run.schedule.rounds) ++phase_rounds[r.iteration];
  REQUIRE(phase_rounds[0] == 1);  // the initial placement
  for (int p = 1; p <= run.stats.iterations; ++p) {
    REQUIRE(phase_rounds[p] >= 1);
    REQUIRE(phase_rounds[p] <= 2);  // nothing is ever farther than two hops
  }
  for (auto& r : run.schedule.rounds)
    REQUIRE(r.occupied.size() <= run.stats.cop_count);

  VerificationReport rep = verify_schedule(g, run.schedule);
  REQUIRE(rep.captured);
  REQUIRE(rep.monotone);
}

TEST_CASE("edge sweeps on random trees") {
  for (int n : {9, 21})
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      Graph g = random_attachment_tree(n, seed);
      RunResult tele = stt_schedule_teleport(g, kCentroid, kOne);
      RunResult run = stt_schedule_edge(g, kCentroid, kOne);
      REQUIRE(run.stats.cop_count == max_concurrent_cops(tele));
      REQUIRE(run.stats.peak_stack_mass == tele.stats.peak_stack_mass);
      VerificationReport rep = verify_schedule(g, run.schedule);
      REQUIRE(rep.captured);
      // A cop in transit can pin the robber a few rounds before the last
      // planned landing, so first-capture may undershoot the round total.
      REQUIRE(capture_time(g, run.schedule) <= run.stats.rounds);
      // Unlike teleport sweeps, walking sweeps need not shrink the territory
      // every round: an idle cop parked on a cleared vertex releases it when
      // it is sent off to its next target. The territory it regains is
      // bounded by the squatted vertices, and the end of each phase still
      // pins the robber at least as tightly as before.
      std::vector<int> phase_end;
      for (std::size_t i = 0; i + 1 < run.schedule.rounds.size(); ++i)
        if (run.schedule.rounds[i].iteration !=
            run.schedule.rounds[i + 1].iteration)
          phase_end.push_back(rep.territory_trace[i]);
      phase_end.push_back(rep.territory_trace.back());
      for (std::size_t i = 0; i + 1 < phase_end.size(); ++i)
        REQUIRE(phase_end[i + 1] <= phase_end[i]);
    }
}

TEST_CASE("edge travel realization guards its inputs") {
  Graph p3 = path(3);
  REQUIRE_THROWS_AS(realize_edge_phases(p3, 0, {}), std::invalid_argument);
  REQUIRE_THROWS_AS(realize_edge_phases(Graph(0, {}), 1, {}),
                    std::invalid_argument);

  PhaseSpec overlap;
  overlap.stay = VertexSet({0});
  overlap.targets = VertexSet({0, 1});
  REQUIRE_THROWS_AS(realize_edge_phases(p3, 3, {overlap}), std::logic_error);

  PhaseSpec unheld;
  unheld.stay = VertexSet({1});
  unheld.targets = VertexSet({2});
  REQUIRE_THROWS_AS(realize_edge_phases(p3, 2, {unheld}), std::logic_error);

  PhaseSpec crowded;
  crowded.targets = VertexSet({0, 1, 2});
  REQUIRE_THROWS_AS(realize_edge_phases(p3, 2, {crowded}), std::logic_error);

  PhaseSpec unreachable;
  unreachable.targets = VertexSet({1});
  REQUIRE_THROWS_AS(realize_edge_phases(Graph(2, {}), 1, {unreachable}),
                    std::logic_error);
}
