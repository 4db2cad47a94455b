#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "copsweep/graph.hpp"
#include "copsweep/schedule.hpp"
#include "copsweep/travel.hpp"

namespace copsweep {

struct PathDecomposition {
  std::vector<VertexSet> bags;

  int width() const {
    int w = -1;
    for (auto& b : bags) w = std::max(w, b.size() - 1);
    return w;
  }
};

enum class DecompositionViolation {
  UncoveredVertex,
  UncoveredEdge,
  NotContiguous,
};

struct DecompositionReport {
  struct Item {
    DecompositionViolation code;
    std::string detail;
  };
  std::vector<Item> violations;
  int width = -1;
  bool valid() const { return violations.empty(); }
};

// Checks the three path-decomposition conditions: bags cover all vertices,
// every edge lies inside some bag, and each vertex's bag occurrences form
// one contiguous run.
inline DecompositionReport validate_path_decomposition(
    const Graph& g, const PathDecomposition& d) {
  for (auto& b : d.bags)
    for (int v : b)
      if (v < 0 || v >= g.n())
        throw std::invalid_argument("bag vertex " + std::to_string(v) +
                                    " outside the graph");
  DecompositionReport rep;
  rep.width = d.width();
  auto add = [&](DecompositionViolation c, std::string detail) {
    rep.violations.push_back({c, std::move(detail)});
  };

  std::vector<int> first(g.n(), -1), last(g.n(), -1), count(g.n(), 0);
  for (int i = 0; i < int(d.bags.size()); ++i)
    for (int v : d.bags[i]) {
      if (first[v] < 0) first[v] = i;
      last[v] = i;
      ++count[v];
    }
  for (int v = 0; v < g.n(); ++v) {
    if (first[v] < 0) {
      add(DecompositionViolation::UncoveredVertex,
          "vertex " + std::to_string(v) + " in no bag");
    } else if (count[v] != last[v] - first[v] + 1) {
      add(DecompositionViolation::NotContiguous,
          "vertex " + std::to_string(v) + " reappears after a gap");
    }
  }
  for (auto [u, v] : g.edge_list()) {
    bool covered = false;
    for (auto& b : d.bags)
      if (b.contains(u) && b.contains(v)) {
        covered = true;
        break;
      }
    if (!covered)
      add(DecompositionViolation::UncoveredEdge,
          "edge " + std::to_string(u) + "-" + std::to_string(v) + " in no bag");
  }
  return rep;
}

// Merges consecutive bags where one contains the other (keeping the
// superset) until none remain. The result has nonempty symmetric
// differences between neighbors, and nonempty intersections too; an empty
// intersection would mean the input graph was disconnected, which the
// bag-sweep cannot handle and rejects here.
inline PathDecomposition normalize_decomposition(const PathDecomposition& d) {
  std::vector<VertexSet> out;
  for (auto& bag : d.bags) {
    VertexSet b = bag;
    bool consumed = false;
    while (!out.empty()) {
      if (VertexSet::minus(b, out.back()).empty()) {
        consumed = true;  // subset of the previous bag
        break;
      }
      if (VertexSet::minus(out.back(), b).empty()) {
        out.pop_back();
        continue;
      }
      break;
    }
    if (!consumed) out.push_back(std::move(b));
  }
  for (std::size_t i = 1; i < out.size(); ++i)
    if (VertexSet::disjoint(out[i - 1], out[i]))
      throw std::invalid_argument(
          "consecutive bags share no vertex: decomposition covers a "
          "disconnected graph");
  return {std::move(out)};
}

// Sliding-window decomposition of the k-by-k grid in row-major ids: bag t
// holds the k+1 consecutive vertices t..t+k, so all k*k-k bags have width
// exactly k. Pairs with gen_grid.
inline PathDecomposition grid_path_decomposition(int k) {
  if (k < 1) throw std::invalid_argument("grid needs k >= 1");
  if (k == 1) return {{VertexSet({0})}};
  std::vector<VertexSet> bags;
  for (int t = 0; t < k * k - k; ++t) {
    std::vector<int> w(k + 1);
    for (int i = 0; i <= k; ++i) w[i] = t + i;
    bags.push_back(VertexSet(std::move(w)));
  }
  return {std::move(bags)};
}

// Decomposition of a tree along its heavy paths. The spine from the root
// (always descending into the largest subtree, smallest id on ties) gets
// one bag per edge; each branch hanging off a spine vertex is decomposed
// recursively and spliced in just before that vertex's outgoing spine bag,
// with the spine vertex added to every spliced bag. A branch never holds
// more than half of its component, so bags gain at most one vertex per
// ceil(log2 n) nesting levels, and a bare path keeps width 1.
inline PathDecomposition tree_path_decomposition(const Graph& g) {
  if (g.n() < 1 || g.m() != g.n() - 1 || !is_connected(g))
    throw std::invalid_argument("decomposition generator needs a tree");

  std::vector<int> size(g.n(), 0);
  std::vector<VertexSet> bags;
  std::vector<int> anchors;

  std::function<void(int, int)> go = [&](int root, int block) {
    // Subtree sizes below root, not crossing the blocked spine parent.
    std::vector<std::pair<int, int>> stack{{root, block}}, order;
    while (!stack.empty()) {
      auto [u, p] = stack.back();
      stack.pop_back();
      order.emplace_back(u, p);
      size[u] = 1;
      for (int w : g.adj(u))
        if (w != p) stack.emplace_back(w, u);
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it)
      if (it->first != root) size[it->second] += size[it->first];

    auto emit = [&](std::vector<int> bag) {
      for (int a : anchors) bag.push_back(a);
      bags.push_back(VertexSet(std::move(bag)));
    };

    int u = root, p = block;
    while (true) {
      int heavy = -1;
      for (int w : g.adj(u))
        if (w != p && (heavy < 0 || size[w] > size[heavy])) heavy = w;
      if (heavy < 0) {
        if (u == root) emit({u});  // one-vertex component
        return;
      }
      for (int w : g.adj(u))
        if (w != p && w != heavy) {
          anchors.push_back(u);
          go(w, u);
          anchors.pop_back();
        }
      emit({u, heavy});
      p = u;
      u = heavy;
    }
  };
  go(0, -1);
  return {std::move(bags)};
}

// Decomposition from a breadth-first vertex order of any connected graph:
// bag i holds vertex i of the order plus every earlier vertex that still
// has a neighbor at position i or later. Valid on all connected graphs;
// width is whatever the order yields (a fallback where no structural
// decomposition applies).
inline PathDecomposition ordered_path_decomposition(const Graph& g) {
  if (g.n() < 1 || !is_connected(g))
    throw std::invalid_argument("decomposition needs a connected graph");
  std::vector<int> order, pos(g.n(), -1);
  order.reserve(g.n());
  {
    std::queue<int> q;
    pos[0] = 0;
    q.push(0);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      order.push_back(u);
      for (int v : g.adj(u))
        if (pos[v] < 0) {
          pos[v] = 1;
          q.push(v);
        }
    }
    for (int i = 0; i < g.n(); ++i) pos[order[i]] = i;
  }
  std::vector<int> reach(g.n(), 0);  // last position each vertex must persist to
  for (int v = 0; v < g.n(); ++v) {
    reach[v] = pos[v];
    for (int w : g.adj(v)) reach[v] = std::max(reach[v], pos[w]);
  }
  std::vector<VertexSet> bags;
  bags.reserve(g.n());
  for (int i = 0; i < g.n(); ++i) {
    std::vector<int> bag;
    for (int j = 0; j <= i; ++j)
      if (j == i || reach[order[j]] >= i) bag.push_back(order[j]);
    bags.push_back(VertexSet(std::move(bag)));
  }
  return {std::move(bags)};
}

// Bag-sweep schedule: width+1 cops occupy the bags left to right. Between
// bags the cops on the intersection hold position, the rest relocate; the
// robber can never cross from unswept to swept territory because every
// such edge lives inside some current bag boundary.
inline RunResult pw_schedule(const Graph& g, const PathDecomposition& d,
                             TravelModel model) {
  DecompositionReport rep = validate_path_decomposition(g, d);
  if (!rep.valid())
    throw std::invalid_argument("invalid path decomposition: " +
                                rep.violations.front().detail);
  {
    PathDecomposition norm = normalize_decomposition(d);
    if (norm.bags.size() != d.bags.size())
      throw std::invalid_argument("decomposition is not normalized");
  }
  int team = rep.width + 1;

  if (model == TravelModel::Teleport) {
    RunResult run;
    run.stats.model = "teleport";
    for (int i = 0; i < int(d.bags.size()); ++i) {
      RoundRecord r;
      r.round = i + 1;
      r.iteration = i + 1;
      r.occupied = d.bags[i];
      r.event = EventKind::Bag;
      r.index = std::to_string(i + 1);
      run.schedule.rounds.push_back(std::move(r));
    }
    run.stats.iterations = int(d.bags.size());
    run.stats.rounds = int(d.bags.size());
    run.stats.max_concurrent_cops = team;
    return run;
  }

  std::vector<PhaseSpec> phases;
  for (int i = 0; i < int(d.bags.size()); ++i) {
    PhaseSpec ph;
    ph.event = EventKind::Bag;
    ph.index = std::to_string(i + 1);
    if (i == 0) {
      ph.targets = d.bags[0];
    } else {
      ph.stay = VertexSet::intersect(d.bags[i - 1], d.bags[i]);
      ph.targets = VertexSet::minus(d.bags[i], d.bags[i - 1]);
    }
    phases.push_back(std::move(ph));
  }
  return realize_edge_phases(g, team, phases);
}

}  // namespace copsweep
