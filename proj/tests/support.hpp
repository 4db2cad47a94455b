#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "copsweep/generators.hpp"
#include "copsweep/graph.hpp"
#include "copsweep/pathdecomp.hpp"
#include "copsweep/schedule.hpp"

namespace copsweep::testing {

// Random tree by uniform attachment (vertex v joins a random earlier
// vertex). Deliberately a different construction than gen_random_tree's
// Pruefer decoding, so the two can cross-check each other.
inline Graph random_attachment_tree(int n, std::uint64_t seed) {
  SplitStream rng(seed, 0x61747461636822ULL);
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v)
    edges.emplace_back(int(rng.next_below(std::uint64_t(v))), v);
  return Graph(n, edges);
}

// Random connected graph: attachment tree plus up to `extra` additional
// distinct non-tree edges.
inline Graph random_connected_graph(int n, std::uint64_t seed, int extra) {
  SplitStream rng(seed, 0x636f6e6e22ULL);
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v)
    edges.emplace_back(int(rng.next_below(std::uint64_t(v))), v);
  std::vector<std::vector<bool>> has(n, std::vector<bool>(n, false));
  for (auto [u, v] : edges) has[u][v] = has[v][u] = true;
  for (int t = 0; t < extra; ++t) {
    int u = int(rng.next_below(std::uint64_t(n)));
    int v = int(rng.next_below(std::uint64_t(n)));
    if (u == v || has[u][v]) continue;
    has[u][v] = has[v][u] = true;
    edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

// Backward game-tree search over every robber strategy against a fixed cop
// schedule: can some robber still be uncaught after the last round? This is
// the adversarial ground truth the territory oracle is measured against,
// computed the opposite way around (per-vertex survival instead of forward
// set evolution).
inline bool robber_escapes(const Graph& g, const Schedule& sched) {
  int n = g.n();
  if (sched.rounds.empty()) return n > 0;
  int rounds = int(sched.rounds.size());
  std::vector<std::vector<bool>> cop(rounds, std::vector<bool>(n, false));
  for (int k = 0; k < rounds; ++k)
    for (int v : sched.rounds[k].occupied) cop[k][v] = true;

  // surv[v]: a robber standing on v right after round k's moves can survive
  // the rest of the schedule.
  std::vector<bool> surv(n, true);
  for (int k = rounds - 2; k >= 0; --k) {
    std::vector<bool> prev(n, false);
    for (int v = 0; v < n; ++v) {
      if (cop[k + 1][v]) continue;  // cops land on v first
      bool ok = surv[v];            // passing is always available
      for (int w : g.adj(v))
        if (!ok && !cop[k + 1][w] && surv[w]) ok = true;
      prev[v] = ok;
    }
    surv = std::move(prev);
  }
  for (int v = 0; v < n; ++v)
    if (!cop[0][v] && surv[v]) return true;
  return false;
}

// All-pairs diameter via Floyd-Warshall, independent of the BFS sweep.
// Returns -1 for disconnected inputs.
inline int fw_diameter(const Graph& g) {
  int n = g.n();
  const int inf = 1 << 28;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (auto [u, v] : g.edge_list()) d[u][v] = d[v][u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  int best = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (d[i][j] >= inf) return -1;
      if (d[i][j] > best) best = d[i][j];
    }
  return best;
}

// Brute-force path-decomposition validity: vertex cover, edge cover, and
// the literal contiguity condition B_i cap B_k subseteq B_j for i<j<k.
inline bool brute_valid_decomposition(const Graph& g,
                                      const PathDecomposition& d) {
  int r = int(d.bags.size());
  std::vector<bool> seen(g.n(), false);
  for (auto& b : d.bags)
    for (int v : b) seen[v] = true;
  for (int v = 0; v < g.n(); ++v)
    if (!seen[v]) return false;
  for (auto [u, v] : g.edge_list()) {
    bool covered = false;
    for (auto& b : d.bags)
      if (b.contains(u) && b.contains(v)) covered = true;
    if (!covered) return false;
  }
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      for (int k = j + 1; k < r; ++k) {
        VertexSet both = VertexSet::intersect(d.bags[i], d.bags[k]);
        if (!VertexSet::minus(both, d.bags[j]).empty()) return false;
      }
  return true;
}

}  // namespace copsweep::testing
