#pragma once

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "copsweep/graph.hpp"

namespace copsweep {

// A balanced vertex separation: removing s leaves no edge between a and b,
// and both sides stay below the balance fraction (2/3 unless stated).
struct SeparationResult {
  VertexSet a, b, s;
  int alpha_num = 2, alpha_den = 3;
};

enum class SeparationViolation {
  NotPartition,
  NotDisjoint,
  SeparatorTooLarge,
  Unbalanced,
  CrossingEdge,
};

struct ValidationReport {
  struct Item {
    SeparationViolation code;
    std::string detail;
  };
  std::vector<Item> violations;
  bool valid() const { return violations.empty(); }
};

// Checks a separation against an (s, alpha) contract, alpha given as the
// fraction alpha_num/alpha_den of |V(G)|. Collects every violated condition
// rather than stopping at the first.
inline ValidationReport validate_separation(const Graph& g,
                                            const SeparationResult& r,
                                            long long s_bound,
                                            int alpha_num = 2,
                                            int alpha_den = 3) {
  ValidationReport rep;
  auto add = [&](SeparationViolation c, std::string d) {
    rep.violations.push_back({c, std::move(d)});
  };

  std::vector<int> owner(g.n(), 0);
  for (int v : r.a) ++owner[v];
  for (int v : r.b) ++owner[v];
  for (int v : r.s) ++owner[v];
  bool missing = false, doubled = false;
  for (int v = 0; v < g.n(); ++v) {
    if (owner[v] == 0) missing = true;
    if (owner[v] > 1) doubled = true;
  }
  if (missing) add(SeparationViolation::NotPartition, "uncovered vertices");
  if (doubled) add(SeparationViolation::NotDisjoint, "overlapping parts");

  if (r.s.size() > s_bound)
    add(SeparationViolation::SeparatorTooLarge,
        "|S|=" + std::to_string(r.s.size()) + " exceeds " +
            std::to_string(s_bound));

  auto unbalanced = [&](const VertexSet& part) {
    return (long long)part.size() * alpha_den > (long long)alpha_num * g.n();
  };
  if (unbalanced(r.a) || unbalanced(r.b))
    add(SeparationViolation::Unbalanced,
        "a part exceeds " + std::to_string(alpha_num) + "/" +
            std::to_string(alpha_den) + " of |V|");

  for (int u : r.a)
    for (int w : g.adj(u))
      if (r.b.contains(w)) {
        add(SeparationViolation::CrossingEdge,
            "edge " + std::to_string(u) + "-" + std::to_string(w));
        goto done;
      }
done:
  return rep;
}

// Greedy two-grouping: pieces sorted largest first, each placed on the
// currently smaller side (ties go to A). With every piece at most 2/3 of
// the total this always yields two sides of at most 2/3 each.
inline std::pair<VertexSet, VertexSet> group_pieces(
    std::vector<VertexSet> pieces) {
  std::stable_sort(pieces.begin(), pieces.end(),
                   [](const VertexSet& x, const VertexSet& y) {
                     if (x.size() != y.size()) return x.size() > y.size();
                     if (x.empty() || y.empty()) return !x.empty();
                     return x[0] < y[0];
                   });
  VertexSet a, b;
  for (auto& p : pieces) {
    if (a.size() <= b.size())
      a = VertexSet::unite(a, p);
    else
      b = VertexSet::unite(b, p);
  }
  return {a, b};
}

inline std::vector<VertexSet> components_without(const Graph& g,
                                                 const VertexSet& removed) {
  std::vector<int> state(g.n(), 0);  // 0 unseen, 1 removed, 2 visited
  for (int v : removed) state[v] = 1;
  std::vector<VertexSet> out;
  for (int s = 0; s < g.n(); ++s) {
    if (state[s] != 0) continue;
    std::vector<int> members;
    std::queue<int> q;
    state[s] = 2;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      members.push_back(u);
      for (int v : g.adj(u))
        if (state[v] == 0) {
          state[v] = 2;
          q.push(v);
        }
    }
    out.push_back(VertexSet(std::move(members)));
  }
  return out;
}

inline bool balanced_23(int part, int n) { return 3LL * part <= 2LL * n; }

// Minimum balanced separator by exhaustive search, the reference other
// strategies are measured against. Candidate sets are enumerated by
// increasing size (lexicographic within a size), components of G-S grouped
// greedily; the first candidate whose sides both fit the balance fraction
// wins.
inline SeparationResult exact_min_balanced_separator(const Graph& g,
                                                     int alpha_num = 2,
                                                     int alpha_den = 3,
                                                     int cap = 16) {
  if (g.n() > cap)
    throw std::invalid_argument("exact separator search capped at " +
                                std::to_string(cap) + " vertices");
  if (!is_connected(g))
    throw std::invalid_argument("exact separator search needs a connected graph");
  int n = g.n();
  auto balanced = [&](int part) {
    return (long long)part * alpha_den <= (long long)alpha_num * n;
  };
  for (int size = 0; size <= n; ++size) {
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      VertexSet s{std::vector<int>(idx)};
      auto [a, b] = group_pieces(components_without(g, s));
      if (balanced(a.size()) && balanced(b.size()))
        return {a, b, s, alpha_num, alpha_den};
      // next combination
      int i = size - 1;
      while (i >= 0 && idx[i] == n - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  throw std::logic_error("unreachable: S=V is always valid");
}

// Centroid of a tree: the vertex minimizing the largest component of T-v
// (smallest id on ties). Components are grouped greedily as above.
inline SeparationResult tree_centroid_separator(const Graph& g) {
  int n = g.n();
  if (n == 0) throw std::invalid_argument("empty tree");
  if (g.m() != n - 1 || !is_connected(g))
    throw std::invalid_argument("centroid separator needs a tree");
  if (n == 1) return {VertexSet(), VertexSet(), VertexSet({0})};

  std::vector<int> size(n, 1), order, parent(n, -1);
  order.reserve(n);
  {
    std::vector<int> stack{0};
    std::vector<bool> seen(n, false);
    seen[0] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      order.push_back(u);
      for (int v : g.adj(u))
        if (!seen[v]) {
          seen[v] = true;
          parent[v] = u;
          stack.push_back(v);
        }
    }
  }
  for (int i = n - 1; i > 0; --i) size[parent[order[i]]] += size[order[i]];

  int best = -1, best_max = n + 1;
  for (int v = 0; v < n; ++v) {
    int mx = n - size[v];
    for (int w : g.adj(v))
      if (w != parent[v]) mx = std::max(mx, size[w]);
    if (mx < best_max) {
      best_max = mx;
      best = v;
    }
  }
  VertexSet s(std::vector<int>{best});
  auto [a, b] = group_pieces(components_without(g, s));
  return {a, b, s};
}

// Separator from BFS levels rooted at vertex 0. The level minimizing
// (|L|, larger side, index) is cut; if that cut is unbalanced the exact
// search takes over on small graphs, otherwise this strategy fails.
inline SeparationResult bfs_level_separator(const Graph& g, int cap = 16) {
  if (g.n() == 0 || !is_connected(g))
    throw std::invalid_argument("level separator needs a connected graph");
  int n = g.n();
  auto dist = bfs_distances(g, 0);
  int depth = *std::max_element(dist.begin(), dist.end());
  std::vector<std::vector<int>> levels(depth + 1);
  for (int v = 0; v < n; ++v) levels[dist[v]].push_back(v);

  int best = -1;
  long long best_sz = -1, best_side = -1;
  std::vector<long long> below(depth + 2, 0);
  for (int l = 0; l <= depth; ++l)
    below[l + 1] = below[l] + (long long)levels[l].size();
  for (int l = 0; l <= depth; ++l) {
    long long sz = levels[l].size();
    long long side = std::max(below[l], n - below[l + 1]);
    if (best < 0 || sz < best_sz || (sz == best_sz && side < best_side)) {
      best = l;
      best_sz = sz;
      best_side = side;
    }
  }
  long long lo = below[best], hi = n - below[best + 1];
  if (balanced_23(int(std::max(lo, hi)), n)) {
    std::vector<int> av, bv;
    for (int l = 0; l < best; ++l)
      av.insert(av.end(), levels[l].begin(), levels[l].end());
    for (int l = best + 1; l <= depth; ++l)
      bv.insert(bv.end(), levels[l].begin(), levels[l].end());
    return {VertexSet(std::move(av)), VertexSet(std::move(bv)),
            VertexSet(std::vector<int>(levels[best]))};
  }
  if (n <= cap) return exact_min_balanced_separator(g, 2, 3, cap);
  throw std::runtime_error("no balanced BFS level and graph too large for exact search");
}

// A separator strategy works on a connected graph with local ids; the
// second argument maps those back to host-graph ids for strategies that
// consult host-level data (geometric coordinates).
using SeparatorFn =
    std::function<SeparationResult(const Graph&, const std::vector<int>&)>;

// Separates an arbitrary region of the host graph, in global ids. The
// strategy runs on the region's largest component, so the separator is
// never empty and every separation makes progress. Its two sides plus the
// remaining components are then regrouped greedily; each piece is at most
// 2/3 of the region, which keeps both groups within that bound as well.
inline SeparationResult separate_region(const Graph& host,
                                        const VertexSet& region,
                                        const SeparatorFn& fn) {
  SubgraphView view(host, region);
  auto comps = connected_components(view.graph());
  if (comps.size() == 1) {
    SeparationResult local = fn(view.graph(), view.globals());
    return {view.lift(local.a), view.lift(local.b), view.lift(local.s)};
  }

  std::size_t largest = 0;
  for (std::size_t i = 1; i < comps.size(); ++i)
    if (comps[i].size() > comps[largest].size()) largest = i;

  SubgraphView inner(host, view.lift(comps[largest]));
  SeparationResult local = fn(inner.graph(), inner.globals());

  std::vector<VertexSet> pieces{inner.lift(local.a), inner.lift(local.b)};
  for (std::size_t i = 0; i < comps.size(); ++i)
    if (i != largest) pieces.push_back(view.lift(comps[i]));
  auto [a, b] = group_pieces(std::move(pieces));
  return {a, b, inner.lift(local.s)};
}

}  // namespace copsweep
