#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "copsweep/graph.hpp"
#include "copsweep/separation.hpp"

namespace copsweep {

namespace mesh_detail {

// Combinatorial map of an embedded graph. Each edge contributes two darts;
// head[d] is the vertex a dart points at, twin[d] the opposite dart, and
// nxt/prv link the out-darts of a common tail in clockwise rotation order.
// Faces are the orbits of d -> nxt[twin[d]].
struct DartMesh {
  std::vector<int> head, twin, nxt, prv;
  std::vector<char> alive;
  std::vector<int> entry;  // one alive out-dart per vertex, -1 when none

  explicit DartMesh(const Graph& g) {
    if (!g.has_rotation())
      throw std::invalid_argument("dart mesh needs a rotation system");
    int n = g.n();
    entry.assign(n, -1);
    std::unordered_map<long long, int> open;
    for (int u = 0; u < n; ++u) {
      const auto& ring = g.rotation()[u];
      int base = int(head.size());
      for (int i = 0; i < int(ring.size()); ++i) {
        int v = ring[i], d = base + i;
        head.push_back(v);
        twin.push_back(-1);
        nxt.push_back(base + (i + 1) % int(ring.size()));
        prv.push_back(base + (i + int(ring.size()) - 1) % int(ring.size()));
        auto it = open.find(double_key(v, u));
        if (it != open.end()) {
          twin[d] = it->second;
          twin[it->second] = d;
          open.erase(it);
        } else {
          open.emplace(double_key(u, v), d);
        }
      }
      if (!ring.empty()) entry[u] = base;
    }
    alive.assign(head.size(), 1);
    if (!open.empty())
      throw std::invalid_argument("rotation system lists an unmatched edge");
  }

  static long long double_key(int a, int b) {
    return (long long)a << 32 | (unsigned)b;
  }
  int tail(int d) const { return head[twin[d]]; }
  int fnext(int d) const { return nxt[twin[d]]; }

  int dart_count() const { return int(head.size()); }

  // Number of face orbits over the alive darts.
  int face_count() const {
    std::vector<char> seen(head.size(), 0);
    int faces = 0;
    for (int d = 0; d < dart_count(); ++d) {
      if (!alive[d] || seen[d]) continue;
      ++faces;
      for (int e = d; !seen[e]; e = fnext(e)) seen[e] = 1;
    }
    return faces;
  }

  // Contracts the edge of dart d, merging v = head[d] into u = tail(d):
  // v's rotation is spliced into u's where the contracted edge sat, and
  // every dart that pointed at v is re-aimed at u.
  void contract(int d) {
    int t = twin[d], u = tail(d), v = head[d];
    if (u == v) throw std::logic_error("cannot contract a loop");
    std::vector<int> ring, v_part;
    for (int e = nxt[d]; e != d; e = nxt[e]) ring.push_back(e);
    for (int e = nxt[t]; e != t; e = nxt[e]) {
      ring.push_back(e);
      v_part.push_back(e);
    }
    for (int e : v_part) head[twin[e]] = u;
    alive[d] = alive[t] = 0;
    entry[v] = -1;
    if (ring.empty()) {
      entry[u] = -1;
      return;
    }
    int len = int(ring.size());
    for (int i = 0; i < len; ++i) {
      nxt[ring[i]] = ring[(i + 1) % len];
      prv[ring[(i + 1) % len]] = ring[i];
    }
    entry[u] = ring[0];
  }

  // Splits a face by the chord u-w, where u = tail(ea), w = head(eb) and
  // ea, eb are face-consecutive darts (fnext(ea) = eb), clipping the ear
  // at their shared corner head(ea). The chord dart cd sits in u's ring
  // just before ea and its twin dd in w's ring just after twin(eb), which
  // closes the triangle ea, eb, dd and routes the big face through cd.
  // Returns cd, the dart that stays on the big face.
  int add_chord(int ea, int eb) {
    int u = tail(ea), w = head[eb];
    int cd = dart_count(), dd = cd + 1;
    head.push_back(w);
    head.push_back(u);
    twin.push_back(dd);
    twin.push_back(cd);
    nxt.resize(dart_count());
    prv.resize(dart_count());
    alive.push_back(1);
    alive.push_back(1);
    int pa = prv[ea], tb = twin[eb];
    // at u: insert cd right before ea
    nxt[cd] = ea;
    prv[ea] = cd;
    nxt[pa] = cd;
    prv[cd] = pa;
    // at w: insert dd right after twin(eb)
    nxt[dd] = nxt[tb];
    prv[nxt[tb]] = dd;
    nxt[tb] = dd;
    prv[dd] = tb;
    return cd;
  }
};

inline void check_planar(const Graph& g) {
  DartMesh mesh(g);
  // A dartless map still has its outer face, which the orbit walk misses.
  int faces = g.m() == 0 ? 1 : mesh.face_count();
  if (g.n() - g.m() + faces != 2)
    throw std::invalid_argument(
        "rotation system is not a planar embedding of the graph");
}

// Clips ears off every face until all faces are triangles. An ear chord
// must join distinct vertices; chords duplicating an existing edge are a
// last resort (they keep the map planar, merely non-simple).
inline void triangulate(DartMesh& mesh, std::vector<std::vector<char>>& adj) {
  while (true) {
    std::vector<char> seen(mesh.dart_count(), 0);
    bool clipped = false, all_triangles = true;
    for (int d0 = 0; d0 < mesh.dart_count(); ++d0) {
      if (!mesh.alive[d0] || seen[d0]) continue;
      std::vector<int> cyc;
      for (int e = d0; !seen[e]; e = mesh.fnext(e)) {
        seen[e] = 1;
        cyc.push_back(e);
      }
      int len = int(cyc.size());
      if (len <= 3) continue;
      all_triangles = false;
      int fallback = -1;
      for (int i = 0; i < len && !clipped; ++i) {
        int ea = cyc[i], eb = cyc[(i + 1) % len];
        int u = mesh.tail(ea), w = mesh.head[eb];
        if (u == w) continue;
        if (adj[u][w]) {
          if (fallback < 0) fallback = i;
          continue;
        }
        mesh.add_chord(ea, eb);
        adj[u][w] = adj[w][u] = 1;
        clipped = true;
      }
      if (!clipped && fallback >= 0) {
        mesh.add_chord(cyc[fallback], cyc[(fallback + 1) % len]);
        clipped = true;
      }
      if (!clipped)
        throw std::logic_error("face cannot be triangulated");
      break;
    }
    if (all_triangles) return;
  }
}

}  // namespace mesh_detail

// Planar separator via the breadth-first layering construction: cut at two
// thin levels around the median level; if the band between them is still
// too heavy, shrink the inner disc to a single vertex, triangulate the
// band, and refine with a balanced fundamental cycle of a shallow
// spanning tree.
inline SeparationResult planar_cycle_separator(const Graph& g) {
  using mesh_detail::DartMesh;
  if (!g.has_rotation())
    throw std::invalid_argument("planar separator needs a rotation system");
  if (g.n() == 0) throw std::invalid_argument("empty graph");
  if (!is_connected(g))
    throw std::invalid_argument("planar separator needs a connected graph");
  mesh_detail::check_planar(g);

  int n = g.n();
  std::vector<int> dist = bfs_distances(g, 0);
  int depth = *std::max_element(dist.begin(), dist.end());
  std::vector<std::vector<int>> level(depth + 1);
  for (int v = 0; v < n; ++v) level[dist[v]].push_back(v);
  std::vector<long long> cum(depth + 1);
  for (int t = 0; t <= depth; ++t)
    cum[t] = (t ? cum[t - 1] : 0) + (long long)level[t].size();

  int t1 = 0;
  while (2 * cum[t1] < n) ++t1;
  long long k = cum[t1];

  auto level_size = [&](int t) {
    return t <= depth ? (long long)level[t].size() : 0;
  };
  // thin level at or below t1: |L(t)| + 2(t1 - t) <= 2*sqrt(k)
  int t0 = -1;
  for (int t = t1; t >= 0; --t) {
    long long lhs = level_size(t) + 2 * (t1 - t);
    if (lhs * lhs <= 4 * k) {
      t0 = t;
      break;
    }
  }
  // thin level above t1 (one past the deepest level counts as empty):
  // |L(t)| + 2(t - t1 - 1) <= 2*sqrt(n - k)
  int t2 = -1;
  for (int t = t1 + 1; t <= depth + 1; ++t) {
    long long lhs = level_size(t) + 2 * (t - t1 - 1);
    if (lhs * lhs <= 4 * (n - k)) {
      t2 = t;
      break;
    }
  }
  if (t0 < 0 || t2 < 0)
    throw std::logic_error("no thin breadth-first level exists");

  std::vector<int> sep = level[t0];
  if (t2 <= depth) sep.insert(sep.end(), level[t2].begin(), level[t2].end());
  std::vector<int> below, middle, above;
  for (int t = 0; t < t0; ++t)
    below.insert(below.end(), level[t].begin(), level[t].end());
  for (int t = t0 + 1; t < t2; ++t)
    middle.insert(middle.end(), level[t].begin(), level[t].end());
  for (int t = t2 + 1; t <= depth; ++t)
    above.insert(above.end(), level[t].begin(), level[t].end());

  long long mid = (long long)middle.size();
  if (3 * mid <= 2 * n) {
    auto [a, b] = group_pieces({VertexSet(std::move(below)),
                                VertexSet(std::move(middle)),
                                VertexSet(std::move(above))});
    return SeparationResult{a, b, VertexSet(std::move(sep))};
  }

  // Refinement: shrink levels <= t0 to the root, drop levels >= t2, keep
  // the band in a fresh mesh (one canonical copy per surviving edge, no
  // loops), and hunt for a balanced fundamental cycle.
  DartMesh mesh(g);
  for (int t = t0; t >= 1; --t)
    for (int v : level[t]) {
      int pd = -1;
      for (int e = mesh.entry[v], first = e;;) {
        int w = mesh.head[e];
        if (dist[w] == t - 1) {
          pd = mesh.twin[e];
          break;
        }
        e = mesh.nxt[e];
        if (e == first) break;
      }
      if (pd < 0) throw std::logic_error("missing tree edge during shrink");
      mesh.contract(pd);
    }

  std::vector<int> kept_globals;
  kept_globals.push_back(0);
  std::sort(middle.begin(), middle.end());
  kept_globals.insert(kept_globals.end(), middle.begin(), middle.end());
  int kn = int(kept_globals.size());
  std::vector<int> new_id(n, -1);
  for (int i = 0; i < kn; ++i) new_id[kept_globals[i]] = i;

  // canonical copy per parallel edge class: the pair's smallest dart id
  std::unordered_map<long long, int> canon;
  for (int d = 0; d < mesh.dart_count(); ++d) {
    if (!mesh.alive[d]) continue;
    int u = mesh.tail(d), w = mesh.head[d];
    if (u == w || new_id[u] < 0 || new_id[w] < 0) continue;
    long long key = DartMesh::double_key(std::min(u, w), std::max(u, w));
    int rep = std::min(d, mesh.twin[d]);
    auto it = canon.find(key);
    if (it == canon.end() || rep < it->second) canon[key] = rep;
  }
  std::vector<std::vector<int>> band_rot(kn);
  std::vector<std::pair<int, int>> band_edges;
  for (int i = 0; i < kn; ++i) {
    int u = kept_globals[i];
    int start = mesh.entry[u];
    if (start < 0) continue;
    for (int e = start;;) {
      int w = mesh.head[e];
      if (w != u && new_id[w] >= 0) {
        long long key = DartMesh::double_key(std::min(u, w), std::max(u, w));
        if (canon[key] == std::min(e, mesh.twin[e])) {
          band_rot[i].push_back(new_id[w]);
          if (i < new_id[w]) band_edges.emplace_back(i, new_id[w]);
        }
      }
      e = mesh.nxt[e];
      if (e == start) break;
    }
  }
  Graph band(kn, band_edges, std::move(band_rot));
  DartMesh bm(band);
  if (band.n() - band.m() + bm.face_count() != 2)
    throw std::logic_error("band extraction lost planarity");

  // shallow spanning tree first, chords after, so every fundamental cycle
  // stays short
  std::vector<int> parent(kn, -1), pdepth(kn, -1), tree_dart(kn, -1);
  std::queue<int> bfs;
  bfs.push(0);
  pdepth[0] = 0;
  while (!bfs.empty()) {
    int u = bfs.front();
    bfs.pop();
    int start = bm.entry[u];
    if (start < 0) continue;
    for (int e = start;;) {
      int w = bm.head[e];
      if (pdepth[w] < 0) {
        pdepth[w] = pdepth[u] + 1;
        parent[w] = u;
        tree_dart[w] = e;
        bfs.push(w);
      }
      e = bm.nxt[e];
      if (e == start) break;
    }
  }

  std::vector<std::vector<char>> adj(kn, std::vector<char>(kn, 0));
  for (auto [u, w] : band.edge_list()) adj[u][w] = adj[w][u] = 1;
  mesh_detail::triangulate(bm, adj);

  std::vector<int> face_of(bm.dart_count(), -1);
  std::vector<std::vector<int>> face_darts;
  for (int d = 0; d < bm.dart_count(); ++d) {
    if (!bm.alive[d] || face_of[d] >= 0) continue;
    int f = int(face_darts.size());
    face_darts.emplace_back();
    for (int e = d; face_of[e] < 0; e = bm.fnext(e)) {
      face_of[e] = f;
      face_darts[f].push_back(e);
    }
  }

  std::vector<std::tuple<int, int, int>> candidates;
  for (int d = 0; d < bm.dart_count(); ++d) {
    if (!bm.alive[d] || d > bm.twin[d]) continue;
    int u = bm.tail(d), w = bm.head[d];
    if (tree_dart[w] == d || tree_dart[u] == bm.twin[d]) continue;
    candidates.emplace_back(std::min(u, w), std::max(u, w), d);
  }
  std::sort(candidates.begin(), candidates.end());

  long long band_cost = kn - 1;  // the shrunken root costs nothing
  for (auto& cand : candidates) {
    int d0 = std::get<2>(cand);
    int u = bm.tail(d0), w = bm.head[d0];
    std::vector<char> on_cycle(kn, 0);
    std::vector<char> blocked(bm.dart_count(), 0);
    blocked[d0] = blocked[bm.twin[d0]] = 1;
    int x = u, y = w;
    auto step_up = [&](int& v) {
      blocked[tree_dart[v]] = blocked[bm.twin[tree_dart[v]]] = 1;
      v = parent[v];
    };
    on_cycle[x] = on_cycle[y] = 1;
    while (pdepth[x] > pdepth[y]) {
      step_up(x);
      on_cycle[x] = 1;
    }
    while (pdepth[y] > pdepth[x]) {
      step_up(y);
      on_cycle[y] = 1;
    }
    while (x != y) {
      step_up(x);
      step_up(y);
      on_cycle[x] = on_cycle[y] = 1;
    }

    // flood the faces on one side of the cycle
    std::vector<char> face_in(face_darts.size(), 0);
    std::queue<int> fq;
    face_in[face_of[d0]] = 1;
    fq.push(face_of[d0]);
    while (!fq.empty()) {
      int f = fq.front();
      fq.pop();
      for (int e : face_darts[f]) {
        if (blocked[e]) continue;
        int f2 = face_of[bm.twin[e]];
        if (!face_in[f2]) {
          face_in[f2] = 1;
          fq.push(f2);
        }
      }
    }
    std::vector<char> v_in(kn, 0);
    for (int d = 0; d < bm.dart_count(); ++d)
      if (bm.alive[d] && face_in[face_of[d]]) v_in[bm.tail(d)] = 1;

    long long cyc_cost = 0;
    for (int v = 1; v < kn; ++v) cyc_cost += on_cycle[v];
    long long in_cost = 0;
    for (int v = 1; v < kn; ++v)
      if (!on_cycle[v] && v_in[v]) ++in_cost;
    long long out_cost = band_cost - cyc_cost - in_cost;
    if (3 * in_cost > 2 * band_cost || 3 * out_cost > 2 * band_cost) continue;

    std::vector<int> inside, outside;
    for (int v = 1; v < kn; ++v) {
      if (on_cycle[v]) {
        sep.push_back(kept_globals[v]);
      } else {
        (v_in[v] ? inside : outside).push_back(kept_globals[v]);
      }
    }
    auto [a, b] = group_pieces(
        {VertexSet(std::move(below)), VertexSet(std::move(above)),
         VertexSet(std::move(inside)), VertexSet(std::move(outside))});
    return SeparationResult{a, b, VertexSet(std::move(sep))};
  }
  throw std::logic_error("no balanced fundamental cycle in the band");
}

}  // namespace copsweep
