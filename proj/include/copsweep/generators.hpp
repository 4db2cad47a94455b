#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "copsweep/graph.hpp"
#include "copsweep/hyperbolic.hpp"

namespace copsweep {

// SplitMix64 step (Steele, Lea, Flood). Fixed integer-state generator so
// every platform reproduces the same benchmark graphs bit for bit.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d649bb133111ebULL;
  return z ^ (z >> 31);
}

// One stream per (seed, key) pair. Vertex v always draws from the stream
// keyed on v, so enlarging a graph never perturbs earlier vertices.
class SplitStream {
public:
  SplitStream(std::uint64_t seed, std::uint64_t key) {
    state_ = seed ^ splitmix64(key);
  }
  std::uint64_t next_bits() { return splitmix64(state_); }
  // Uniform on [0, 1) with 53 random bits.
  double next_unit() { return double(next_bits() >> 11) * 0x1.0p-53; }
  // Uniform on {0, ..., n-1} via the 128-bit multiply reduction.
  std::uint64_t next_below(std::uint64_t n) {
    return std::uint64_t((static_cast<unsigned __int128>(next_bits()) * n) >>
                         64);
  }

private:
  std::uint64_t state_;
};

inline Graph gen_path(int n) {
  if (n < 1) throw std::invalid_argument("path needs at least one vertex");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

// k x k grid with row-major ids; carries the planar rotation system
// (up, right, down, left is clockwise in matrix orientation).
inline Graph gen_grid(int k) {
  if (k < 1) throw std::invalid_argument("grid needs side length >= 1");
  auto id = [k](int r, int c) { return r * k + c; };
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> rot(k * k);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) {
      if (c + 1 < k) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < k) edges.emplace_back(id(r, c), id(r + 1, c));
      auto& out = rot[id(r, c)];
      if (r > 0) out.push_back(id(r - 1, c));
      if (c + 1 < k) out.push_back(id(r, c + 1));
      if (r + 1 < k) out.push_back(id(r + 1, c));
      if (c > 0) out.push_back(id(r, c - 1));
    }
  return Graph(k * k, edges, std::move(rot));
}

// Uniform random labeled tree: decode a random Pruefer sequence with the
// pointer-scan algorithm.
inline Graph gen_random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("tree needs at least one vertex");
  if (n == 1) return Graph(1, {});
  SplitStream rng(seed, 0x74726565ULL);
  std::vector<int> seq(n - 2);
  for (auto& a : seq) a = int(rng.next_below(std::uint64_t(n)));

  std::vector<int> degree(n, 1);
  for (int a : seq) ++degree[a];
  std::vector<std::pair<int, int>> edges;
  int ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int a : seq) {
    edges.emplace_back(leaf, a);
    if (--degree[a] == 1 && a < ptr) {
      leaf = a;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n - 1);
  return Graph(n, edges);
}

struct HyperbolicParams {
  long long n = 0;
  double alpha_pl = 0.75;  // power-law parameter, >= 1/2
  double c_avg = 0;        // average-degree constant
  std::uint64_t seed = 0;
  double radius() const { return 2 * std::log(double(n)) + c_avg; }
};

struct GeometricGraph {
  Graph graph;
  std::vector<Polar> coords;
};

// Points on the hyperbolic disc of radius R = 2 ln n + C: angle uniform,
// radius by the inverse CDF of alpha*sinh(alpha*r)/(cosh(alpha*R) - 1);
// vertices within hyperbolic distance R are joined.
inline GeometricGraph gen_hyperbolic(const HyperbolicParams& params) {
  if (params.n < 1) throw std::invalid_argument("need at least one point");
  if (params.alpha_pl < 0.5)
    throw std::invalid_argument("power-law parameter below 1/2");
  double big_r = params.radius();
  if (!(big_r > 0)) throw std::invalid_argument("disc radius must be positive");

  double alpha = params.alpha_pl;
  std::vector<Polar> pts(params.n);
  for (long long v = 0; v < params.n; ++v) {
    double u_theta = SplitStream(params.seed, 2 * std::uint64_t(v)).next_unit();
    double u_r = SplitStream(params.seed, 2 * std::uint64_t(v) + 1).next_unit();
    pts[v].theta = 2 * std::acos(-1.0) * u_theta;
    pts[v].r = std::acosh(1 + u_r * (std::cosh(alpha * big_r) - 1)) / alpha;
  }

  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < int(params.n); ++u)
    for (int v = u + 1; v < int(params.n); ++v)
      if (hyperbolic_distance(pts[u], pts[v]) <= big_r) edges.emplace_back(u, v);
  return GeometricGraph{Graph(int(params.n), edges), std::move(pts)};
}

// Restricts a geometric graph to one maximum-size component (smallest
// member id breaks ties) and reindexes the coordinates with it.
inline GeometricGraph largest_component(const GeometricGraph& gg) {
  auto comps = connected_components(gg.graph);
  if (comps.empty()) return GeometricGraph{};
  const VertexSet* best = &comps[0];
  for (auto& c : comps)
    if (c.size() > best->size()) best = &c;
  SubgraphView view(gg.graph, *best);
  std::vector<Polar> coords;
  coords.reserve(best->size());
  for (int v : best->items()) coords.push_back(gg.coords[v]);
  return GeometricGraph{view.graph(), std::move(coords)};
}

}  // namespace copsweep
