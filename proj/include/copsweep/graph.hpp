#pragma once

#include <algorithm>
#include <cassert>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "copsweep/bitset.hpp"

namespace copsweep {

// Sorted set of vertex ids. All library functions keep these sorted and
// duplicate-free so that every traversal order is deterministic.
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(std::vector<int> xs) : v_(std::move(xs)) {
    std::sort(v_.begin(), v_.end());
    v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
  }
  static VertexSet full(int n) {
    std::vector<int> xs(n);
    for (int i = 0; i < n; ++i) xs[i] = i;
    VertexSet s;
    s.v_ = std::move(xs);
    return s;
  }

  int size() const { return int(v_.size()); }
  bool empty() const { return v_.empty(); }
  bool contains(int x) const {
    return std::binary_search(v_.begin(), v_.end(), x);
  }
  int operator[](int i) const { return v_[i]; }

  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }
  const std::vector<int>& items() const { return v_; }

  bool operator==(const VertexSet& o) const { return v_ == o.v_; }
  bool operator!=(const VertexSet& o) const { return v_ != o.v_; }

  static VertexSet unite(const VertexSet& a, const VertexSet& b) {
    std::vector<int> out;
    out.reserve(a.v_.size() + b.v_.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                   std::back_inserter(out));
    VertexSet s;
    s.v_ = std::move(out);
    return s;
  }
  static VertexSet minus(const VertexSet& a, const VertexSet& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
    VertexSet s;
    s.v_ = std::move(out);
    return s;
  }
  static VertexSet intersect(const VertexSet& a, const VertexSet& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    VertexSet s;
    s.v_ = std::move(out);
    return s;
  }
  static bool disjoint(const VertexSet& a, const VertexSet& b) {
    return intersect(a, b).empty();
  }

  Bits to_bits(int n) const {
    Bits b(n);
    for (int x : v_) b.set(x);
    return b;
  }
  static VertexSet from_bits(const Bits& b) {
    std::vector<int> out;
    b.for_each([&](int x) { out.push_back(x); });
    VertexSet s;
    s.v_ = std::move(out);
    return s;
  }

private:
  std::vector<int> v_;
};

enum class ParseErrorKind {
  MalformedLine,
  IdOutOfRange,
  SelfLoop,
  DuplicateEdge,
  Truncated,
  RotationMismatch,
};

class ParseError : public std::runtime_error {
public:
  ParseError(ParseErrorKind kind, int line, const std::string& what)
      : std::runtime_error("parse error (line " + std::to_string(line) +
                           "): " + what),
        kind_(kind),
        line_(line) {}
  ParseErrorKind kind() const { return kind_; }
  int line() const { return line_; }

private:
  ParseErrorKind kind_;
  int line_;
};

// Simple undirected graph. Immutable once constructed; adjacency lists are
// kept sorted. Optionally carries a rotation system (clockwise neighbor
// order per vertex) describing a planar embedding, and for moderate n a
// bit-matrix of the adjacency used by the territory oracle.
class Graph {
public:
  Graph() = default;
  Graph(int n, const std::vector<std::pair<int, int>>& edges,
        std::vector<std::vector<int>> rotation = {})
      : n_(n), rot_(std::move(rotation)) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    adj_.resize(n);
    for (auto [u, v] : edges) {
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw std::invalid_argument("edge endpoint out of range");
      if (u == v) throw std::invalid_argument("self-loop");
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    m_ = int(edges.size());
    for (auto& a : adj_) {
      std::sort(a.begin(), a.end());
      if (std::adjacent_find(a.begin(), a.end()) != a.end())
        throw std::invalid_argument("duplicate edge");
    }
    if (!rot_.empty()) check_rotation();
    if (n_ <= kBitRowCap) {
      bits_.assign(n_, Bits(n_));
      for (int u = 0; u < n_; ++u)
        for (int v : adj_[u]) bits_[u].set(v);
    }
  }

  int n() const { return n_; }
  int m() const { return m_; }
  const std::vector<int>& adj(int v) const { return adj_[v]; }
  int degree(int v) const { return int(adj_[v].size()); }
  bool has_edge(int u, int v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  bool has_rotation() const { return !rot_.empty(); }
  const std::vector<std::vector<int>>& rotation() const { return rot_; }

  bool has_bit_rows() const { return !bits_.empty(); }
  const Bits& bit_row(int v) const { return bits_[v]; }

  std::vector<std::pair<int, int>> edge_list() const {
    std::vector<std::pair<int, int>> es;
    es.reserve(m_);
    for (int u = 0; u < n_; ++u)
      for (int v : adj_[u])
        if (u < v) es.emplace_back(u, v);
    return es;
  }

private:
  static constexpr int kBitRowCap = 16384;

  void check_rotation() {
    if (int(rot_.size()) != n_)
      throw std::invalid_argument("rotation system size mismatch");
    for (int v = 0; v < n_; ++v) {
      std::vector<int> r = rot_[v];
      std::sort(r.begin(), r.end());
      if (r != adj_[v])
        throw std::invalid_argument("rotation of vertex " + std::to_string(v) +
                                    " does not list its neighbors");
    }
  }

  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<int>> rot_;
  std::vector<Bits> bits_;
};

// ----- file format -------------------------------------------------------
//
//   n m
//   u v          (m lines, one per edge)
//   a b c ...    (optional: n lines, clockwise neighbor order per vertex)
//
// Blank lines and lines starting with '#' are ignored before the optional
// rotation block; inside it, a blank line stands for an isolated vertex.

namespace detail {
inline bool parse_ints(const std::string& line, std::vector<long long>& out) {
  out.clear();
  std::istringstream ss(line);
  long long x;
  while (ss >> x) out.push_back(x);
  ss.clear();
  std::string rest;
  ss >> rest;
  return rest.empty();
}
}  // namespace detail

inline Graph load_graph(std::istream& in) {
  std::string line;
  int lineno = 0;
  auto next_data_line = [&](std::string& out) {
    while (std::getline(in, line)) {
      ++lineno;
      size_t p = line.find_first_not_of(" \t\r");
      if (p == std::string::npos || line[p] == '#') continue;
      out = line;
      return true;
    }
    return false;
  };

  std::string cur;
  if (!next_data_line(cur))
    throw ParseError(ParseErrorKind::Truncated, lineno, "missing header");
  std::vector<long long> nums;
  if (!detail::parse_ints(cur, nums) || nums.size() != 2 || nums[0] < 0 ||
      nums[1] < 0)
    throw ParseError(ParseErrorKind::MalformedLine, lineno,
                     "header must be 'n m'");
  int n = int(nums[0]);
  long long m = nums[1];

  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<bool>> seen;  // only for small n; otherwise sort later
  edges.reserve(size_t(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_data_line(cur))
      throw ParseError(ParseErrorKind::Truncated, lineno,
                       "expected " + std::to_string(m) + " edges");
    if (!detail::parse_ints(cur, nums) || nums.size() != 2)
      throw ParseError(ParseErrorKind::MalformedLine, lineno,
                       "edge line must be 'u v'");
    long long u = nums[0], v = nums[1];
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError(ParseErrorKind::IdOutOfRange, lineno,
                       "vertex id out of range");
    if (u == v)
      throw ParseError(ParseErrorKind::SelfLoop, lineno, "self-loop");
    edges.emplace_back(int(u), int(v));
  }
  {
    auto es = edges;
    for (auto& e : es)
      if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(es.begin(), es.end());
    if (std::adjacent_find(es.begin(), es.end()) != es.end())
      throw ParseError(ParseErrorKind::DuplicateEdge, 0, "duplicate edge");
  }

  // Optional rotation block: exactly n raw lines if anything follows.
  std::vector<std::vector<int>> rot;
  std::string peek;
  if (next_data_line(peek)) {
    rot.resize(n);
    std::string rline = peek;
    for (int v = 0; v < n; ++v) {
      if (v > 0) {
        if (!std::getline(in, rline))
          throw ParseError(ParseErrorKind::Truncated, lineno,
                           "rotation block needs one line per vertex");
        ++lineno;
      }
      if (!detail::parse_ints(rline, nums))
        throw ParseError(ParseErrorKind::MalformedLine, lineno,
                         "bad rotation line");
      rot[v].reserve(nums.size());
      for (long long x : nums) {
        if (x < 0 || x >= n)
          throw ParseError(ParseErrorKind::IdOutOfRange, lineno,
                           "rotation vertex id out of range");
        rot[v].push_back(int(x));
      }
    }
  }

  try {
    return Graph(n, edges, std::move(rot));
  } catch (const std::invalid_argument& e) {
    throw ParseError(ParseErrorKind::RotationMismatch, 0, e.what());
  }
}

inline Graph load_graph_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  return load_graph(f);
}

inline void save_graph(const Graph& g, std::ostream& out) {
  out << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edge_list()) out << u << ' ' << v << '\n';
  if (g.has_rotation()) {
    for (int v = 0; v < g.n(); ++v) {
      const auto& r = g.rotation()[v];
      for (size_t i = 0; i < r.size(); ++i) {
        if (i) out << ' ';
        out << r[i];
      }
      out << '\n';
    }
  }
}

// ----- basic traversals --------------------------------------------------

inline std::vector<int> bfs_distances(const Graph& g, int src) {
  std::vector<int> dist(g.n(), -1);
  std::queue<int> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : g.adj(u))
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
  }
  return dist;
}

inline std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<int> comp(g.n(), -1);
  std::vector<VertexSet> out;
  for (int s = 0; s < g.n(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> members;
    std::queue<int> q;
    comp[s] = int(out.size());
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      members.push_back(u);
      for (int v : g.adj(u))
        if (comp[v] < 0) {
          comp[v] = comp[s];
          q.push(v);
        }
    }
    out.push_back(VertexSet(std::move(members)));
  }
  return out;
}

inline bool is_connected(const Graph& g) {
  if (g.n() == 0) return true;
  auto d = bfs_distances(g, 0);
  return std::find(d.begin(), d.end(), -1) == d.end();
}

// Eccentricity sweep over all vertices. Requires a connected graph.
inline int diameter(const Graph& g) {
  if (g.n() == 0) throw std::invalid_argument("diameter of empty graph");
  int best = 0;
  for (int s = 0; s < g.n(); ++s) {
    auto d = bfs_distances(g, s);
    for (int x : d) {
      if (x < 0) throw std::invalid_argument("diameter of disconnected graph");
      best = std::max(best, x);
    }
  }
  return best;
}

// Shortest u-v path. Among equally short continuations the smallest next
// vertex id wins, so the result is unique.
inline std::vector<int> shortest_path(const Graph& g, int u, int v) {
  auto dist = bfs_distances(g, v);
  if (dist[u] < 0) throw std::invalid_argument("no u-v path");
  std::vector<int> path{u};
  int cur = u;
  while (cur != v) {
    for (int w : g.adj(cur))  // sorted: first hit is smallest id
      if (dist[w] == dist[cur] - 1) {
        cur = w;
        break;
      }
    path.push_back(cur);
  }
  return path;
}

inline VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
  if (g.has_bit_rows()) {
    Bits b = s.to_bits(g.n());
    for (int v : s) b |= g.bit_row(v);
    return VertexSet::from_bits(b);
  }
  std::vector<int> out(s.begin(), s.end());
  for (int v : s)
    for (int w : g.adj(v)) out.push_back(w);
  return VertexSet(std::move(out));
}

// Induced subgraph with local ids 0..|kept|-1 (sorted by global id), plus
// both directions of the id mapping. A rotation system on the host carries
// over by dropping absent neighbors.
class SubgraphView {
public:
  SubgraphView(const Graph& host, const VertexSet& kept) : kept_(kept) {
    to_global_.assign(kept.begin(), kept.end());
    to_local_.assign(host.n(), -1);
    for (int i = 0; i < int(to_global_.size()); ++i)
      to_local_[to_global_[i]] = i;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < int(to_global_.size()); ++i)
      for (int w : host.adj(to_global_[i])) {
        int j = to_local_[w];
        if (j > i) edges.emplace_back(i, j);
      }
    std::vector<std::vector<int>> rot;
    if (host.has_rotation()) {
      rot.resize(to_global_.size());
      for (int i = 0; i < int(to_global_.size()); ++i)
        for (int w : host.rotation()[to_global_[i]])
          if (to_local_[w] >= 0) rot[i].push_back(to_local_[w]);
    }
    local_ = Graph(int(to_global_.size()), edges, std::move(rot));
  }

  const Graph& graph() const { return local_; }
  const VertexSet& kept() const { return kept_; }
  int global_id(int local) const { return to_global_[local]; }
  int local_id(int global) const { return to_local_[global]; }
  const std::vector<int>& globals() const { return to_global_; }

  VertexSet lift(const VertexSet& local_set) const {
    std::vector<int> out;
    out.reserve(local_set.size());
    for (int x : local_set) out.push_back(to_global_[x]);
    return VertexSet(std::move(out));
  }

private:
  VertexSet kept_;
  Graph local_;
  std::vector<int> to_global_;
  std::vector<int> to_local_;
};

inline SubgraphView induced_subgraph(const Graph& g, const VertexSet& kept) {
  return SubgraphView(g, kept);
}

}  // namespace copsweep
