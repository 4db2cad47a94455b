#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "copsweep/graph.hpp"
#include "copsweep/separation.hpp"

namespace copsweep {

// Size-budget function: how many separator vertices a region of a given
// size is allowed to cost. Positive on every size it is queried at.
using SizeFn = std::function<long long(long long)>;

inline long long checked_budget(const SizeFn& f, long long x) {
  long long v = f(x);
  if (v < 1)
    throw std::invalid_argument("size budget must be positive, got " +
                                std::to_string(v) + " at " + std::to_string(x));
  return v;
}

// Smallest k with (3/2)^k >= n, plus one. Computed on integers so values
// next to exact powers of 3/2 cannot be rounded the wrong way.
inline long long ell(long long n) {
  if (n < 1) throw std::invalid_argument("ell needs n >= 1");
  unsigned __int128 three = 1, two_n = (unsigned __int128)n;
  long long k = 0;
  while (three < two_n) {
    three *= 3;
    two_n *= 2;
    ++k;
  }
  return k + 1;
}

// Total cop budget: f(n) plus one group per recursion level, the level-i
// group sized by the largest region possible there, floor((2/3)^i n).
// Levels whose floor reaches 0 do not exist and contribute nothing.
inline long long cop_bound_C_f(const SizeFn& f, long long n) {
  long long total = checked_budget(f, n);
  unsigned __int128 pow2 = 1, pow3 = 1;
  for (long long i = 0; i <= ell(n); ++i) {
    long long arg = (long long)((unsigned __int128)n * pow2 / pow3);
    if (arg >= 1) total += checked_budget(f, arg);
    pow2 *= 2;
    pow3 *= 3;
  }
  return total;
}

// Worst-case node count of a separation tree over regions of size x, under
// budget f and clearing threshold f(n): 0 below size 1, a single node up to
// the threshold, otherwise one node plus the worst balanced split after
// f(x) vertices went to the separator.
inline std::vector<long long> phi_table(const SizeFn& f, long long n,
                                        long long x_max) {
  if (n < 1) throw std::invalid_argument("phi needs n >= 1");
  long long fn = checked_budget(f, n);
  std::vector<long long> t(std::max<long long>(x_max, 0) + 1, 0);
  for (long long x = 1; x <= x_max; ++x) {
    if (x <= fn) {
      t[x] = 1;
      continue;
    }
    long long fx = checked_budget(f, x);
    long long best = 0;
    for (long long y = (x + 2) / 3; y <= 2 * x / 3; ++y) {
      long long rest = x - fx - y;
      long long cand = t[y] + (rest >= 1 ? t[rest] : 0);
      best = std::max(best, cand);
    }
    t[x] = best + 1;
  }
  return t;
}

inline long long phi(const SizeFn& f, long long n, long long x) {
  if (x < 1) return 0;
  return phi_table(f, n, x)[x];
}

// Closed-form majorant of phi: 6x/f(n) - 1, valid from x = f(n) up.
inline double phi_bound(const SizeFn& f, long long n, long long x) {
  long long fn = checked_budget(f, n);
  if (x < fn)
    throw std::invalid_argument("phi bound only holds for x >= f(n)");
  return 6.0 * (double)x / (double)fn - 1.0;
}

// Capture-time bound D * n / f(n), without its hidden constant; callers
// compare ratios against it rather than absolute values.
inline double capture_time_bound(long long D, long long n, const SizeFn& f) {
  if (D < 0 || n < 1)
    throw std::invalid_argument("capture bound needs D >= 0 and n >= 1");
  return (double)D * (double)n / (double)checked_budget(f, n);
}

// All closed-form bounds for one (f, n) pair, evaluated once.
struct BoundProfile {
  SizeFn f;
  long long n = 0;
  long long levels = 0;      // ell(n)
  long long cop_budget = 0;  // cop_bound_C_f(f, n)
  double node_bound = 0;     // 6n/f(n) - 1

  double capture_bound(long long diameter) const {
    return capture_time_bound(diameter, n, f);
  }
};

inline BoundProfile make_bound_profile(SizeFn f, long long n) {
  BoundProfile p;
  p.n = n;
  p.levels = ell(n);
  p.cop_budget = cop_bound_C_f(f, n);
  p.node_bound = phi_bound(f, n, n);
  p.f = std::move(f);
  return p;
}

// Binary separation tree. Nodes are keyed by binary-string indices: the
// root is "", the two sides of a split get suffix '1' and '0'. Internal
// nodes carry the separator that was removed; empty sides produce no child.
struct SeparationTree {
  std::map<std::string, VertexSet> nodes;
  std::map<std::string, VertexSet> separators;
  long long threshold = 0;
  std::vector<std::string> order;  // construction order: depth-first, '1' first

  bool is_leaf(const std::string& key) const {
    return (long long)nodes.at(key).size() <= threshold;
  }
  long long height() const {
    std::size_t h = 0;
    for (auto& [k, v] : nodes) h = std::max(h, k.size());
    return (long long)h;
  }
};

inline SeparationTree build_separation_tree(const Graph& g,
                                            const SeparatorFn& strategy,
                                            long long threshold) {
  if (threshold < 1)
    throw std::invalid_argument("separation threshold must be at least 1");
  SeparationTree tree;
  tree.threshold = threshold;

  // Explicit stack, pushing the '0' side first so the '1' side is
  // processed first, matching the sweep engine's pop order.
  std::vector<std::pair<std::string, VertexSet>> todo;
  todo.emplace_back("", VertexSet::full(g.n()));
  while (!todo.empty()) {
    auto [key, region] = std::move(todo.back());
    todo.pop_back();
    tree.nodes.emplace(key, region);
    tree.order.push_back(key);
    if ((long long)region.size() <= threshold) continue;

    SeparationResult split;
    try {
      split = separate_region(g, region, strategy);
    } catch (const std::exception& e) {
      throw std::runtime_error("separation failed at tree node '" + key +
                               "': " + e.what());
    }
    tree.separators.emplace(key, split.s);
    if (!split.b.empty()) todo.emplace_back(key + "0", split.b);
    if (!split.a.empty()) todo.emplace_back(key + "1", split.a);
  }
  return tree;
}

// Node-count check against the phi majorant. phi models splits that spend
// exactly f(|region|) vertices on the separator, so the comparison is only
// claimed when every internal separator matches its budget exactly;
// undersized separators leave more vertices behind than phi accounts for.
struct MajorantReport {
  bool applicable = false;  // every internal separator has size f(|region|)
  bool holds = false;       // node count <= phi(f, n, n); meaningful if applicable
  long long node_count = 0;
  long long phi_value = 0;
};

inline MajorantReport check_node_majorant(const SeparationTree& tree,
                                          const SizeFn& f, long long n) {
  MajorantReport rep;
  rep.applicable = true;
  for (auto& [key, sep] : tree.separators) {
    long long region = tree.nodes.at(key).size();
    if ((long long)sep.size() != checked_budget(f, region))
      rep.applicable = false;
  }
  rep.node_count = (long long)tree.nodes.size();
  rep.phi_value = phi(f, n, n);
  rep.holds = rep.node_count <= rep.phi_value;
  return rep;
}

}  // namespace copsweep
