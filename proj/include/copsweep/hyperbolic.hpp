#pragma once

#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "copsweep/graph.hpp"
#include "copsweep/separation.hpp"

namespace copsweep {

// Native polar coordinates on the hyperbolic disc.
struct Polar {
  double r = 0;
  double theta = 0;
};

// Distance on the hyperbolic plane; the cosh argument is clamped to 1 so
// floating-point noise near coincident points cannot produce NaN.
inline double hyperbolic_distance(const Polar& a, const Polar& b) {
  double arg = std::cosh(a.r) * std::cosh(b.r) -
               std::sinh(a.r) * std::sinh(b.r) * std::cos(a.theta - b.theta);
  return std::acosh(std::max(arg, 1.0));
}

// Coordinates file: one "r theta" line per vertex, radians, full precision.
inline void save_coords(const std::vector<Polar>& pts, std::ostream& out) {
  out << std::setprecision(17);
  for (auto& p : pts) out << p.r << ' ' << p.theta << '\n';
}

inline std::vector<Polar> load_coords(std::istream& in) {
  std::vector<Polar> pts;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ss(line);
    Polar p;
    if (!(ss >> p.r >> p.theta))
      throw std::invalid_argument("bad coordinate line: " + line);
    pts.push_back(p);
  }
  return pts;
}

// Sector separator for geometric graphs: sort the vertices by angle, cut
// the circle with two rays into two halves of (nearly) equal count, and
// take, per ray, the crossing edges' endpoints from the side contributing
// fewer of them. Every half has at most ceil(m/2) <= 2m/3 vertices for
// m >= 2, so balance holds whenever the construction is sound; a validator
// pass guards it, with the BFS-level strategy as fallback.
inline SeparationResult hyperbolic_sector_separator(
    const std::vector<Polar>& pts, const Graph& g) {
  int m = g.n();
  if (m < 1) throw std::invalid_argument("sector split needs a vertex");
  if ((int)pts.size() != m)
    throw std::invalid_argument("coordinate count does not match the graph");
  if (m == 1) return {VertexSet(), VertexSet(), VertexSet({0})};

  std::vector<int> slot_of(m), by_slot(m);
  for (int v = 0; v < m; ++v) by_slot[v] = v;
  std::sort(by_slot.begin(), by_slot.end(), [&](int x, int y) {
    if (pts[x].theta != pts[y].theta) return pts[x].theta < pts[y].theta;
    return x < y;
  });
  for (int s = 0; s < m; ++s) slot_of[by_slot[s]] = s;
  int cut = (m + 1) / 2;  // ray 2 sits between slots cut-1 and cut;
                          // ray 1 between slots m-1 and 0

  // Each edge follows the shorter angular arc between its endpoints and
  // crosses whichever rays lie on that arc.
  std::vector<int> cross1p1, cross1p2, cross2p1, cross2p2;
  for (auto [u, v] : g.edge_list()) {
    int i = std::min(slot_of[u], slot_of[v]);
    int j = std::max(slot_of[u], slot_of[v]);
    double direct = pts[by_slot[j]].theta - pts[by_slot[i]].theta;
    bool wrap = direct > 2 * std::acos(-1.0) - direct;
    bool straddles = i < cut && cut <= j;
    bool hits1 = wrap;
    bool hits2 = wrap ? !straddles : straddles;
    int lo = by_slot[i], hi = by_slot[j];  // lo on the slot-smaller side
    if (hits1) {
      (slot_of[lo] < cut ? cross1p1 : cross1p2).push_back(lo);
      (slot_of[hi] < cut ? cross1p1 : cross1p2).push_back(hi);
    }
    if (hits2) {
      (slot_of[lo] < cut ? cross2p1 : cross2p2).push_back(lo);
      (slot_of[hi] < cut ? cross2p1 : cross2p2).push_back(hi);
    }
  }

  auto pick = [](std::vector<int>& p1, std::vector<int>& p2) {
    VertexSet s1{std::move(p1)}, s2{std::move(p2)};
    return s1.size() <= s2.size() ? s1 : s2;
  };
  VertexSet sep = VertexSet::unite(pick(cross1p1, cross1p2),
                                   pick(cross2p1, cross2p2));

  std::vector<int> half1, half2;
  for (int s = 0; s < m; ++s)
    (s < cut ? half1 : half2).push_back(by_slot[s]);
  SeparationResult res{
      VertexSet::minus(VertexSet(std::move(half1)), sep),
      VertexSet::minus(VertexSet(std::move(half2)), sep), sep};
  if (validate_separation(g, res, m).valid()) return res;
  return bfs_level_separator(g);
}

}  // namespace copsweep
