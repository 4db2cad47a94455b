#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "copsweep/hyperbolic.hpp"
#include "copsweep/planar.hpp"
#include "copsweep/separation.hpp"

namespace copsweep {

enum class StrategyKind {
  Exact,
  TreeCentroid,
  BfsLevel,
  PlanarCycle,
  HyperbolicSector,
};

inline std::string strategy_name(StrategyKind k) {
  switch (k) {
    case StrategyKind::Exact: return "exact";
    case StrategyKind::TreeCentroid: return "tree-centroid";
    case StrategyKind::BfsLevel: return "bfs-level";
    case StrategyKind::PlanarCycle: return "planar-cycle";
    case StrategyKind::HyperbolicSector: return "hyperbolic-sector";
  }
  throw std::logic_error("unreachable");
}

inline StrategyKind strategy_from_name(const std::string& name) {
  for (StrategyKind k :
       {StrategyKind::Exact, StrategyKind::TreeCentroid, StrategyKind::BfsLevel,
        StrategyKind::PlanarCycle, StrategyKind::HyperbolicSector})
    if (strategy_name(k) == name) return k;
  throw std::invalid_argument("unknown separator strategy: " + name);
}

// Which inputs a strategy needs beyond the graph itself is part of its
// configuration: the exhaustive cap for the search-based kinds, host
// coordinates for the sector kind.
struct SeparatorStrategy {
  StrategyKind kind = StrategyKind::BfsLevel;
  int cap = 16;
  std::vector<Polar> coords;
};

inline SeparatorFn make_strategy(const SeparatorStrategy& s) {
  switch (s.kind) {
    case StrategyKind::Exact:
      return [cap = s.cap](const Graph& local, const std::vector<int>&) {
        return exact_min_balanced_separator(local, 2, 3, cap);
      };
    case StrategyKind::TreeCentroid:
      return [](const Graph& local, const std::vector<int>&) {
        return tree_centroid_separator(local);
      };
    case StrategyKind::BfsLevel:
      return [cap = s.cap](const Graph& local, const std::vector<int>&) {
        return bfs_level_separator(local, cap);
      };
    case StrategyKind::PlanarCycle:
      return [](const Graph& local, const std::vector<int>&) {
        return planar_cycle_separator(local);
      };
    case StrategyKind::HyperbolicSector:
      return [coords = s.coords](const Graph& local,
                                 const std::vector<int>& global_ids) {
        std::vector<Polar> pts;
        pts.reserve(global_ids.size());
        for (int v : global_ids) {
          if (v < 0 || v >= int(coords.size()))
            throw std::invalid_argument("vertex has no coordinates");
          pts.push_back(coords[v]);
        }
        return hyperbolic_sector_separator(pts, local);
      };
  }
  throw std::logic_error("unreachable");
}

}  // namespace copsweep
