#pragma once

#include <vector>

#include "linkagelab/graph.hpp"

namespace llab {

struct DisjointPathsResult {
  int count = 0;
  std::vector<std::vector<int>> paths;  // vertex-disjoint source..target paths
  std::vector<int> separator;           // minimum vertex separator (Menger witness)
};

// Maximum family of pairwise vertex-disjoint paths from `sources` to
// `targets` (endpoints included in the disjointness), via unit vertex
// capacities. A vertex in both sets yields a one-vertex path.
DisjointPathsResult max_disjoint_paths(const Graph& g, const std::vector<int>& sources,
                                       const std::vector<int>& targets);

// Same, but source vertices come in groups with per-group path quotas; the
// result routes at most `quota[i]` paths starting in group i.
DisjointPathsResult max_disjoint_paths_grouped(const Graph& g,
                                               const std::vector<std::vector<int>>& groups,
                                               const std::vector<int>& quotas,
                                               const std::vector<int>& targets);

}  // namespace llab
