#pragma once

#include "linkagelab/gammoid.hpp"

namespace llab {

// Cyclically contiguous partition A1,B1,...,An,Bn of the first boundary
// circle of a cylinder-embedded host. Vertices are listed in the cyclic
// order of that circle; blocks may be empty.
struct BufferPartition {
  std::vector<std::vector<int>> a_blocks;
  std::vector<std::vector<int>> b_blocks;
};

struct BufferRouteResult {
  std::vector<std::vector<int>> paths;  // sum |A_i| disjoint (union A)-V2 paths
  int reroutes = 0;                     // walk-product steps applied
};

// Constructive routing behind the buffer lemma: per-block path families, a
// buffer family with |A_i|+|A_{i+1}| endpoints in each B_i, then iterative
// walk products confining every family between its guards.
// Throws std::invalid_argument when the hypothesis fails (a dependent A_i or
// an underpowered B_i, reported with the block index).
BufferRouteResult buffer_route(const Graph& host, const std::vector<int>& v1_cyclic,
                               const std::vector<int>& v2, const BufferPartition& part);

// Same, but starting from caller-supplied per-block families (any |A_i|
// pairwise disjoint A_i-to-V2 paths per block; families from different
// blocks may intersect - that is what the rerouting resolves).
BufferRouteResult buffer_route(const Graph& host, const std::vector<int>& v1_cyclic,
                               const std::vector<int>& v2, const BufferPartition& part,
                               const std::vector<std::vector<std::vector<int>>>& families);

}  // namespace llab
