#pragma once

#include "linkagelab/flow.hpp"

namespace llab {

// Gammoid on `ground`: rank(A) = maximum number of vertex-disjoint paths from
// A to `targets` in the host graph. This is the rank function of a matroid.
struct Gammoid {
  Graph host;
  std::vector<int> ground;
  std::vector<int> targets;

  // a = subset of ground (vertex ids); throws if not contained in ground.
  int rank(const std::vector<int>& a) const;
  // rank plus a minimum vertex separator witnessing it
  DisjointPathsResult rank_witness(const std::vector<int>& a) const;
  bool independent(const std::vector<int>& a) const {
    return rank(a) == static_cast<int>(a.size());
  }
};

}  // namespace llab
