#include "linkagelab/gammoid.hpp"

#include <algorithm>
#include <stdexcept>

namespace llab {

DisjointPathsResult Gammoid::rank_witness(const std::vector<int>& a) const {
  for (int v : a)
    if (std::find(ground.begin(), ground.end(), v) == ground.end())
      throw std::invalid_argument("gammoid rank: set not contained in the ground set");
  return max_disjoint_paths(host, a, targets);
}

int Gammoid::rank(const std::vector<int>& a) const { return rank_witness(a).count; }

}  // namespace llab
