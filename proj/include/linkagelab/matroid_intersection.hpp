#pragma once

#include <utility>

#include "linkagelab/gammoid.hpp"

namespace llab {

struct IntersectionCertificate {
  std::vector<int> common;  // maximum common independent set, as g0 ground elements
  bool below_target = false;
  // Partition {A, B} of the ground set with r0(A) + r1(copy(B)) = |common|
  // (the matroid-intersection min-max witness).
  std::vector<int> part_a, part_b;
  int bound = 0;
  // Vertex separators realizing the two rank values in the host graphs.
  std::vector<int> separator_a, separator_b;
};

// Edmonds matroid intersection over two gammoid rank oracles whose ground
// sets are identified by `ident` (a bijection g0.ground -> g1.ground).
// Augments along shortest exchange paths; always returns the optimum plus
// the min-max partition certificate, flagging below_target when the optimum
// is smaller than `target`.
IntersectionCertificate matroid_intersection(const Gammoid& g0, const Gammoid& g1,
                                             const std::vector<std::pair<int, int>>& ident,
                                             int target);

}  // namespace llab
