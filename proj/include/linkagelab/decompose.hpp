#pragma once

#include <string>

#include "linkagelab/leveled_disk.hpp"

namespace llab {

// One homotopy class of exterior edges, realized as a band attached to the
// disk. Edges are listed in transversal order; end_a[i]/end_b[i] are the two
// endpoints of edges[i] grouped by strip end.
struct Strip {
  std::vector<int> edges;
  std::vector<int> end_a, end_b;
  bool contractible = true;
};

struct DiskWithStrips {
  LeveledDisk disk;
  std::vector<Strip> strips;
  int contractible_classes = 0;     // before terminal splitting
  int noncontractible_classes = 0;  // before terminal splitting
  std::vector<std::string> violations;  // bound/matching reports, non-fatal
};

// Groups the edges outside the outermost insulating cycle into homotopy
// classes rel the disk (cap nesting for contractible edges, a cut-and-
// classify disk test for the rest), validates the class-count bounds
// (contractible <= 2k, non-contractible <= 3 * genus) and the per-strip
// matching, and splits strips until every terminal lies on a strip corner.
// g is a closed surface; cycles insulate v; terminals must lie on the
// outermost cycle.
DiskWithStrips decompose(const EmbeddedGraph& g, const Pattern& p, int v,
                         const std::vector<std::vector<int>>& cycles);

}  // namespace llab
