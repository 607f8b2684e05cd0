#pragma once

#include <map>

#include "linkagelab/embedded_graph.hpp"
#include "linkagelab/pattern.hpp"

namespace llab {

// Disk-embedded graph with nested vertex-disjoint cycles C_1..C_t around a
// center vertex; every vertex carries a level (cycle index, or the smallest
// disk containing it for off-cycle vertices).
struct LeveledDisk {
  EmbeddedGraph graph;  // exactly one marked hole: the outer face
  int center = -1;
  std::vector<std::vector<int>> cycles;         // C_1 (innermost) .. C_t
  std::map<int, int> level;                     // vertex id -> 1..t
  std::vector<std::vector<int>> inside;         // inside[i] = vertices strictly inside C_{i+1}

  int depth() const { return static_cast<int>(cycles.size()); }
  int level_of(int v) const { return level.at(v); }
  const std::vector<int>& outermost() const { return cycles.back(); }
};

// Validates nesting/disjointness and computes the level map.
// Throws std::invalid_argument on malformed input.
LeveledDisk make_leveled_disk(EmbeddedGraph g, int center,
                              std::vector<std::vector<int>> cycles);

// Vertices strictly on the `anchor` side of the cycle (anchor itself must be
// off the cycle). Uses the dual of the embedding.
std::vector<int> side_vertices(const EmbeddedGraph& g, const std::vector<int>& cycle, int anchor);

// A hill of a path family: a subpath with equal-level on-cycle ends, all
// internal levels strictly higher, plus the cap on the end-level cycle that
// co-bounds a center-free disk.
struct Hill {
  int path = -1;
  int from = -1, to = -1;  // positions in the path
  int sea_level = 0;
  std::vector<int> cap;    // cap vertices from path[from] to path[to]
};

// Scans a path family for hills (bumps with on-cycle ends); used both by the
// eliminators and as the hill-freeness predicate.
std::vector<Hill> find_hills(const LeveledDisk& d, const std::vector<std::vector<int>>& paths);

struct EliminationStats {
  int reroutes = 0;
  std::vector<long long> potential_trace;  // Phi after each step (front = initial)
};

// Claim-style normalization: repeatedly reroutes the lowest-sea-level hill
// (smallest cap first) through its cap. The potential Phi = sum of levels of
// used vertices must fall strictly at every step; a step that fails to do so
// throws, as does a cap blocked by the family.
Linkage eliminate_hills(const LeveledDisk& d, const Pattern& p, const Linkage& l,
                        EliminationStats* stats = nullptr);

// |a| vertex-disjoint level-monotone paths from a (on the outermost cycle)
// to C_target_level, obtained from a flow solution by truncation and hill
// elimination. Throws std::invalid_argument when rank is deficient.
std::vector<std::vector<int>> make_decreasing(const LeveledDisk& d, const std::vector<int>& a,
                                              int target_level);

}  // namespace llab
