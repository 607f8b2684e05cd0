#pragma once

#include "linkagelab/pattern.hpp"

namespace llab {

// (m,n)-cylindrical grid: the Cartesian product of an m-cycle and an n-vertex
// path. Vertex (ring r in [0,n), position j in [0,m)) has index r*m + j.
// Ring n-1 is the outer boundary cycle, ring 0 the inner one.
struct CylGrid {
  int m = 0;
  int n = 0;
  Graph graph;

  int vertex(int ring, int pos) const { return ring * m + ((pos % m) + m) % m; }
  int ring_of(int v) const { return v / m; }
  int pos_of(int v) const { return v % m; }
  std::vector<int> boundary_cycle(bool outer) const;  // positions 0..m-1 in order
};

// Throws std::invalid_argument unless m >= 3 and n >= 1.
CylGrid build_grid(int m, int n);

// Realizes a cross-free pattern whose terminals all sit on one boundary cycle,
// by routing one pattern element per ring (singletons first, then an adjacent
// pair along its free boundary arc, re-anchoring the rest one ring inward).
// Requires n >= |pattern|; throws std::invalid_argument on any violated
// precondition (crossing pattern, terminals off the boundary, n < k).
Linkage realize(const CylGrid& grid, const Pattern& p);

}  // namespace llab
