#pragma once

#include <optional>
#include <vector>

#include "linkagelab/embedded_graph.hpp"

namespace llab {

// Path in an embedded graph with both ends on hole walks and all internal
// vertices off every hole. walk = v0 e1 v1 ... ek vk (vertex and edge ids).
struct BoundaryPath {
  std::vector<int> vertices;  // k+1 vertex ids, pairwise distinct
  std::vector<int> edges;     // k edge ids
};

struct CutResult {
  EmbeddedGraph graph;
  // The two hole faces bordering the slit (equal when the slit lies on a
  // single boundary circle of the result).
  int slit_face_side1 = -1;
  int slit_face_side2 = -1;
  // Original hole face index -> face index in the cut graph, for the holes
  // that did not contain the path endpoints.
  std::vector<std::pair<int, int>> surviving_holes;
  // End holes of the path in the original graph (face indices; may coincide).
  int end_hole_start = -1;
  int end_hole_end = -1;
  // New ids of the split path vertices: side1[i]/side2[i] replace vertices[i].
  std::vector<int> side1, side2;
  // Ids of the duplicated path edges on each side, in path order.
  std::vector<int> copy_edges_side1, copy_edges_side2;
  // For the hole at the path start: its walk arc leaving v0 (in walk
  // orientation) lands on this side (1 or 2) of the slit.
  int start_arc_side = 0;
};

// Slits the surface along p (a combinatorial tubular-neighbourhood cut).
// Euler characteristic rises by exactly one. Throws std::invalid_argument on
// malformed paths (not simple, internal vertex on a hole, ends off holes...).
CutResult cut_along(const EmbeddedGraph& g, const BoundaryPath& p);

struct Pseudotype {
  bool separating = false;
  // non-separating case
  int sides = 0;  // 1 or 2 (genus drop under the cut)
  bool orientable_after = false;
  // separating case: the two parts. `holes` lists original hole face indices
  // fully inside the part; `has_start_arc` tells which part received the
  // v0->vk walk arc of the split end hole.
  struct Part {
    SurfaceSignature sig;
    std::vector<int> holes;
    bool has_start_arc = false;
  };
  std::vector<Part> parts;
};

Pseudotype pseudotype(const EmbeddedGraph& g, const BoundaryPath& p);

// Same-type decision for two boundary paths with the same endpoint pair,
// following the four-way case split (orientable non-separating; same-hole
// pseudotype; distinct-hole marker order; separating part matching).
bool same_type(const EmbeddedGraph& g, const BoundaryPath& p1, const BoundaryPath& p2);

// Canonical rotation system for Sigma(a,b,c): one vertex, interleaved
// positive loop pairs per handle, adjacent negative loops per crosscap, and a
// marked monogon loop per hole.
EmbeddedGraph canonical_surface(int a, int b, int c);

// Validates that p is a boundary path of g (throws on violation) and returns
// the face indices of the end holes.
std::pair<int, int> validate_boundary_path(const EmbeddedGraph& g, const BoundaryPath& p);

}  // namespace llab
