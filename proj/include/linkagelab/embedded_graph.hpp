#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "linkagelab/graph.hpp"

namespace llab {

// Surface signature (a handles, b crosscaps, c holes), Dyck-normalized on
// construction: any surface with a crosscap is stored as (0, 2a+b, c), so
// equality decides homeomorphism.
struct SurfaceSignature {
  int a = 0, b = 0, c = 0;

  SurfaceSignature() = default;
  SurfaceSignature(int a_, int b_, int c_) : a(a_), b(b_), c(c_) {
    if (b > 0) {
      b = 2 * a + b;
      a = 0;
    }
  }

  int genus() const { return 2 * a + b; }
  int euler() const { return 2 - 2 * a - b - c; }
  bool orientable() const { return b == 0; }
  bool operator==(const SurfaceSignature& o) const = default;
  std::string to_string() const;
};

// Combinatorial surface: a graph with a rotation system (cyclic order of
// half-edges per vertex) and edge signs; faces are traced walks, and a subset
// of faces may be marked as holes (boundary components).
//
// Internal encodings, used throughout the surface code:
//   dart  = 2*edgeIndex + end   (end 0 sits at edge.u, end 1 at edge.v)
//   blade = 2*dart + s          (s = 0 for orientation +1, 1 for -1)
// Each face is traced twice, once per direction; the two orbits are paired
// and one canonical orbit represents the face.
class EmbeddedGraph {
 public:
  struct EdgeRec {
    int id = -1;
    int u = -1, v = -1;  // vertex ids
    int sign = 1;
  };
  struct HalfEdge {
    int edge = -1;  // edge id
    int end = 0;    // 0 = at u, 1 = at v
    bool operator==(const HalfEdge&) const = default;
  };
  struct Face {
    std::vector<int> orbit;     // canonical orbit, as blades
    std::vector<int> darts;     // traversal order
    std::vector<int> vertices;  // vertices[i] = tail of darts[i], as vertex ids
    int rep = -1;               // minimal blade over both orbits (stable key)
  };

  // construction
  int add_vertex(int id = -1);
  int add_edge(int u, int v, int sign = 1, int id = -1);  // appends to rotations
  void set_rotation(int vertex, const std::vector<HalfEdge>& order);
  std::vector<HalfEdge> rotation(int vertex) const;

  // basic queries
  bool has_vertex(int id) const { return vertex_index_.count(id) != 0; }
  bool has_edge(int id) const { return edge_index_.count(id) != 0; }
  const std::vector<int>& vertex_ids() const { return vertex_ids_; }
  std::vector<int> edge_ids() const;
  const EdgeRec& edge(int id) const;
  int vertex_count() const { return static_cast<int>(vertex_ids_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int degree(int vertex) const;

  // Throws std::invalid_argument when the rotation system is malformed.
  void validate() const;

  // faces and holes
  const std::vector<Face>& faces() const;  // traces lazily
  int face_at(HalfEdge he, int side) const;  // side 0/1 = the two sides of the half-edge
  void mark_hole(int face_index);
  void clear_holes();
  std::vector<int> hole_faces() const;  // sorted face indices
  int hole_count() const { return static_cast<int>(hole_reps_.size()); }
  const std::vector<int>& hole_reps() const { return hole_reps_; }  // blades, insertion order

  // classification (requires a connected, valid embedding)
  SurfaceSignature classify() const;
  bool orientable_embedding() const;

  // connectivity
  bool connected() const;
  std::vector<std::vector<int>> components() const;  // vertex ids
  EmbeddedGraph extract_component(const std::vector<int>& vertices) const;

  // surgery
  void remove_vertex(int id);
  int subdivide_edge(int edge_id);  // returns the new vertex id
  // Adds an edge inside a face between two of its corners (corner i lies
  // between walk step i and step i+1). Splits the face; surface unchanged.
  int add_chord(int face_index, int corner_a, int corner_b, int id = -1);
  int add_pendant(int face_index, int corner, int vertex_id = -1, int edge_id = -1);

  // Induced embedded subgraph on `vertices`, additionally dropping the edges
  // listed in `drop_edges`; rotations keep their order. Hole markers whose
  // edge survives are carried over.
  EmbeddedGraph filtered(const std::vector<int>& vertices,
                         const std::vector<int>& drop_edges) const;

  // abstract skeleton; out_ids[i] is the vertex id of skeleton vertex i
  Graph skeleton(std::vector<int>* out_ids = nullptr,
                 std::unordered_map<int, int>* out_index = nullptr) const;

  // --- low-level surface machinery (used by surface_ops and insulation) ---
  int dart_count() const { return 2 * edge_count(); }
  int dart_tail(int dart) const;  // vertex id
  int dart_head(int dart) const;
  int dart_edge_id(int dart) const { return edges_[dart >> 1].id; }
  int dart_of(HalfEdge he) const;
  HalfEdge half_edge_of(int dart) const;
  int next_blade(int blade) const;
  int rev_blade(int blade) const;
  int face_of_blade(int blade) const;
  const std::vector<int>& rotation_darts(int vertex_index) const;
  int vertex_index(int id) const;
  int vertex_id(int index) const { return vertex_ids_[index]; }
  int edge_index_of(int id) const;
  // Reverses the rotation at a vertex and toggles the sign of its non-loop
  // edges; the surface is unchanged and hole markers are retargeted.
  void flip_vertex(int vertex);
  // Per-face component labels when walking the dual without crossing walls
  // (edge ids). Returns one label per face.
  std::vector<int> dual_components(const std::vector<int>& wall_edge_ids) const;
  // Faces incident to a vertex.
  std::vector<int> faces_at_vertex(int vertex) const;

 private:
  std::vector<int> vertex_ids_;
  std::unordered_map<int, int> vertex_index_;
  std::vector<EdgeRec> edges_;
  std::unordered_map<int, int> edge_index_;
  std::vector<std::vector<int>> rotation_;  // per vertex index, darts
  std::vector<int> hole_reps_;              // blades
  int next_vertex_id_ = 0;
  int next_edge_id_ = 0;

  struct TraceData {
    std::vector<Face> faces;
    std::vector<int> blade_face;
  };
  mutable std::optional<TraceData> trace_;

  void invalidate() { trace_.reset(); }
  const TraceData& trace() const;
  int blade_after(int blade) const;
};

}  // namespace llab
