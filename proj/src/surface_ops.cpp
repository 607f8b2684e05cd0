#include "linkagelab/surface_ops.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace llab {

namespace {

using HalfEdge = EmbeddedGraph::HalfEdge;

// The rotation gap a hole face occupies at a vertex it visits exactly once:
// (gapA, gapB) with gapB the rotation successor of gapA. Also reports the
// dart the walk uses to leave the vertex.
struct HoleCorner {
  int gap_a = -1;
  int gap_b = -1;
  int leave_dart = -1;
};

HoleCorner hole_corner_at(const EmbeddedGraph& g, int face_idx, int x) {
  const auto& f = g.faces()[face_idx];
  int len = static_cast<int>(f.orbit.size());
  int found = -1, visits = 0;
  for (int j = 0; j < len; ++j) {
    if (f.vertices[j] == x) {
      found = j;
      ++visits;
    }
  }
  if (visits != 1)
    throw std::invalid_argument("boundary path endpoint must lie on a simple hole walk visit");
  int arriving = f.orbit[(found + len - 1) % len];
  int leaving = f.orbit[found];
  int twin_arr = (arriving >> 1) ^ 1;
  int d_leave = leaving >> 1;
  HoleCorner c;
  c.leave_dart = d_leave;
  if ((leaving & 1) == 0) {
    c.gap_a = twin_arr;
    c.gap_b = d_leave;
  } else {
    c.gap_a = d_leave;
    c.gap_b = twin_arr;
  }
  return c;
}

// vertex id -> number of hole-walk visits, per hole face
int total_hole_visits(const EmbeddedGraph& g, const std::vector<int>& holes, int vertex,
                      int* which_hole) {
  int visits = 0;
  for (int h : holes) {
    const auto& f = g.faces()[h];
    for (int v : f.vertices)
      if (v == vertex) {
        ++visits;
        if (which_hole) *which_hole = h;
      }
  }
  return visits;
}

std::vector<int> linearize_from(const std::vector<int>& rot, int start_dart) {
  int n = static_cast<int>(rot.size());
  int pos = -1;
  for (int i = 0; i < n; ++i)
    if (rot[i] == start_dart) pos = i;
  if (pos < 0) throw std::logic_error("linearize_from: dart missing");
  std::vector<int> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(rot[(pos + i) % n]);
  return out;
}

}  // namespace

std::pair<int, int> validate_boundary_path(const EmbeddedGraph& g, const BoundaryPath& p) {
  if (p.edges.empty() || p.vertices.size() != p.edges.size() + 1)
    throw std::invalid_argument("boundary path: walk must alternate k+1 vertices and k edges");
  std::set<int> vs(p.vertices.begin(), p.vertices.end());
  if (vs.size() != p.vertices.size())
    throw std::invalid_argument("boundary path: walk is not simple");
  std::set<int> es(p.edges.begin(), p.edges.end());
  if (es.size() != p.edges.size()) throw std::invalid_argument("boundary path: repeated edge");
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    const auto& e = g.edge(p.edges[i]);
    int a = p.vertices[i], b = p.vertices[i + 1];
    if (!((e.u == a && e.v == b) || (e.u == b && e.v == a)))
      throw std::invalid_argument("boundary path: edge does not join consecutive vertices");
  }
  std::vector<int> holes = g.hole_faces();
  int hx = -1, hy = -1;
  if (total_hole_visits(g, holes, p.vertices.front(), &hx) != 1)
    throw std::invalid_argument("boundary path: start must lie on exactly one hole walk visit");
  if (total_hole_visits(g, holes, p.vertices.back(), &hy) != 1)
    throw std::invalid_argument("boundary path: end must lie on exactly one hole walk visit");
  for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i)
    if (total_hole_visits(g, holes, p.vertices[i], nullptr) != 0)
      throw std::invalid_argument("boundary path: internal vertex lies on a hole");
  return {hx, hy};
}

CutResult cut_along(const EmbeddedGraph& g, const BoundaryPath& p) {
  auto [hx, hy] = validate_boundary_path(g, p);
  const int k = static_cast<int>(p.edges.size());

  // Walk-arc marker for the start hole, taken on the original trace so it is
  // independent of the sign normalization below.
  int orig_leave_dart = hole_corner_at(g, hx, p.vertices.front()).leave_dart;
  HalfEdge orig_leave_he = g.half_edge_of(orig_leave_dart);

  EmbeddedGraph work = g;
  for (int i = 1; i <= k; ++i)
    if (work.edge(p.edges[i - 1]).sign < 0) work.flip_vertex(p.vertices[i]);
  for (int i = 0; i < k; ++i)
    if (work.edge(p.edges[i]).sign < 0)
      throw std::logic_error("cut_along: sign normalization failed");

  // Hole faces in the flipped copy, in marker order matching g.hole_reps().
  std::vector<int> orig_hole_faces;
  for (int rep : g.hole_reps()) orig_hole_faces.push_back(g.face_of_blade(rep));
  std::vector<int> work_hole_faces;
  for (int rep : work.hole_reps()) work_hole_faces.push_back(work.face_of_blade(rep));
  int whx = -1, why = -1;
  for (std::size_t j = 0; j < orig_hole_faces.size(); ++j) {
    if (orig_hole_faces[j] == hx) whx = work_hole_faces[j];
    if (orig_hole_faces[j] == hy) why = work_hole_faces[j];
  }

  // Side fans at every path vertex (darts of the work graph).
  std::vector<std::vector<int>> fan1(k + 1), fan2(k + 1);
  auto path_dart = [&work, &p](int edge_pos, int at_vertex) {
    const auto& e = work.edge(p.edges[edge_pos]);
    int end = (e.u == at_vertex) ? 0 : 1;
    return 2 * work.edge_index_of(p.edges[edge_pos]) + end;
  };
  {
    // start vertex
    HoleCorner c = hole_corner_at(work, whx, p.vertices.front());
    auto lin = linearize_from(work.rotation_darts(work.vertex_index(p.vertices.front())), c.gap_b);
    int out_dart = path_dart(0, p.vertices.front());
    auto it = std::find(lin.begin(), lin.end(), out_dart);
    fan1[0].assign(lin.begin(), it);
    fan2[0].assign(it + 1, lin.end());
  }
  for (int i = 1; i < k; ++i) {
    const auto& rot = work.rotation_darts(work.vertex_index(p.vertices[i]));
    int in_dart = path_dart(i - 1, p.vertices[i]);
    int out_dart = path_dart(i, p.vertices[i]);
    auto lin = linearize_from(rot, in_dart);  // starts with in_dart
    auto it = std::find(lin.begin(), lin.end(), out_dart);
    fan1[i].assign(lin.begin() + 1, it);
    fan2[i].assign(it + 1, lin.end());
  }
  {
    // end vertex
    HoleCorner c = hole_corner_at(work, why, p.vertices.back());
    auto lin = linearize_from(work.rotation_darts(work.vertex_index(p.vertices.back())), c.gap_b);
    int in_dart = path_dart(k - 1, p.vertices.back());
    auto it = std::find(lin.begin(), lin.end(), in_dart);
    fan2[k].assign(lin.begin(), it);
    fan1[k].assign(it + 1, lin.end());
  }

  std::unordered_map<int, int> dart_side;  // work dart -> 1 or 2
  for (int i = 0; i <= k; ++i) {
    for (int d : fan1[i]) dart_side[d] = 1;
    for (int d : fan2[i]) dart_side[d] = 2;
  }
  std::set<int> path_vertices(p.vertices.begin(), p.vertices.end());
  std::set<int> path_edges(p.edges.begin(), p.edges.end());

  // Build the cut graph.
  CutResult res;
  EmbeddedGraph& out = res.graph;
  for (int v : work.vertex_ids())
    if (!path_vertices.count(v)) out.add_vertex(v);
  for (std::size_t i = 0; i < p.vertices.size(); ++i) res.side1.push_back(out.add_vertex());
  for (std::size_t i = 0; i < p.vertices.size(); ++i) res.side2.push_back(out.add_vertex());

  auto owner_of_dart = [&](int d) {
    int tail = work.dart_tail(d);
    if (!path_vertices.count(tail)) return tail;
    auto it = dart_side.find(d);
    if (it == dart_side.end()) throw std::logic_error("cut_along: fan missing a dart");
    int pos = static_cast<int>(
        std::find(p.vertices.begin(), p.vertices.end(), tail) - p.vertices.begin());
    return it->second == 1 ? res.side1[pos] : res.side2[pos];
  };
  for (int eid : work.edge_ids()) {
    if (path_edges.count(eid)) continue;
    const auto& e = work.edge(eid);
    int ei = work.edge_index_of(eid);
    out.add_edge(owner_of_dart(2 * ei), owner_of_dart(2 * ei + 1), e.sign, eid);
  }
  std::vector<int> copy1(k), copy2(k);
  for (int i = 0; i < k; ++i) {
    copy1[i] = out.add_edge(res.side1[i], res.side1[i + 1], 1);
    copy2[i] = out.add_edge(res.side2[i], res.side2[i + 1], 1);
  }
  res.copy_edges_side1 = copy1;
  res.copy_edges_side2 = copy2;

  // Rotations. Untouched vertices keep theirs; split vertices get the fans.
  auto he_of_work_dart = [&work](int d) { return work.half_edge_of(d); };
  for (int v : work.vertex_ids()) {
    if (path_vertices.count(v)) continue;
    out.set_rotation(v, work.rotation(v));
  }
  auto he_copy = [&](const std::vector<int>& ids, int i, int end) {
    return HalfEdge{ids[i], end};
  };
  for (int i = 0; i <= k; ++i) {
    std::vector<HalfEdge> r1, r2;
    if (i == 0) {
      for (int d : fan1[0]) r1.push_back(he_of_work_dart(d));
      r1.push_back(he_copy(copy1, 0, 0));
      r2.push_back(he_copy(copy2, 0, 0));
      for (int d : fan2[0]) r2.push_back(he_of_work_dart(d));
    } else if (i == k) {
      r1.push_back(he_copy(copy1, k - 1, 1));
      for (int d : fan1[k]) r1.push_back(he_of_work_dart(d));
      for (int d : fan2[k]) r2.push_back(he_of_work_dart(d));
      r2.push_back(he_copy(copy2, k - 1, 1));
    } else {
      r1.push_back(he_copy(copy1, i - 1, 1));
      for (int d : fan1[i]) r1.push_back(he_of_work_dart(d));
      r1.push_back(he_copy(copy1, i, 0));
      r2.push_back(he_copy(copy2, i, 0));
      for (int d : fan2[i]) r2.push_back(he_of_work_dart(d));
      r2.push_back(he_copy(copy2, i - 1, 1));
    }
    out.set_rotation(res.side1[i], r1);
    out.set_rotation(res.side2[i], r2);
  }

  // Slit boundary faces: side 1 is entered by tracing into v0^1 along the
  // first copy, side 2 by tracing out of v0^2.
  int b1 = 2 * out.dart_of(HalfEdge{copy1[0], 1}) + 0;
  int b2 = 2 * out.dart_of(HalfEdge{copy2[0], 0}) + 0;
  res.slit_face_side1 = out.face_of_blade(b1);
  res.slit_face_side2 = out.face_of_blade(b2);
  out.mark_hole(res.slit_face_side1);
  if (res.slit_face_side2 != res.slit_face_side1) out.mark_hole(res.slit_face_side2);

  // Surviving holes: every marked hole except the end holes.
  for (std::size_t j = 0; j < orig_hole_faces.size(); ++j) {
    if (orig_hole_faces[j] == hx || orig_hole_faces[j] == hy) continue;
    int rep = work.hole_reps()[j];
    int d = rep >> 1, s = rep & 1;
    HalfEdge he = work.half_edge_of(d);
    if (path_edges.count(he.edge))
      throw std::logic_error("cut_along: non-end hole touches the path");
    int nd = out.dart_of(he);
    int face = out.face_of_blade(2 * nd + s);
    out.mark_hole(face);
    res.surviving_holes.emplace_back(orig_hole_faces[j], face);
  }

  res.end_hole_start = hx;
  res.end_hole_end = hy;

  // Which side the start hole's forward walk arc landed on.
  if (!path_edges.count(orig_leave_he.edge)) {
    int wd = work.dart_of(orig_leave_he);
    auto it = dart_side.find(wd);
    res.start_arc_side = (it != dart_side.end()) ? it->second : 0;
  } else {
    // Degenerate parallel chord: the walk leaves along the path edge itself.
    // Probe which copy carries the old hole side.
    int s_bit = 0;
    for (int rep : g.hole_reps())
      if (g.face_of_blade(rep) == hx) {
        // find the blade of the original walk on the leave dart
        const auto& f = g.faces()[hx];
        for (int blade : f.orbit)
          if ((blade >> 1) == orig_leave_dart) s_bit = blade & 1;
      }
    HalfEdge probe1{copy1[0], orig_leave_he.end};
    res.start_arc_side =
        (out.face_of_blade(2 * out.dart_of(probe1) + s_bit) == res.slit_face_side1) ? 1 : 2;
  }

  // The cut must raise the (bounded-surface) Euler characteristic by one:
  // chi = V - E + F with hole faces not counted.
  int chi_before = g.vertex_count() - g.edge_count() +
                   (g.edge_count() == 0 ? 1 : static_cast<int>(g.faces().size())) -
                   g.hole_count();
  int chi_after = out.vertex_count() - out.edge_count() +
                  static_cast<int>(out.faces().size()) - out.hole_count();
  if (chi_after != chi_before + 1)
    throw std::logic_error("cut_along: Euler characteristic did not rise by one");
  return res;
}

Pseudotype pseudotype(const EmbeddedGraph& g, const BoundaryPath& p) {
  CutResult cut = cut_along(g, p);
  auto comps = cut.graph.components();
  Pseudotype out;
  if (comps.size() == 1) {
    out.separating = false;
    SurfaceSignature before = g.classify();
    SurfaceSignature after = cut.graph.classify();
    out.sides = before.genus() - after.genus();
    out.orientable_after = after.orientable();
    if (out.sides != 1 && out.sides != 2)
      throw std::logic_error("pseudotype: non-separating genus drop outside {1,2}");
    return out;
  }
  if (comps.size() != 2) throw std::logic_error("pseudotype: cut left more than two components");
  out.separating = true;
  for (const auto& comp : comps) {
    std::set<int> in(comp.begin(), comp.end());
    Pseudotype::Part part;
    EmbeddedGraph sub = cut.graph.extract_component(comp);
    part.sig = sub.classify();
    for (const auto& [orig, now] : cut.surviving_holes) {
      const auto& face = cut.graph.faces()[now];
      if (in.count(face.vertices.front())) part.holes.push_back(orig);
    }
    std::sort(part.holes.begin(), part.holes.end());
    int arc_vertex = cut.start_arc_side == 1 ? cut.side1.front() : cut.side2.front();
    part.has_start_arc = in.count(arc_vertex) != 0;
    out.parts.push_back(std::move(part));
  }
  return out;
}

namespace {

// Canonical form of a cyclic marker sequence up to rotation and reflection.
std::vector<int> cyclic_canonical(std::vector<int> seq) {
  if (seq.empty()) return seq;
  std::vector<int> best;
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t s = 0; s < seq.size(); ++s) {
      std::vector<int> cand;
      for (std::size_t i = 0; i < seq.size(); ++i) cand.push_back(seq[(s + i) % seq.size()]);
      if (best.empty() || cand < best) best = cand;
    }
    std::reverse(seq.begin(), seq.end());
  }
  return best;
}

// Marker order around the merged hole after cutting along p: positions of the
// four hole-corner darts (markers are half-edges of the original graph).
std::vector<int> merged_marker_order(const EmbeddedGraph& g, const BoundaryPath& p,
                                     const std::vector<HalfEdge>& markers) {
  CutResult cut = cut_along(g, p);
  if (cut.slit_face_side1 != cut.slit_face_side2)
    throw std::logic_error("marker order: expected a single merged hole");
  const auto& face = cut.graph.faces()[cut.slit_face_side1];
  std::vector<int> order;
  for (int blade : face.orbit) {
    int d = blade >> 1;
    HalfEdge he = cut.graph.half_edge_of(d);
    for (std::size_t m = 0; m < markers.size(); ++m) {
      if (markers[m].edge == he.edge && markers[m].end == he.end) order.push_back(static_cast<int>(m));
    }
  }
  if (order.size() != markers.size())
    throw std::invalid_argument("marker order: markers must appear exactly once on the merged hole");
  return cyclic_canonical(order);
}

}  // namespace

bool same_type(const EmbeddedGraph& g, const BoundaryPath& p1, const BoundaryPath& p2_in) {
  BoundaryPath p2 = p2_in;
  bool same_fwd = p1.vertices.front() == p2.vertices.front() &&
                  p1.vertices.back() == p2.vertices.back();
  bool same_rev = p1.vertices.front() == p2.vertices.back() &&
                  p1.vertices.back() == p2.vertices.front();
  if (!same_fwd && !same_rev) throw std::invalid_argument("same_type: endpoint mismatch");
  if (!same_fwd) {
    std::reverse(p2.vertices.begin(), p2.vertices.end());
    std::reverse(p2.edges.begin(), p2.edges.end());
  }
  auto [h1x, h1y] = validate_boundary_path(g, p1);
  validate_boundary_path(g, p2);

  Pseudotype t1 = pseudotype(g, p1);
  Pseudotype t2 = pseudotype(g, p2);
  if (t1.separating != t2.separating) return false;

  if (t1.separating) {
    // Match parts respecting the pointwise-fixed boundary arcs.
    auto part_with = [](const Pseudotype& t, bool arc) -> const Pseudotype::Part& {
      for (const auto& part : t.parts)
        if (part.has_start_arc == arc) return part;
      throw std::logic_error("same_type: separating cut without arc assignment");
    };
    for (bool arc : {true, false}) {
      const auto& a = part_with(t1, arc);
      const auto& b = part_with(t2, arc);
      if (!(a.sig == b.sig) || a.holes != b.holes) return false;
    }
    return true;
  }

  if (g.classify().orientable()) return true;  // Lemma: same ends, non-separating

  if (h1x == h1y) {
    // same hole: pseudotype decides
    return t1.sides == t2.sides && t1.orientable_after == t2.orientable_after;
  }

  // distinct holes: compare the cyclic order of the four corner markers
  HoleCorner cx = hole_corner_at(g, h1x, p1.vertices.front());
  HoleCorner cy = hole_corner_at(g, h1y, p1.vertices.back());
  if (cx.gap_a == cx.gap_b || cy.gap_a == cy.gap_b)
    throw std::invalid_argument("same_type: hole walk too degenerate for marker comparison");
  std::vector<HalfEdge> markers{g.half_edge_of(cx.gap_a), g.half_edge_of(cx.gap_b),
                                g.half_edge_of(cy.gap_a), g.half_edge_of(cy.gap_b)};
  return merged_marker_order(g, p1, markers) == merged_marker_order(g, p2, markers);
}

EmbeddedGraph canonical_surface(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("canonical_surface: negative counts");
  EmbeddedGraph g;
  g.add_vertex(0);
  std::vector<HalfEdge> rot;
  for (int i = 0; i < a; ++i) {
    int e1 = g.add_edge(0, 0, 1);
    int e2 = g.add_edge(0, 0, 1);
    rot.push_back({e1, 0});
    rot.push_back({e2, 0});
    rot.push_back({e1, 1});
    rot.push_back({e2, 1});
  }
  for (int i = 0; i < b; ++i) {
    int e = g.add_edge(0, 0, -1);
    rot.push_back({e, 0});
    rot.push_back({e, 1});
  }
  std::vector<int> hole_loops;
  for (int i = 0; i < c; ++i) {
    int e = g.add_edge(0, 0, 1);
    rot.push_back({e, 0});
    rot.push_back({e, 1});
    hole_loops.push_back(e);
  }
  if (!rot.empty()) g.set_rotation(0, rot);
  for (int e : hole_loops) g.mark_hole(g.face_at({e, 1}, 0));
  return g;
}

}  // namespace llab
