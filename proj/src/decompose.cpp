#include "linkagelab/decompose.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "linkagelab/surface_ops.hpp"

namespace llab {

namespace {

std::vector<int> cycle_edge_ids(const EmbeddedGraph& g, const std::vector<int>& cycle) {
  std::vector<int> out;
  int n = static_cast<int>(cycle.size());
  for (int i = 0; i < n; ++i) {
    int a = cycle[i], b = cycle[(i + 1) % n];
    int found = -1;
    for (const auto& he : g.rotation(a)) {
      const auto& e = g.edge(he.edge);
      int other = (he.end == 0) ? e.v : e.u;
      if (other == b && found < 0) found = he.edge;
    }
    if (found < 0) throw std::invalid_argument("insulating cycle hop is not an edge");
    out.push_back(found);
  }
  return out;
}

// Euler characteristic of the closed region of `g` on the side of `cycle`
// carrying `anchor_face` labels from `comp`.
int region_euler(const EmbeddedGraph& g, const std::vector<int>& comp, int side,
                 const std::set<int>& cycle_set, const std::vector<int>& wall_ids) {
  std::set<int> walls(wall_ids.begin(), wall_ids.end());
  int faces = 0;
  for (std::size_t f = 0; f < g.faces().size(); ++f)
    if (comp[f] == side) ++faces;
  std::set<int> vertices(cycle_set.begin(), cycle_set.end());
  int edges = static_cast<int>(walls.size());
  for (int eid : g.edge_ids()) {
    if (walls.count(eid)) continue;
    int ei = g.edge_index_of(eid);
    int f1 = g.face_of_blade(2 * (2 * ei) + 0);
    int f2 = g.face_of_blade(2 * (2 * ei) + 1);
    if (comp[f1] == side || comp[f2] == side) {
      ++edges;
      vertices.insert(g.edge(eid).u);
      vertices.insert(g.edge(eid).v);
    }
  }
  return static_cast<int>(vertices.size()) - edges + faces;
}

struct QuadPairing {
  bool homotopic = false;
  int partner_of_u = -1;  // endpoint of f paired with e.u (valid when homotopic)
};

// Cut along e then f; homotopic iff a disk piece carries a copy of each.
QuadPairing quad_test(const EmbeddedGraph& ext, int e_id, int f_id) {
  QuadPairing out;
  const auto& e = ext.edge(e_id);
  CutResult cut1 = cut_along(ext, BoundaryPath{{e.u, e.v}, {e_id}});
  const auto& f_in_cut = cut1.graph.edge(f_id);
  CutResult cut2 =
      cut_along(cut1.graph, BoundaryPath{{f_in_cut.u, f_in_cut.v}, {f_id}});
  for (const auto& comp : cut2.graph.components()) {
    EmbeddedGraph sub = cut2.graph.extract_component(comp);
    if (!(sub.classify() == SurfaceSignature(0, 0, 1))) continue;
    // a genuine quadrilateral carries exactly one copy of each edge
    int e_copy = -1, f_copy = -1, e_copies = 0, f_copies = 0;
    for (int cand : {cut1.copy_edges_side1[0], cut1.copy_edges_side2[0]})
      if (sub.has_edge(cand)) {
        e_copy = cand;
        ++e_copies;
      }
    for (int cand : {cut2.copy_edges_side1[0], cut2.copy_edges_side2[0]})
      if (sub.has_edge(cand)) {
        f_copy = cand;
        ++f_copies;
      }
    if (e_copies != 1 || f_copies != 1) continue;
    if (e_copy < 0 || f_copy < 0) continue;
    out.homotopic = true;
    // walk the quad boundary from e.u's copy away from the e-copy edge until
    // an f endpoint copy appears; that endpoint pairs with e.u
    int u_copy = (e_copy == cut1.copy_edges_side1[0]) ? cut1.side1[0] : cut1.side2[0];
    std::map<int, int> f_end_original;
    f_end_original[cut2.side1[0]] = f_in_cut.u;
    f_end_original[cut2.side2[0]] = f_in_cut.u;
    f_end_original[cut2.side1[1]] = f_in_cut.v;
    f_end_original[cut2.side2[1]] = f_in_cut.v;
    auto holes = sub.hole_faces();
    if (holes.size() != 1) continue;
    const auto& walk = sub.faces()[holes.front()].vertices;
    int n = static_cast<int>(walk.size());
    int at = -1;
    for (int i = 0; i < n; ++i)
      if (walk[i] == u_copy) at = i;
    if (at < 0) throw std::logic_error("quad_test: endpoint copy off the quad boundary");
    int v_copy = (e_copy == cut1.copy_edges_side1[0]) ? cut1.side1[1] : cut1.side2[1];
    int dir = (walk[(at + 1) % n] == v_copy) ? -1 : 1;
    for (int step = 1; step < n; ++step) {
      int x = walk[((at + dir * step) % n + n) % n];
      auto it = f_end_original.find(x);
      if (it != f_end_original.end()) {
        out.partner_of_u = it->second;
        break;
      }
    }
    if (out.partner_of_u < 0) throw std::logic_error("quad_test: no f endpoint on the walk");
    return out;
  }
  return out;
}

}  // namespace

DiskWithStrips decompose(const EmbeddedGraph& g, const Pattern& p, int v,
                         const std::vector<std::vector<int>>& cycles) {
  p.validate();
  if (g.hole_count() != 0)
    throw std::invalid_argument("decompose: expects a closed surface carrier");
  if (cycles.empty()) throw std::invalid_argument("decompose: need insulating cycles");
  SurfaceSignature sigma = g.classify();

  const auto& outer = cycles.back();
  std::set<int> outer_set(outer.begin(), outer.end());
  {
    std::set<int> seen;
    for (const auto& c : cycles)
      for (int x : c)
        if (!seen.insert(x).second)
          throw std::invalid_argument("decompose: cycles are not vertex-disjoint");
    if (seen.count(v)) throw std::invalid_argument("decompose: v on a cycle");
  }

  // v-side data for the outermost cycle; every disk must be a genuine disk
  auto outer_walls = cycle_edge_ids(g, outer);
  auto outer_comp = g.dual_components(outer_walls);
  int v_face = g.faces_at_vertex(v).front();
  int v_side = outer_comp[v_face];
  std::set<int> inside;  // strictly inside the outermost cycle
  for (int x : g.vertex_ids()) {
    if (outer_set.count(x)) continue;
    auto fs = g.faces_at_vertex(x);
    if (!fs.empty() && outer_comp[fs.front()] == v_side) inside.insert(x);
  }
  for (const auto& cyc : cycles) {
    auto walls = cycle_edge_ids(g, cyc);
    auto comp = g.dual_components(walls);
    std::set<int> cset(cyc.begin(), cyc.end());
    if (region_euler(g, comp, comp[v_face], cset, walls) != 1)
      throw std::invalid_argument("decompose: a cycle does not bound a disk around v");
  }
  for (int t : p.terminals()) {
    if (inside.count(t))
      throw std::invalid_argument("decompose: terminal strictly inside the insulation");
    if (!outer_set.count(t))
      throw std::invalid_argument("decompose: terminals must lie on the outermost cycle");
  }
  for (int x : g.vertex_ids())
    if (x != v && !inside.count(x) && !outer_set.count(x)) {
      bool on_some_cycle = false;
      for (const auto& c : cycles)
        if (std::find(c.begin(), c.end(), x) != c.end()) on_some_cycle = true;
      if (!on_some_cycle)
        throw std::invalid_argument("decompose: vertex neither inside nor on the cycles");
    }

  // split edges: cycle edges of C_t, interior (v side), exterior
  std::set<int> outer_wall_set(outer_walls.begin(), outer_walls.end());
  std::vector<int> exterior, interior_chords;
  for (int eid : g.edge_ids()) {
    if (outer_wall_set.count(eid)) continue;
    const auto& e = g.edge(eid);
    bool u_in = inside.count(e.u) || e.u == v, w_in = inside.count(e.v) || e.v == v;
    if (u_in || w_in) continue;  // interior by incidence
    if (!outer_set.count(e.u) || !outer_set.count(e.v))
      throw std::invalid_argument("decompose: edge outside the model");
    int ei = g.edge_index_of(eid);
    bool side1_in = outer_comp[g.face_of_blade(2 * (2 * ei) + 0)] == v_side;
    bool side2_in = outer_comp[g.face_of_blade(2 * (2 * ei) + 1)] == v_side;
    if (side1_in && side2_in) {
      interior_chords.push_back(eid);
    } else if (!side1_in && !side2_in) {
      exterior.push_back(eid);
    } else {
      throw std::invalid_argument("decompose: chord straddles the outermost cycle");
    }
  }

  // remembered blades on an outer cycle edge: inner and outer sides
  int e0 = outer_walls.front();
  int e0_idx = g.edge_index_of(e0);
  int inner_s = outer_comp[g.face_of_blade(2 * (2 * e0_idx) + 0)] == v_side ? 0 : 1;
  EmbeddedGraph::HalfEdge he0{e0, 0};

  // exterior surface: the outer cycle plus exterior edges, disk side marked
  std::vector<int> ext_vertices(outer.begin(), outer.end());
  EmbeddedGraph ext = g.filtered(ext_vertices, interior_chords);
  ext.clear_holes();
  ext.mark_hole(ext.face_of_blade(2 * ext.dart_of(he0) + inner_s));

  DiskWithStrips out;

  // contractibility by cutting; caps for the nesting order
  std::map<int, std::set<int>> cap;  // edge -> cap vertices (original ids)
  std::map<int, bool> contractible;
  for (int eid : exterior) {
    const auto& e = ext.edge(eid);
    CutResult cut = cut_along(ext, BoundaryPath{{e.u, e.v}, {eid}});
    auto comps = cut.graph.components();
    contractible[eid] = false;
    if (comps.size() == 2) {
      for (const auto& comp : comps) {
        EmbeddedGraph sub = cut.graph.extract_component(comp);
        if (!(sub.classify() == SurfaceSignature(0, 0, 1))) continue;
        contractible[eid] = true;
        std::set<int> cv;
        for (int x : comp)
          if (outer_set.count(x)) cv.insert(x);
        cv.insert(e.u);
        cv.insert(e.v);
        cap[eid] = cv;
        break;
      }
    }
  }

  // group into homotopy classes
  std::vector<std::vector<int>> classes;
  std::vector<bool> class_contractible;
  bool ext_is_disk = sigma.genus() == 0;
  std::map<int, std::map<int, int>> partner;  // class rep edge -> (f -> partner of rep.u)
  for (int eid : exterior) {
    bool placed = false;
    for (std::size_t c = 0; c < classes.size() && !placed; ++c) {
      int rep = classes[c].front();
      if (contractible[eid] != class_contractible[c]) continue;
      bool same;
      if (contractible[eid]) {
        if (ext_is_disk) {
          same = true;  // the exterior is a disk: everything is homotopic
        } else {
          const auto& ce = cap[eid];
          const auto& cr = cap[rep];
          same = std::includes(ce.begin(), ce.end(), cr.begin(), cr.end()) ||
                 std::includes(cr.begin(), cr.end(), ce.begin(), ce.end());
        }
      } else {
        same = quad_test(ext, rep, eid).homotopic;
      }
      if (same) {
        classes[c].push_back(eid);
        placed = true;
      }
    }
    if (!placed) {
      classes.push_back({eid});
      class_contractible.push_back(contractible[eid]);
    }
  }
  for (std::size_t c = 0; c < classes.size(); ++c)
    (class_contractible[c] ? out.contractible_classes : out.noncontractible_classes) += 1;

  int k = p.size();
  if (out.contractible_classes > 2 * k)
    out.violations.push_back("contractible classes exceed 2k (" +
                             std::to_string(out.contractible_classes) + " > " +
                             std::to_string(2 * k) + ")");
  if (out.noncontractible_classes > 3 * sigma.genus())
    out.violations.push_back("non-contractible classes exceed 3g (" +
                             std::to_string(out.noncontractible_classes) + " > " +
                             std::to_string(3 * sigma.genus()) + ")");

  // assemble strips: matching check, ends, transversal order
  std::map<int, int> outer_pos;
  for (std::size_t i = 0; i < outer.size(); ++i) outer_pos[outer[i]] = static_cast<int>(i);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    Strip strip;
    strip.contractible = class_contractible[c];
    std::set<int> touched;
    bool matching_ok = true;
    for (int eid : classes[c]) {
      const auto& e = ext.edge(eid);
      if (!touched.insert(e.u).second || !touched.insert(e.v).second) matching_ok = false;
    }
    if (!matching_ok) {
      out.violations.push_back("strip is not a matching");
      strip.edges = classes[c];
      out.strips.push_back(std::move(strip));
      continue;
    }
    int rep = classes[c].front();
    const auto& rep_edge = ext.edge(rep);
    std::map<int, int> end_a_of;  // edge -> its end-A endpoint
    end_a_of[rep] = rep_edge.u;
    for (std::size_t j = 1; j < classes[c].size(); ++j) {
      int f = classes[c][j];
      auto q = quad_test(ext, rep, f);
      if (!q.homotopic) throw std::logic_error("decompose: class member fails the quad test");
      end_a_of[f] = q.partner_of_u;
    }
    // transversal order: sort by end-A position after the largest cyclic gap
    std::vector<std::pair<int, int>> ordered;  // (position, edge)
    for (int eid : classes[c]) ordered.emplace_back(outer_pos.at(end_a_of[eid]), eid);
    std::sort(ordered.begin(), ordered.end());
    int m = static_cast<int>(outer.size());
    int cut_at = 0, best_gap = -1;
    int q = static_cast<int>(ordered.size());
    for (int j = 0; j < q; ++j) {
      int gap = (ordered[(j + 1) % q].first - ordered[j].first + m) % m;
      if (gap > best_gap) {
        best_gap = gap;
        cut_at = (j + 1) % q;
      }
    }
    for (int j = 0; j < q; ++j) {
      int eid = ordered[(cut_at + j) % q].second;
      strip.edges.push_back(eid);
      int a = end_a_of[eid];
      const auto& e = ext.edge(eid);
      strip.end_a.push_back(a);
      strip.end_b.push_back(a == e.u ? e.v : e.u);
    }
    out.strips.push_back(std::move(strip));
  }

  // split strips until every matched terminal is a corner
  std::set<int> terminals(p.terminals().begin(), p.terminals().end());
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t s = 0; s < out.strips.size() && !changed; ++s) {
      Strip& strip = out.strips[s];
      int q = static_cast<int>(strip.edges.size());
      for (int j = 0; j < q && !changed; ++j) {
        bool hit = terminals.count(strip.end_a[j]) || terminals.count(strip.end_b[j]);
        if (!hit || j == q - 1) continue;  // last edge: already a corner
        bool extreme_first = (j == 0) && (terminals.count(strip.end_a[0]) ||
                                          terminals.count(strip.end_b[0]));
        if (extreme_first && q >= 1) {
          // the first edge's endpoints are corners already
          continue;
        }
        Strip tail;
        tail.contractible = strip.contractible;
        tail.edges.assign(strip.edges.begin() + j + 1, strip.edges.end());
        tail.end_a.assign(strip.end_a.begin() + j + 1, strip.end_a.end());
        tail.end_b.assign(strip.end_b.begin() + j + 1, strip.end_b.end());
        strip.edges.resize(j + 1);
        strip.end_a.resize(j + 1);
        strip.end_b.resize(j + 1);
        out.strips.push_back(std::move(tail));
        changed = true;
      }
    }
  }

  // interior leveled disk
  std::vector<int> keep{v};
  for (int x : inside) keep.push_back(x);
  for (const auto& c : cycles) keep.insert(keep.end(), c.begin(), c.end());
  EmbeddedGraph interior = g.filtered(keep, exterior);
  interior.clear_holes();
  interior.mark_hole(interior.face_of_blade(2 * interior.dart_of(he0) + (1 - inner_s)));
  out.disk = make_leveled_disk(std::move(interior), v, cycles);
  return out;
}

}  // namespace llab
