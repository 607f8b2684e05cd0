#include "linkagelab/embedded_graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace llab {

std::string SurfaceSignature::to_string() const {
  return "Sigma(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

int EmbeddedGraph::add_vertex(int id) {
  if (id < 0) id = next_vertex_id_;
  if (has_vertex(id)) throw std::invalid_argument("add_vertex: id in use");
  next_vertex_id_ = std::max(next_vertex_id_, id + 1);
  vertex_index_[id] = vertex_count();
  vertex_ids_.push_back(id);
  rotation_.emplace_back();
  invalidate();
  return id;
}

int EmbeddedGraph::add_edge(int u, int v, int sign, int id) {
  if (!has_vertex(u) || !has_vertex(v)) throw std::invalid_argument("add_edge: no such vertex");
  if (sign != 1 && sign != -1) throw std::invalid_argument("add_edge: sign must be +-1");
  if (id < 0) id = next_edge_id_;
  if (has_edge(id)) throw std::invalid_argument("add_edge: id in use");
  next_edge_id_ = std::max(next_edge_id_, id + 1);
  int idx = edge_count();
  edge_index_[id] = idx;
  edges_.push_back(EdgeRec{id, u, v, sign});
  rotation_[vertex_index(u)].push_back(2 * idx);
  rotation_[vertex_index(v)].push_back(2 * idx + 1);
  invalidate();
  return id;
}

void EmbeddedGraph::set_rotation(int vertex, const std::vector<HalfEdge>& order) {
  int idx = vertex_index(vertex);
  std::vector<int> darts;
  darts.reserve(order.size());
  for (const auto& he : order) darts.push_back(dart_of(he));
  auto sorted_new = darts;
  auto sorted_old = rotation_[idx];
  std::sort(sorted_new.begin(), sorted_new.end());
  std::sort(sorted_old.begin(), sorted_old.end());
  if (sorted_new != sorted_old)
    throw std::invalid_argument("set_rotation: order must permute the incident half-edges");
  rotation_[idx] = std::move(darts);
  invalidate();
}

std::vector<EmbeddedGraph::HalfEdge> EmbeddedGraph::rotation(int vertex) const {
  std::vector<HalfEdge> out;
  for (int d : rotation_[vertex_index(vertex)]) out.push_back(half_edge_of(d));
  return out;
}

std::vector<int> EmbeddedGraph::edge_ids() const {
  std::vector<int> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back(e.id);
  return out;
}

const EmbeddedGraph::EdgeRec& EmbeddedGraph::edge(int id) const {
  return edges_[edge_index_of(id)];
}

int EmbeddedGraph::degree(int vertex) const {
  return static_cast<int>(rotation_[vertex_index(vertex)].size());
}

int EmbeddedGraph::vertex_index(int id) const {
  auto it = vertex_index_.find(id);
  if (it == vertex_index_.end()) throw std::invalid_argument("no such vertex");
  return it->second;
}

int EmbeddedGraph::edge_index_of(int id) const {
  auto it = edge_index_.find(id);
  if (it == edge_index_.end()) throw std::invalid_argument("no such edge");
  return it->second;
}

int EmbeddedGraph::dart_tail(int dart) const {
  const EdgeRec& e = edges_[dart >> 1];
  return (dart & 1) == 0 ? e.u : e.v;
}

int EmbeddedGraph::dart_head(int dart) const {
  const EdgeRec& e = edges_[dart >> 1];
  return (dart & 1) == 0 ? e.v : e.u;
}

int EmbeddedGraph::dart_of(HalfEdge he) const { return 2 * edge_index_of(he.edge) + he.end; }

EmbeddedGraph::HalfEdge EmbeddedGraph::half_edge_of(int dart) const {
  return HalfEdge{edges_[dart >> 1].id, dart & 1};
}

const std::vector<int>& EmbeddedGraph::rotation_darts(int vertex_index_value) const {
  return rotation_[vertex_index_value];
}

void EmbeddedGraph::validate() const {
  std::vector<int> seen(2 * edge_count(), 0);
  for (int vi = 0; vi < vertex_count(); ++vi) {
    for (int d : rotation_[vi]) {
      if (d < 0 || d >= 2 * edge_count()) throw std::invalid_argument("rotation: dart out of range");
      if (dart_tail(d) != vertex_ids_[vi])
        throw std::invalid_argument("rotation: dart listed at the wrong vertex");
      if (++seen[d] > 1) throw std::invalid_argument("rotation: duplicate half-edge");
    }
  }
  for (int d = 0; d < 2 * edge_count(); ++d)
    if (!seen[d]) throw std::invalid_argument("rotation: missing half-edge");
}

int EmbeddedGraph::next_blade(int blade) const {
  int d = blade >> 1, s = blade & 1;
  const EdgeRec& e = edges_[d >> 1];
  int s2 = s ^ (e.sign < 0 ? 1 : 0);
  int twin = d ^ 1;
  int hv = vertex_index(dart_tail(twin));
  const auto& rot = rotation_[hv];
  int deg = static_cast<int>(rot.size());
  int pos = -1;
  for (int i = 0; i < deg; ++i)
    if (rot[i] == twin) {
      pos = i;
      break;
    }
  if (pos < 0) throw std::logic_error("next_blade: twin not in rotation");
  int nd = (s2 == 0) ? rot[(pos + 1) % deg] : rot[(pos + deg - 1) % deg];
  return 2 * nd + s2;
}

int EmbeddedGraph::rev_blade(int blade) const {
  int d = blade >> 1, s = blade & 1;
  const EdgeRec& e = edges_[d >> 1];
  return 2 * (d ^ 1) + (s ^ 1 ^ (e.sign < 0 ? 1 : 0));
}

const EmbeddedGraph::TraceData& EmbeddedGraph::trace() const {
  if (trace_) return *trace_;
  validate();
  TraceData data;
  int blade_total = 4 * edge_count();
  std::vector<int> orbit_of(blade_total, -1);
  std::vector<std::vector<int>> orbits;
  for (int b = 0; b < blade_total; ++b) {
    if (orbit_of[b] >= 0) continue;
    std::vector<int> orbit;
    int cur = b;
    do {
      orbit_of[cur] = static_cast<int>(orbits.size());
      orbit.push_back(cur);
      cur = next_blade(cur);
    } while (cur != b);
    orbits.push_back(std::move(orbit));
  }
  int n_orbits = static_cast<int>(orbits.size());
  std::vector<int> partner(n_orbits, -1);
  for (int i = 0; i < n_orbits; ++i) {
    int r = orbit_of[rev_blade(orbits[i][0])];
    if (r == i) throw std::logic_error("face tracing: self-paired orbit");
    if (orbits[r].size() != orbits[i].size())
      throw std::logic_error("face tracing: mismatched orbit pair");
    partner[i] = r;
  }
  data.blade_face.assign(blade_total, -1);
  std::vector<std::pair<int, int>> keyed;  // (rep blade, orbit index of canonical)
  for (int i = 0; i < n_orbits; ++i) {
    if (partner[i] < i) continue;
    int mi = *std::min_element(orbits[i].begin(), orbits[i].end());
    int mp = *std::min_element(orbits[partner[i]].begin(), orbits[partner[i]].end());
    keyed.emplace_back(std::min(mi, mp), mi <= mp ? i : partner[i]);
  }
  std::sort(keyed.begin(), keyed.end());
  for (const auto& [rep, oi] : keyed) {
    Face face;
    face.rep = rep;
    face.orbit = orbits[oi];
    for (int blade : face.orbit) {
      face.darts.push_back(blade >> 1);
      face.vertices.push_back(dart_tail(blade >> 1));
    }
    int fi = static_cast<int>(data.faces.size());
    for (int blade : orbits[oi]) data.blade_face[blade] = fi;
    for (int blade : orbits[partner[oi]]) data.blade_face[blade] = fi;
    data.faces.push_back(std::move(face));
  }
  trace_ = std::move(data);
  return *trace_;
}

const std::vector<EmbeddedGraph::Face>& EmbeddedGraph::faces() const { return trace().faces; }

int EmbeddedGraph::face_of_blade(int blade) const { return trace().blade_face[blade]; }

int EmbeddedGraph::face_at(HalfEdge he, int side) const {
  return face_of_blade(2 * dart_of(he) + (side ? 1 : 0));
}

void EmbeddedGraph::mark_hole(int face_index) {
  const auto& fs = faces();
  if (face_index < 0 || face_index >= static_cast<int>(fs.size()))
    throw std::invalid_argument("mark_hole: no such face");
  int rep = fs[face_index].rep;
  for (int r : hole_reps_)
    if (trace().blade_face[r] == face_index)
      throw std::invalid_argument("mark_hole: face already marked");
  hole_reps_.push_back(rep);
}

void EmbeddedGraph::clear_holes() { hole_reps_.clear(); }

std::vector<int> EmbeddedGraph::hole_faces() const {
  std::vector<int> out;
  for (int rep : hole_reps_) out.push_back(face_of_blade(rep));
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw std::logic_error("hole markers collapsed onto one face");
  return out;
}

bool EmbeddedGraph::connected() const {
  if (vertex_count() == 0) return true;
  return components().size() == 1;
}

std::vector<std::vector<int>> EmbeddedGraph::components() const {
  std::vector<int> comp(vertex_count(), -1);
  int label = 0;
  for (int start = 0; start < vertex_count(); ++start) {
    if (comp[start] >= 0) continue;
    std::deque<int> queue{start};
    comp[start] = label;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (int d : rotation_[x]) {
        int y = vertex_index(dart_head(d));
        if (comp[y] < 0) {
          comp[y] = label;
          queue.push_back(y);
        }
      }
    }
    ++label;
  }
  std::vector<std::vector<int>> out(label);
  for (int i = 0; i < vertex_count(); ++i) out[comp[i]].push_back(vertex_ids_[i]);
  return out;
}

EmbeddedGraph EmbeddedGraph::extract_component(const std::vector<int>& vertices) const {
  std::set<int> keep(vertices.begin(), vertices.end());
  EmbeddedGraph out;
  for (int v : vertex_ids_)
    if (keep.count(v)) out.add_vertex(v);
  std::unordered_map<int, int> new_edge_index;
  for (const auto& e : edges_) {
    bool in_u = keep.count(e.u) != 0, in_v = keep.count(e.v) != 0;
    if (in_u != in_v) throw std::invalid_argument("extract_component: set is not a component");
    if (!in_u) continue;
    new_edge_index[e.id] = out.edge_count();
    out.edge_index_[e.id] = out.edge_count();
    out.edges_.push_back(e);
    out.next_edge_id_ = std::max(out.next_edge_id_, e.id + 1);
  }
  for (int vi = 0; vi < vertex_count(); ++vi) {
    if (!keep.count(vertex_ids_[vi])) continue;
    auto& rot = out.rotation_[out.vertex_index(vertex_ids_[vi])];
    rot.clear();
    for (int d : rotation_[vi]) {
      int eid = edges_[d >> 1].id;
      rot.push_back(2 * new_edge_index.at(eid) + (d & 1));
    }
  }
  for (int rep : hole_reps_) {
    int d = rep >> 1, s = rep & 1;
    int eid = edges_[d >> 1].id;
    auto it = new_edge_index.find(eid);
    if (it == new_edge_index.end()) continue;
    out.hole_reps_.push_back(2 * (2 * it->second + (d & 1)) + s);
  }
  out.invalidate();
  return out;
}

EmbeddedGraph EmbeddedGraph::filtered(const std::vector<int>& vertices,
                                      const std::vector<int>& drop_edges) const {
  std::set<int> keep(vertices.begin(), vertices.end());
  std::set<int> drop(drop_edges.begin(), drop_edges.end());
  EmbeddedGraph out;
  for (int v : vertex_ids_)
    if (keep.count(v)) out.add_vertex(v);
  std::unordered_map<int, int> new_edge_index;
  for (const auto& e : edges_) {
    if (drop.count(e.id) || !keep.count(e.u) || !keep.count(e.v)) continue;
    new_edge_index[e.id] = out.edge_count();
    out.edge_index_[e.id] = out.edge_count();
    out.edges_.push_back(e);
    out.next_edge_id_ = std::max(out.next_edge_id_, e.id + 1);
  }
  for (int vi = 0; vi < vertex_count(); ++vi) {
    if (!keep.count(vertex_ids_[vi])) continue;
    auto& rot = out.rotation_[out.vertex_index(vertex_ids_[vi])];
    rot.clear();
    for (int d : rotation_[vi]) {
      auto it = new_edge_index.find(edges_[d >> 1].id);
      if (it != new_edge_index.end()) rot.push_back(2 * it->second + (d & 1));
    }
  }
  for (int rep : hole_reps_) {
    int d = rep >> 1, s = rep & 1;
    auto it = new_edge_index.find(edges_[d >> 1].id);
    if (it != new_edge_index.end()) out.hole_reps_.push_back(2 * (2 * it->second + (d & 1)) + s);
  }
  out.invalidate();
  return out;
}

void EmbeddedGraph::remove_vertex(int id) {
  int vi = vertex_index(id);
  // edges to drop
  std::vector<char> drop(edge_count(), 0);
  for (int ei = 0; ei < edge_count(); ++ei)
    if (edges_[ei].u == id || edges_[ei].v == id) drop[ei] = 1;
  for (int rep : hole_reps_)
    if (drop[(rep >> 1) >> 1])
      throw std::invalid_argument("remove_vertex: would destroy a marked hole");
  std::vector<int> dart_map(2 * edge_count(), -1);
  std::vector<EdgeRec> new_edges;
  std::unordered_map<int, int> new_index;
  for (int ei = 0; ei < edge_count(); ++ei) {
    if (drop[ei]) continue;
    int ni = static_cast<int>(new_edges.size());
    dart_map[2 * ei] = 2 * ni;
    dart_map[2 * ei + 1] = 2 * ni + 1;
    new_index[edges_[ei].id] = ni;
    new_edges.push_back(edges_[ei]);
  }
  for (int& rep : hole_reps_) {
    int d = rep >> 1, s = rep & 1;
    rep = 2 * dart_map[d] + s;
  }
  edges_ = std::move(new_edges);
  edge_index_ = std::move(new_index);
  vertex_index_.erase(id);
  vertex_ids_.erase(vertex_ids_.begin() + vi);
  rotation_.erase(rotation_.begin() + vi);
  vertex_index_.clear();
  for (int i = 0; i < vertex_count(); ++i) vertex_index_[vertex_ids_[i]] = i;
  for (auto& rot : rotation_) {
    std::vector<int> next;
    for (int d : rot)
      if (dart_map[d] >= 0) next.push_back(dart_map[d]);
    rot = std::move(next);
  }
  invalidate();
}

int EmbeddedGraph::subdivide_edge(int edge_id) {
  int ei = edge_index_of(edge_id);
  for (int rep : hole_reps_)
    if ((rep >> 1) >> 1 == ei)
      throw std::invalid_argument("subdivide_edge: hole marker sits on this edge");
  EdgeRec old = edges_[ei];
  int w = add_vertex();
  // new edges appended; then old edge removed by index remap
  int ia = edge_count();
  int id_a = next_edge_id_++;
  edge_index_[id_a] = ia;
  edges_.push_back(EdgeRec{id_a, old.u, w, old.sign});
  int ib = edge_count();
  int id_b = next_edge_id_++;
  edge_index_[id_b] = ib;
  edges_.push_back(EdgeRec{id_b, w, old.v, 1});
  // splice rotations: replace old darts in place
  for (auto& rot : rotation_) {
    for (int& d : rot) {
      if (d == 2 * ei) d = 2 * ia;            // at u
      else if (d == 2 * ei + 1) d = 2 * ib + 1;  // at v
    }
  }
  rotation_[vertex_index(w)] = {2 * ia + 1, 2 * ib};
  // drop the old edge record
  std::vector<int> dart_map(2 * edge_count(), -1);
  std::vector<EdgeRec> new_edges;
  std::unordered_map<int, int> new_index;
  for (int i = 0; i < edge_count(); ++i) {
    if (i == ei) continue;
    int ni = static_cast<int>(new_edges.size());
    dart_map[2 * i] = 2 * ni;
    dart_map[2 * i + 1] = 2 * ni + 1;
    new_index[edges_[i].id] = ni;
    new_edges.push_back(edges_[i]);
  }
  for (int& rep : hole_reps_) {
    int d = rep >> 1, s = rep & 1;
    rep = 2 * dart_map[d] + s;
  }
  edges_ = std::move(new_edges);
  edge_index_ = std::move(new_index);
  for (auto& rot : rotation_)
    for (int& d : rot) d = dart_map[d];
  invalidate();
  return w;
}

int EmbeddedGraph::add_chord(int face_index, int corner_a, int corner_b, int id) {
  const auto& fs = faces();
  if (face_index < 0 || face_index >= static_cast<int>(fs.size()))
    throw std::invalid_argument("add_chord: no such face");
  const Face& f = fs[face_index];
  int len = static_cast<int>(f.orbit.size());
  if (corner_a == corner_b || corner_a < 0 || corner_b < 0 || corner_a >= len || corner_b >= len)
    throw std::invalid_argument("add_chord: bad corners");
  auto corner_info = [&](int i) {
    int blade = f.orbit[i];
    int next = f.orbit[(i + 1) % len];
    int d = blade >> 1;
    int s_after = next & 1;
    int vertex = dart_head(d);
    return std::tuple<int, int, int>(vertex, d ^ 1, s_after);  // (vertex id, twin dart, sigma')
  };
  auto [va, twin_a, sa] = corner_info(corner_a);
  auto [vb, twin_b, sb] = corner_info(corner_b);
  int sign = (sa == sb) ? 1 : -1;
  if (id < 0) id = next_edge_id_;
  if (has_edge(id)) throw std::invalid_argument("add_chord: id in use");
  next_edge_id_ = std::max(next_edge_id_, id + 1);
  int idx = edge_count();
  edge_index_[id] = idx;
  edges_.push_back(EdgeRec{id, va, vb, sign});
  // insertion: dart goes into the rotation gap after twin (sigma' +) or before it
  auto insert_at = [&](int vertex, int twin, int s_after, int new_dart) {
    auto& rot = rotation_[vertex_index(vertex)];
    auto it = std::find(rot.begin(), rot.end(), twin);
    if (it == rot.end()) throw std::logic_error("add_chord: twin missing");
    if (s_after == 0)
      rot.insert(it + 1, new_dart);
    else
      rot.insert(it, new_dart);
  };
  // Same-vertex chords: insert one dart at a time; positions may shift, so
  // re-find the anchor each time (anchors are darts, stable under insertion).
  insert_at(va, twin_a, sa, 2 * idx);
  insert_at(vb, twin_b, sb, 2 * idx + 1);
  invalidate();
  return id;
}

int EmbeddedGraph::add_pendant(int face_index, int corner, int vertex_id, int edge_id) {
  const auto& fs = faces();
  if (face_index < 0 || face_index >= static_cast<int>(fs.size()))
    throw std::invalid_argument("add_pendant: no such face");
  const Face& f = fs[face_index];
  int len = static_cast<int>(f.orbit.size());
  if (corner < 0 || corner >= len) throw std::invalid_argument("add_pendant: bad corner");
  int blade = f.orbit[corner];
  int next = f.orbit[(corner + 1) % len];
  int d = blade >> 1;
  int s_after = next & 1;
  int anchor = dart_head(d);
  int w = add_vertex(vertex_id);
  if (edge_id < 0) edge_id = next_edge_id_;
  if (has_edge(edge_id)) throw std::invalid_argument("add_pendant: edge id in use");
  next_edge_id_ = std::max(next_edge_id_, edge_id + 1);
  int idx = edge_count();
  edge_index_[edge_id] = idx;
  edges_.push_back(EdgeRec{edge_id, anchor, w, 1});
  auto& rot = rotation_[vertex_index(anchor)];
  auto it = std::find(rot.begin(), rot.end(), d ^ 1);
  if (it == rot.end()) throw std::logic_error("add_pendant: twin missing");
  if (s_after == 0)
    rot.insert(it + 1, 2 * idx);
  else
    rot.insert(it, 2 * idx);
  rotation_[vertex_index(w)] = {2 * idx + 1};
  invalidate();
  return w;
}

bool EmbeddedGraph::orientable_embedding() const {
  // Orientable iff every cycle carries an even number of negative edges.
  std::vector<int> pot(vertex_count(), -1);
  for (int start = 0; start < vertex_count(); ++start) {
    if (pot[start] >= 0) continue;
    pot[start] = 0;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (int d : rotation_[x]) {
        const EdgeRec& e = edges_[d >> 1];
        int neg = e.sign < 0 ? 1 : 0;
        int y = vertex_index(dart_head(d));
        if (y == x) {
          if (neg) return false;  // negative loop
          continue;
        }
        if (pot[y] < 0) {
          pot[y] = pot[x] ^ neg;
          queue.push_back(y);
        } else if (pot[y] != (pot[x] ^ neg)) {
          return false;
        }
      }
    }
  }
  return true;
}

SurfaceSignature EmbeddedGraph::classify() const {
  validate();
  if (!connected()) throw std::invalid_argument("classify: graph must be connected");
  int F;
  if (edge_count() == 0) {
    F = 1;  // lone vertex on a sphere
  } else {
    F = static_cast<int>(faces().size());
  }
  int chi = vertex_count() - edge_count() + F;
  int c = hole_count();
  hole_faces();  // validates markers
  int g = 2 - chi;
  if (g < 0) throw std::invalid_argument("classify: malformed embedding (chi > 2)");
  if (orientable_embedding()) {
    if (g % 2 != 0) throw std::invalid_argument("classify: odd genus on orientable embedding");
    return SurfaceSignature(g / 2, 0, c);
  }
  if (g == 0) throw std::invalid_argument("classify: non-orientable embedding with genus 0");
  return SurfaceSignature(0, g, c);
}

std::vector<int> EmbeddedGraph::dual_components(const std::vector<int>& wall_edge_ids) const {
  const auto& fs = faces();
  std::set<int> walls;
  for (int id : wall_edge_ids) walls.insert(edge_index_of(id));
  std::vector<int> parent(fs.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int ei = 0; ei < edge_count(); ++ei) {
    if (walls.count(ei)) continue;
    int f1 = face_of_blade(2 * (2 * ei) + 0);
    int f2 = face_of_blade(2 * (2 * ei) + 1);
    parent[find(f1)] = find(f2);
  }
  std::vector<int> label(fs.size());
  for (std::size_t i = 0; i < fs.size(); ++i) label[i] = find(static_cast<int>(i));
  return label;
}

std::vector<int> EmbeddedGraph::faces_at_vertex(int vertex) const {
  std::set<int> out;
  for (int d : rotation_[vertex_index(vertex)]) {
    out.insert(face_of_blade(2 * d));
    out.insert(face_of_blade(2 * d + 1));
  }
  return std::vector<int>(out.begin(), out.end());
}

void EmbeddedGraph::flip_vertex(int vertex) {
  int vi = vertex_index(vertex);
  std::reverse(rotation_[vi].begin(), rotation_[vi].end());
  for (auto& e : edges_) {
    bool at_u = e.u == vertex, at_v = e.v == vertex;
    if (at_u != at_v) e.sign = -e.sign;
  }
  for (int& rep : hole_reps_) {
    int d = rep >> 1, s = rep & 1;
    if (dart_tail(d) == vertex) rep = 2 * d + (s ^ 1);
  }
  invalidate();
}

Graph EmbeddedGraph::skeleton(std::vector<int>* out_ids,
                              std::unordered_map<int, int>* out_index) const {
  Graph g(vertex_count());
  std::unordered_map<int, int> index;
  for (int i = 0; i < vertex_count(); ++i) index[vertex_ids_[i]] = i;
  for (const auto& e : edges_) {
    if (e.u == e.v) continue;
    g.add_edge(index[e.u], index[e.v]);
  }
  if (out_ids) *out_ids = vertex_ids_;
  if (out_index) *out_index = index;
  return g;
}

}  // namespace llab
