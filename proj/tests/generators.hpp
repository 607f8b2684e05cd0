#pragma once

// Test-side generators: pattern enumeration and random planar instances.

#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "linkagelab/embedded_graph.hpp"
#include "linkagelab/pattern.hpp"

namespace llab::testgen {

// All patterns with 1..max_k disjoint elements (singletons or pairs) drawn
// from `universe`, in a canonical order (no duplicates up to relabeling of
// elements or swapping pair ends).
inline std::vector<Pattern> all_patterns(const std::vector<int>& universe, int max_k,
                                         bool with_singletons = true) {
  std::vector<Pattern> out;
  int n = static_cast<int>(universe.size());
  std::vector<std::pair<int, int>> elems;
  if (with_singletons)
    for (int i = 0; i < n; ++i) elems.emplace_back(universe[i], universe[i]);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) elems.emplace_back(universe[i], universe[j]);
  int e = static_cast<int>(elems.size());
  std::vector<int> chosen;
  std::vector<char> used(n, 0);
  auto touches = [&](int ei) {
    auto [a, b] = elems[ei];
    auto idx = [&](int v) {
      for (int i = 0; i < n; ++i)
        if (universe[i] == v) return i;
      return -1;
    };
    return used[idx(a)] || used[idx(b)];
  };
  auto mark = [&](int ei, char flag) {
    auto [a, b] = elems[ei];
    for (int i = 0; i < n; ++i)
      if (universe[i] == a || universe[i] == b) used[i] = flag;
  };
  std::function<void(int)> rec = [&](int start) {
    if (!chosen.empty()) {
      Pattern p;
      for (int ei : chosen) p.pairs.push_back(elems[ei]);
      out.push_back(p);
    }
    if (static_cast<int>(chosen.size()) == max_k) return;
    for (int ei = start; ei < e; ++ei) {
      if (touches(ei)) continue;
      mark(ei, 1);
      chosen.push_back(ei);
      rec(ei + 1);
      chosen.pop_back();
      mark(ei, 0);
    }
  };
  rec(0);
  return out;
}

// Cylinder host for gammoid and buffer tests: an (m,h) cylindrical grid with
// optional interior edge drops (boundary rings always intact). Outer ring is
// ring h-1, matching CylGrid.
struct CylHost {
  Graph g;
  int m = 0, h = 0;
  std::vector<int> outer, inner;
  int vertex(int r, int j) const { return r * m + ((j % m) + m) % m; }
};

inline CylHost cylinder_host(int m, int h, std::mt19937* rng = nullptr, double drop = 0.0) {
  CylHost host;
  host.m = m;
  host.h = h;
  host.g = Graph(m * h);
  auto keep = [&](bool interior) {
    if (!interior || !rng || drop <= 0.0) return true;
    return std::uniform_real_distribution<double>(0, 1)(*rng) >= drop;
  };
  for (int r = 0; r < h; ++r)
    for (int j = 0; j < m; ++j) {
      bool boundary_ring = (r == 0 || r == h - 1);
      if (keep(!boundary_ring)) host.g.add_edge(host.vertex(r, j), host.vertex(r, j + 1));
      if (r + 1 < h && keep(true)) host.g.add_edge(host.vertex(r, j), host.vertex(r + 1, j));
    }
  for (int j = 0; j < m; ++j) host.outer.push_back(host.vertex(h - 1, j));
  for (int j = 0; j < m; ++j) host.inner.push_back(host.vertex(0, j));
  return host;
}

// Disk fixture for leveled-disk work: t concentric m-rings around a hub
// (vertex 0), spokes between consecutive rings, the outer face marked as the
// hole. Spokes listed in `blocked` (ring index of the lower ring, position)
// are omitted. Ring r vertex at position j has id 1 + r*m + j.
struct LeveledFixture {
  EmbeddedGraph g;
  int center = 0;
  std::vector<std::vector<int>> rings;
  int ring_vertex(int r, int j) const {
    int m = static_cast<int>(rings[0].size());
    return 1 + r * m + ((j % m) + m) % m;
  }
};

inline LeveledFixture leveled_fixture(int m, int t,
                                      const std::set<std::pair<int, int>>& blocked = {}) {
  LeveledFixture f;
  EmbeddedGraph& g = f.g;
  g.add_vertex(0);
  auto rv = [m](int r, int j) { return 1 + r * m + ((j % m) + m) % m; };
  for (int r = 0; r < t; ++r)
    for (int j = 0; j < m; ++j) g.add_vertex(rv(r, j));
  std::vector<std::vector<int>> ring_edge(t, std::vector<int>(m));
  std::map<std::pair<int, int>, int> spoke;  // (lower ring r, j): r -> r+1
  std::vector<int> hub(m, -1);
  for (int r = 0; r < t; ++r)
    for (int j = 0; j < m; ++j) ring_edge[r][j] = g.add_edge(rv(r, j), rv(r, j + 1));
  for (int r = 0; r + 1 < t; ++r)
    for (int j = 0; j < m; ++j)
      if (!blocked.count({r, j})) spoke[{r, j}] = g.add_edge(rv(r, j), rv(r + 1, j));
  for (int j = 0; j < m; ++j) hub[j] = g.add_edge(0, rv(0, j));
  using HE = EmbeddedGraph::HalfEdge;
  auto end_at = [&g](int eid, int v) { return HE{eid, g.edge(eid).u == v ? 0 : 1}; };
  {
    std::vector<HE> rot;
    for (int j = 0; j < m; ++j) rot.push_back(end_at(hub[j], 0));
    g.set_rotation(0, rot);
  }
  for (int r = 0; r < t; ++r)
    for (int j = 0; j < m; ++j) {
      // counterclockwise: outward, ring ccw, inward, ring cw
      std::vector<HE> rot;
      if (r + 1 < t && spoke.count({r, j})) rot.push_back(end_at(spoke[{r, j}], rv(r, j)));
      rot.push_back(end_at(ring_edge[r][j], rv(r, j)));
      if (r == 0)
        rot.push_back(end_at(hub[j], rv(0, j)));
      else if (spoke.count({r - 1, j}))
        rot.push_back(end_at(spoke[{r - 1, j}], rv(r, j)));
      rot.push_back(end_at(ring_edge[r][(j + m - 1) % m], rv(r, j)));
      g.set_rotation(rv(r, j), rot);
    }
  // the outer face is the unique face whose walk is the outermost ring
  int hole = -1;
  for (std::size_t fi = 0; fi < g.faces().size(); ++fi) {
    const auto& face = g.faces()[fi];
    if (static_cast<int>(face.orbit.size()) != m) continue;
    bool all_outer = true;
    for (int v : face.vertices)
      if (v < 1 + (t - 1) * m) all_outer = false;
    if (all_outer) hole = static_cast<int>(fi);
  }
  g.mark_hole(hole);
  for (int r = 0; r < t; ++r) {
    std::vector<int> ring;
    for (int j = 0; j < m; ++j) ring.push_back(rv(r, j));
    f.rings.push_back(ring);
  }
  return f;
}

// Closed-surface insulation fixture: the leveled disk plus exterior edges
// attached in the outward gap of the outermost ring. Each exterior edge is
// (position a, position b, sign, flip) where flip reverses the dart order at
// the b endpoint; signs/flips select the surface (probe with classify).
inline LeveledFixture closed_fixture(int m, int t,
                                     const std::vector<std::tuple<int, int, int>>& ext_edges) {
  LeveledFixture f = leveled_fixture(m, t);
  EmbeddedGraph& g = f.g;
  g.clear_holes();
  using HE = EmbeddedGraph::HalfEdge;
  auto end_at = [&g](int eid, int v) { return HE{eid, g.edge(eid).u == v ? 0 : 1}; };
  for (const auto& [pa, pb, sign] : ext_edges) {
    int u = f.ring_vertex(t - 1, pa), w = f.ring_vertex(t - 1, pb);
    int eid = g.add_edge(u, w, sign);
    for (int vertex : {u, w}) {
      auto rot = g.rotation(vertex);
      std::vector<HE> next{end_at(eid, vertex)};
      for (const auto& he : rot)
        if (he.edge != eid) next.push_back(he);
      g.set_rotation(vertex, next);
    }
  }
  return f;
}

// Random planar-embedded graph on a sphere, built by repeatedly adding a
// pendant vertex in a face (then possibly connecting it further with chords).
// Always connected, simple enough for routing tests.
inline EmbeddedGraph random_planar(std::mt19937& rng, int target_vertices, int extra_chords) {
  EmbeddedGraph g;
  g.add_vertex();
  g.add_vertex();
  g.add_vertex();
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  while (g.vertex_count() < target_vertices) {
    int nf = static_cast<int>(g.faces().size());
    std::uniform_int_distribution<int> pickf(0, nf - 1);
    int fi = pickf(rng);
    int len = static_cast<int>(g.faces()[fi].orbit.size());
    std::uniform_int_distribution<int> pickc(0, len - 1);
    g.add_pendant(fi, pickc(rng));
  }
  for (int s = 0; s < extra_chords; ++s) {
    int nf = static_cast<int>(g.faces().size());
    std::uniform_int_distribution<int> pickf(0, nf - 1);
    for (int attempt = 0; attempt < 30; ++attempt) {
      int fi = pickf(rng);
      const auto& f = g.faces()[fi];
      int len = static_cast<int>(f.orbit.size());
      if (len < 3) continue;
      std::uniform_int_distribution<int> pickc(0, len - 1);
      int a = pickc(rng), b = pickc(rng);
      if (a == b) continue;
      int va = g.dart_head(f.darts[a]), vb = g.dart_head(f.darts[b]);
      if (va == vb) continue;
      // keep the skeleton simple: skip existing pairs
      bool dup = false;
      for (const auto& he : g.rotation(va)) {
        const auto& rec = g.edge(he.edge);
        if (rec.u + rec.v - va == vb) dup = true;
      }
      if (dup) continue;
      g.add_chord(fi, a, b);
      break;
    }
  }
  return g;
}

}  // namespace llab::testgen
