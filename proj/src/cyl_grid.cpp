#include "linkagelab/cyl_grid.hpp"

#include <algorithm>
#include <stdexcept>

namespace llab {

std::vector<int> CylGrid::boundary_cycle(bool outer) const {
  std::vector<int> out;
  int r = outer ? n - 1 : 0;
  for (int j = 0; j < m; ++j) out.push_back(vertex(r, j));
  return out;
}

CylGrid build_grid(int m, int n) {
  if (m < 3 || n < 1) throw std::invalid_argument("build_grid: need m >= 3 and n >= 1");
  CylGrid g;
  g.m = m;
  g.n = n;
  g.graph = Graph(m * n);
  for (int r = 0; r < n; ++r)
    for (int j = 0; j < m; ++j) {
      g.graph.add_edge(g.vertex(r, j), g.vertex(r, j + 1));
      if (r + 1 < n) g.graph.add_edge(g.vertex(r, j), g.vertex(r + 1, j));
    }
  return g;
}

Linkage realize(const CylGrid& grid, const Pattern& p) {
  p.validate();
  const int k = p.size();
  Linkage out;
  out.paths.resize(k);
  if (k == 0) return out;
  if (grid.n < k) throw std::invalid_argument("realize: need n >= |pattern|");

  int ring = -1;
  for (int v : p.terminals()) {
    if (v < 0 || v >= grid.m * grid.n)
      throw std::invalid_argument("realize: terminal outside the grid");
    int r = grid.ring_of(v);
    if (r != 0 && r != grid.n - 1)
      throw std::invalid_argument("realize: terminals must lie on a boundary cycle");
    if (ring < 0) ring = r;
    if (r != ring) throw std::invalid_argument("realize: terminals on both boundary cycles");
  }
  std::vector<int> order;
  for (int j = 0; j < grid.m; ++j) order.push_back(grid.vertex(ring, j));
  if (!cross_free(p, order)) throw std::invalid_argument("realize: pattern is not cross-free");

  const int inward = (ring == 0) ? 1 : -1;
  struct Anchor {
    int pos = -1;
    std::vector<int> trail;  // terminal .. current anchor vertex
  };
  std::vector<std::array<Anchor, 2>> anchors(k);
  std::vector<char> active(k, 1);
  for (int i = 0; i < k; ++i) {
    anchors[i][0].pos = grid.pos_of(p.pairs[i].first);
    anchors[i][0].trail = {p.pairs[i].first};
    anchors[i][1].pos = grid.pos_of(p.pairs[i].second);
    anchors[i][1].trail = {p.pairs[i].second};
  }

  int cur = ring;
  int remaining = k;
  while (remaining > 0) {
    if (cur < 0 || cur >= grid.n) throw std::logic_error("realize: ran out of rings");
    int routed = -1;
    for (int i = 0; i < k && routed < 0; ++i)
      if (active[i] && p.is_singleton(i)) routed = i;
    if (routed >= 0) {
      out.paths[routed] = {p.pairs[routed].first};
    } else {
      // shortest free clockwise arc over all active pairs
      int best_len = -1, best_start = -1, best_elem = -1, best_from = -1;
      for (int i = 0; i < k; ++i) {
        if (!active[i]) continue;
        for (int from = 0; from < 2; ++from) {
          int a = anchors[i][from].pos, b = anchors[i][1 - from].pos;
          int len = ((b - a) % grid.m + grid.m) % grid.m;
          bool free_arc = true;
          for (int j = 0; j < k && free_arc; ++j) {
            if (!active[j] || j == i) continue;
            for (int end = 0; end < 2; ++end) {
              int off = ((anchors[j][end].pos - a) % grid.m + grid.m) % grid.m;
              if (off > 0 && off < len) free_arc = false;
            }
          }
          if (!free_arc) continue;
          if (best_len < 0 || len < best_len || (len == best_len && a < best_start)) {
            best_len = len;
            best_start = a;
            best_elem = i;
            best_from = from;
          }
        }
      }
      if (best_elem < 0) throw std::logic_error("realize: no free arc in a cross-free pattern");
      std::vector<int> path = anchors[best_elem][best_from].trail;
      for (int step = 1; step <= best_len; ++step)
        path.push_back(grid.vertex(cur, best_start + step));
      const auto& back_trail = anchors[best_elem][1 - best_from].trail;
      for (auto it = back_trail.rbegin() + 1; it != back_trail.rend(); ++it)
        path.push_back(*it);
      if (best_from == 1) std::reverse(path.begin(), path.end());
      out.paths[best_elem] = std::move(path);
      routed = best_elem;
    }
    active[routed] = 0;
    --remaining;
    if (remaining > 0) {
      for (int i = 0; i < k; ++i) {
        if (!active[i]) continue;
        for (int end = 0; end < (p.is_singleton(i) ? 1 : 2); ++end) {
          anchors[i][end].trail.push_back(grid.vertex(cur + inward, anchors[i][end].pos));
        }
      }
      cur += inward;
    }
  }
  if (!verify(grid.graph, p, out)) throw std::logic_error("realize: produced an invalid linkage");
  return out;
}

}  // namespace llab
