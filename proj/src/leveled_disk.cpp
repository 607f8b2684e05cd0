#include "linkagelab/leveled_disk.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "linkagelab/flow.hpp"

namespace llab {

namespace {

// Edge ids along a vertex cycle (first matching edge per hop).
std::vector<int> cycle_edges(const EmbeddedGraph& g, const std::vector<int>& cycle) {
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
    if (found < 0) throw std::invalid_argument("cycle hop is not an edge");
    out.push_back(found);
  }
  return out;
}

std::vector<int> walk_edges(const EmbeddedGraph& g, const std::vector<int>& walk) {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    int a = walk[i], b = walk[i + 1];
    int found = -1;
    for (const auto& he : g.rotation(a)) {
      const auto& e = g.edge(he.edge);
      int other = (he.end == 0) ? e.v : e.u;
      if (other == b && found < 0) found = he.edge;
    }
    if (found < 0) throw std::invalid_argument("walk hop is not an edge");
    out.push_back(found);
  }
  return out;
}

}  // namespace

std::vector<int> side_vertices(const EmbeddedGraph& g, const std::vector<int>& cycle,
                               int anchor) {
  auto walls = cycle_edges(g, cycle);
  auto comp = g.dual_components(walls);
  auto anchor_faces = g.faces_at_vertex(anchor);
  if (anchor_faces.empty()) throw std::invalid_argument("side_vertices: isolated anchor");
  int side = comp[anchor_faces.front()];
  std::set<int> on(cycle.begin(), cycle.end());
  if (on.count(anchor)) throw std::invalid_argument("side_vertices: anchor on the cycle");
  std::vector<int> out;
  for (int v : g.vertex_ids()) {
    if (on.count(v)) continue;
    auto fs = g.faces_at_vertex(v);
    if (!fs.empty() && comp[fs.front()] == side) out.push_back(v);
  }
  return out;
}

LeveledDisk make_leveled_disk(EmbeddedGraph g, int center, std::vector<std::vector<int>> cycles) {
  if (cycles.empty()) throw std::invalid_argument("leveled disk: need at least one cycle");
  if (g.hole_count() != 1)
    throw std::invalid_argument("leveled disk: the graph must have exactly one marked hole");
  LeveledDisk d;
  d.center = center;
  std::set<int> seen;
  for (const auto& c : cycles) {
    if (c.size() < 3) throw std::invalid_argument("leveled disk: degenerate cycle");
    for (int v : c)
      if (!seen.insert(v).second)
        throw std::invalid_argument("leveled disk: cycles are not vertex-disjoint");
  }
  if (seen.count(center)) throw std::invalid_argument("leveled disk: center on a cycle");
  int t = static_cast<int>(cycles.size());
  d.inside.resize(t);
  for (int i = 0; i < t; ++i) {
    d.inside[i] = side_vertices(g, cycles[i], center);
    std::sort(d.inside[i].begin(), d.inside[i].end());
  }
  for (int i = 0; i + 1 < t; ++i) {
    std::set<int> next(d.inside[i + 1].begin(), d.inside[i + 1].end());
    for (int v : d.inside[i])
      if (!next.count(v)) throw std::invalid_argument("leveled disk: cycles are not nested");
    for (int v : cycles[i])
      if (!next.count(v)) throw std::invalid_argument("leveled disk: cycles are not nested");
  }
  for (int i = 0; i < t; ++i)
    for (int v : cycles[i]) d.level[v] = i + 1;
  for (int v : g.vertex_ids()) {
    if (d.level.count(v)) continue;
    int lv = -1;
    for (int i = 0; i < t && lv < 0; ++i)
      if (std::binary_search(d.inside[i].begin(), d.inside[i].end(), v)) lv = i + 1;
    if (lv < 0)
      throw std::invalid_argument("leveled disk: vertex outside the outermost cycle");
    d.level[v] = lv;
  }
  d.graph = std::move(g);
  d.cycles = std::move(cycles);
  return d;
}

namespace {

// Does the closed walk (subpath + cap) enclose the center? Enclosed = the
// dual side away from the outer hole.
bool cap_encloses_center(const LeveledDisk& d, const std::vector<int>& subpath,
                         const std::vector<int>& cap_interior) {
  // cap interior is ordered from subpath.front() to subpath.back(); the
  // closing walk runs it backwards
  std::vector<int> walk = subpath;
  for (auto it = cap_interior.rbegin(); it != cap_interior.rend(); ++it) walk.push_back(*it);
  walk.push_back(subpath.front());
  auto walls = walk_edges(d.graph, walk);
  auto comp = d.graph.dual_components(walls);
  int hole_comp = comp[d.graph.hole_faces().front()];
  auto center_faces = d.graph.faces_at_vertex(d.center);
  return comp[center_faces.front()] != hole_comp;
}

// The two arcs of a cycle between two of its vertices (interior only).
std::pair<std::vector<int>, std::vector<int>> cycle_arcs(const std::vector<int>& cycle, int a,
                                                         int b) {
  int n = static_cast<int>(cycle.size());
  int pa = -1, pb = -1;
  for (int i = 0; i < n; ++i) {
    if (cycle[i] == a) pa = i;
    if (cycle[i] == b) pb = i;
  }
  if (pa < 0 || pb < 0) throw std::logic_error("cycle_arcs: endpoint off the cycle");
  std::vector<int> fwd, bwd;
  for (int i = (pa + 1) % n; i != pb; i = (i + 1) % n) fwd.push_back(cycle[i]);
  for (int i = (pa + n - 1) % n; i != pb; i = (i + n - 1) % n) bwd.push_back(cycle[i]);
  return {fwd, bwd};
}

long long potential(const LeveledDisk& d, const std::vector<std::vector<int>>& paths) {
  long long phi = 0;
  for (const auto& p : paths)
    for (int v : p) phi += d.level_of(v);
  return phi;
}

bool has_edge_emb(const EmbeddedGraph& g, int a, int b) {
  for (const auto& he : g.rotation(a)) {
    const auto& e = g.edge(he.edge);
    int other = (he.end == 0) ? e.v : e.u;
    if (other == b) return true;
  }
  return false;
}

bool verify_embedded(const EmbeddedGraph& g, const Pattern& p, const Linkage& l) {
  if (static_cast<int>(l.paths.size()) != p.size()) return false;
  std::set<int> used;
  for (int i = 0; i < p.size(); ++i) {
    const auto& path = l.paths[i];
    if (path.empty()) return false;
    for (int v : path) {
      if (!g.has_vertex(v)) return false;
      if (!used.insert(v).second) return false;
    }
    auto ends = std::minmax(path.front(), path.back());
    auto want = std::minmax(p.pairs[i].first, p.pairs[i].second);
    if (ends != want) return false;
    if (p.is_singleton(i) && path.size() != 1) return false;
    for (std::size_t j = 0; j + 1 < path.size(); ++j)
      if (!has_edge_emb(g, path[j], path[j + 1])) return false;
  }
  return true;
}

}  // namespace

std::vector<Hill> find_hills(const LeveledDisk& d, const std::vector<std::vector<int>>& paths) {
  std::vector<Hill> out;
  std::set<int> used;
  for (const auto& p : paths) used.insert(p.begin(), p.end());
  for (std::size_t pi = 0; pi < paths.size(); ++pi) {
    const auto& path = paths[pi];
    std::vector<int> lv;
    lv.reserve(path.size());
    for (int v : path) lv.push_back(d.level_of(v));
    for (std::size_t a = 0; a < path.size(); ++a) {
      // first return to a level <= lv[a]
      for (std::size_t b = a + 1; b < path.size(); ++b) {
        if (lv[b] > lv[a]) continue;
        if (lv[b] == lv[a] && b > a + 1) {
          int sigma = lv[a];
          const auto& cyc = d.cycles[sigma - 1];
          bool ends_on_cycle =
              std::find(cyc.begin(), cyc.end(), path[a]) != cyc.end() &&
              std::find(cyc.begin(), cyc.end(), path[b]) != cyc.end();
          if (ends_on_cycle) {
            Hill h;
            h.path = static_cast<int>(pi);
            h.from = static_cast<int>(a);
            h.to = static_cast<int>(b);
            h.sea_level = sigma;
            // the center-free cap
            std::vector<int> sub(path.begin() + a, path.begin() + b + 1);
            auto [fwd, bwd] = cycle_arcs(cyc, path[a], path[b]);
            if (!cap_encloses_center(d, sub, fwd)) {
              h.cap = fwd;
            } else {
              h.cap = bwd;
            }
            out.push_back(std::move(h));
          }
        }
        break;
      }
    }
  }
  return out;
}

Linkage eliminate_hills(const LeveledDisk& d, const Pattern& p, const Linkage& l,
                        EliminationStats* stats) {
  if (!verify_embedded(d.graph, p, l))
    throw std::invalid_argument("eliminate_hills: input is not a valid linkage");
  Linkage work = l;
  if (stats) stats->potential_trace.push_back(potential(d, work.paths));
  for (int iter = 0; iter < 100000; ++iter) {
    auto hills = find_hills(d, work.paths);
    if (hills.empty()) {
      if (!verify_embedded(d.graph, p, work))
        throw std::logic_error("eliminate_hills: output linkage broke");
      return work;
    }
    std::sort(hills.begin(), hills.end(), [](const Hill& x, const Hill& y) {
      if (x.sea_level != y.sea_level) return x.sea_level < y.sea_level;
      if (x.cap.size() != y.cap.size()) return x.cap.size() < y.cap.size();
      if (x.path != y.path) return x.path < y.path;
      return x.from < y.from;
    });
    std::set<int> used;
    for (const auto& path : work.paths) used.insert(path.begin(), path.end());
    bool done = false;
    for (const auto& h : hills) {
      bool blocked = false;
      for (int v : h.cap)
        if (used.count(v)) blocked = true;
      if (blocked) continue;
      long long before = potential(d, work.paths);
      auto& path = work.paths[h.path];
      std::vector<int> next(path.begin(), path.begin() + h.from + 1);
      next.insert(next.end(), h.cap.begin(), h.cap.end());
      next.insert(next.end(), path.begin() + h.to, path.end());
      path = std::move(next);
      long long after = potential(d, work.paths);
      if (after >= before)
        throw std::logic_error("eliminate_hills: potential did not fall at a rerouting step");
      if (stats) {
        ++stats->reroutes;
        stats->potential_trace.push_back(after);
      }
      done = true;
      break;
    }
    if (!done) throw std::logic_error("eliminate_hills: every hill cap is blocked");
  }
  throw std::logic_error("eliminate_hills: did not converge");
}

std::vector<std::vector<int>> make_decreasing(const LeveledDisk& d, const std::vector<int>& a,
                                              int target_level) {
  if (target_level < 1 || target_level > d.depth())
    throw std::invalid_argument("make_decreasing: bad target level");
  const auto& outer = d.outermost();
  for (int v : a)
    if (std::find(outer.begin(), outer.end(), v) == outer.end())
      throw std::invalid_argument("make_decreasing: source off the outermost cycle");
  std::vector<int> ids;
  std::unordered_map<int, int> index;
  Graph sk = d.graph.skeleton(&ids, &index);
  std::vector<int> src, dst;
  for (int v : a) src.push_back(index.at(v));
  for (int v : d.cycles[target_level - 1]) dst.push_back(index.at(v));
  auto flow = max_disjoint_paths(sk, src, dst);
  if (flow.count != static_cast<int>(a.size()))
    throw std::invalid_argument("make_decreasing: rank deficient");
  for (auto& path : flow.paths)
    for (int& v : path) v = ids[v];
  // truncate at the first arrival on the target cycle
  std::set<int> target(d.cycles[target_level - 1].begin(), d.cycles[target_level - 1].end());
  for (auto& path : flow.paths) {
    for (std::size_t i = 0; i < path.size(); ++i)
      if (target.count(path[i])) {
        path.resize(i + 1);
        break;
      }
  }
  // hill-eliminate as an anonymous family
  Pattern fake;
  for (const auto& path : flow.paths) fake.pairs.emplace_back(path.front(), path.back());
  Linkage cleaned = eliminate_hills(d, fake, Linkage{flow.paths});
  for (const auto& path : cleaned.paths) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      if (d.level_of(path[i]) < d.level_of(path[i + 1]))
        throw std::logic_error("make_decreasing: path not level-monotone after elimination");
  }
  return cleaned.paths;
}

}  // namespace llab
