#include "linkagelab/protection.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "linkagelab/leveled_disk.hpp"

namespace llab {

std::vector<std::vector<int>> all_simple_cycles(const EmbeddedGraph& g, std::size_t limit) {
  std::vector<int> ids;
  std::unordered_map<int, int> index;
  Graph sk = g.skeleton(&ids, &index);
  int n = sk.vertex_count();
  std::vector<std::vector<int>> out;
  std::vector<int> stack;
  std::vector<char> on_stack(n, 0);
  // cycles whose minimum vertex is `root`, second vertex < last vertex
  std::function<void(int, int)> dfs = [&](int root, int cur) {
    if (out.size() >= limit) throw std::runtime_error("cycle enumeration limit hit");
    for (int next : sk.neighbors(cur)) {
      if (next == root && stack.size() >= 3) {
        if (stack[1] < stack.back()) {
          std::vector<int> cyc;
          for (int v : stack) cyc.push_back(ids[v]);
          out.push_back(std::move(cyc));
        }
        continue;
      }
      if (next <= root || on_stack[next]) continue;
      stack.push_back(next);
      on_stack[next] = 1;
      dfs(root, next);
      stack.pop_back();
      on_stack[next] = 0;
    }
  };
  for (int root = 0; root < n; ++root) {
    stack = {root};
    on_stack.assign(n, 0);
    on_stack[root] = 1;
    dfs(root, root);
  }
  return out;
}

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
    if (found < 0) throw std::logic_error("cycle hop without an edge");
    out.push_back(found);
  }
  return out;
}

}  // namespace

ProtectionAnalyzer::ProtectionAnalyzer(const EmbeddedGraph& g) : g_(g) {
  for (int v : g.vertex_ids()) {
    auto fs = g.faces_at_vertex(v);
    probe_face_[v] = fs.empty() ? -1 : fs.front();
  }
  for (auto& cyc : all_simple_cycles(g)) {
    CycleInfo info;
    info.face_comp = g.dual_components(cycle_edge_ids(g, cyc));
    info.members_sorted = cyc;
    std::sort(info.members_sorted.begin(), info.members_sorted.end());
    info.cycle = std::move(cyc);
    cycles_.push_back(std::move(info));
  }
}

ProtectionResult ProtectionAnalyzer::depth(int v, const Pattern& p) const {
  p.validate();
  std::set<int> terminals;
  for (int t : p.terminals()) terminals.insert(t);
  if (terminals.count(v)) throw std::invalid_argument("protection_depth: v is a terminal");
  if (!g_.has_vertex(v)) throw std::invalid_argument("protection_depth: no such vertex");

  struct Candidate {
    const CycleInfo* info;
    std::set<int> v_side;
    bool touches_terminal = false;
  };
  if (probe_face_.at(v) < 0) return ProtectionResult{};  // isolated vertex

  std::vector<Candidate> candidates;
  for (const auto& info : cycles_) {
    if (std::binary_search(info.members_sorted.begin(), info.members_sorted.end(), v)) continue;
    int side = info.face_comp[probe_face_.at(v)];
    Candidate c;
    c.info = &info;
    bool ok = true;
    for (int x : g_.vertex_ids()) {
      if (std::binary_search(info.members_sorted.begin(), info.members_sorted.end(), x)) {
        if (terminals.count(x)) c.touches_terminal = true;
        continue;
      }
      if (probe_face_.at(x) < 0) continue;  // isolated: nothing encloses it
      if (info.face_comp[probe_face_.at(x)] == side) {
        if (terminals.count(x)) ok = false;
        c.v_side.insert(x);
      }
    }
    if (ok) candidates.push_back(std::move(c));
  }

  ProtectionResult res;
  std::set<int> forbidden;
  auto usable = [&](const Candidate& c) {
    for (int x : c.info->members_sorted)
      if (forbidden.count(x)) return false;
    return true;
  };
  auto strictly_inside = [](const Candidate& x, const Candidate& y) {
    if (x.v_side.size() >= y.v_side.size()) return false;
    return std::includes(y.v_side.begin(), y.v_side.end(), x.v_side.begin(), x.v_side.end());
  };
  while (true) {
    std::vector<const Candidate*> pool;
    for (const auto& c : candidates)
      if (!c.touches_terminal && usable(c)) pool.push_back(&c);
    const Candidate* best = nullptr;
    for (const Candidate* c : pool) {
      bool minimal = true;
      for (const Candidate* other : pool)
        if (other != c && strictly_inside(*other, *c)) minimal = false;
      if (!minimal) continue;
      auto key = [](const Candidate& x) {
        return std::make_pair(x.info->cycle.size(), x.info->members_sorted);
      };
      if (!best || key(*c) < key(*best)) best = c;
    }
    if (!best) break;
    res.cycles.push_back(best->info->cycle);
    forbidden.insert(best->info->members_sorted.begin(), best->info->members_sorted.end());
    for (int x : best->v_side) forbidden.insert(x);
  }
  for (const auto& c : candidates) {
    if (!c.touches_terminal || !usable(c)) continue;
    res.cycles.push_back(c.info->cycle);
    break;
  }
  res.depth = static_cast<int>(res.cycles.size());
  return res;
}

ProtectionResult protection_depth(const EmbeddedGraph& g, int v, const Pattern& p) {
  return ProtectionAnalyzer(g).depth(v, p);
}

}  // namespace llab
