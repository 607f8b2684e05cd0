#include "linkagelab/flow.hpp"

#include <deque>
#include <limits>
#include <stdexcept>

namespace llab {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

struct Net {
  struct Arc {
    int to, cap, flow = 0;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> out;

  explicit Net(int nodes) : out(nodes) {}
  int add(int from, int to, int cap) {
    int id = static_cast<int>(arcs.size());
    arcs.push_back({to, cap});
    arcs.push_back({from, 0});
    out[from].push_back(id);
    out[to].push_back(id + 1);
    return id;
  }
  int residual(int id) const { return arcs[id].cap - arcs[id].flow; }

  int augment(int s, int t) {
    std::vector<int> pred(out.size(), -1);
    std::deque<int> queue{s};
    std::vector<char> seen(out.size(), 0);
    seen[s] = 1;
    while (!queue.empty() && !seen[t]) {
      int x = queue.front();
      queue.pop_front();
      for (int id : out[x]) {
        if (residual(id) <= 0) continue;
        int y = arcs[id].to;
        if (seen[y]) continue;
        seen[y] = 1;
        pred[y] = id;
        queue.push_back(y);
      }
    }
    if (!seen[t]) return 0;
    for (int y = t; y != s;) {
      int id = pred[y];
      arcs[id].flow += 1;
      arcs[id ^ 1].flow -= 1;
      y = arcs[id ^ 1].to;
    }
    return 1;
  }

  std::vector<char> reachable(int s) const {
    std::vector<char> seen(out.size(), 0);
    std::deque<int> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (int id : out[x]) {
        if (residual(id) <= 0 || seen[arcs[id].to]) continue;
        seen[arcs[id].to] = 1;
        queue.push_back(arcs[id].to);
      }
    }
    return seen;
  }
};

struct Builder {
  const Graph& g;
  int n;
  int source, sink;
  Net net;
  std::vector<int> split_arc;  // vertex -> arc id of in->out

  Builder(const Graph& graph, int extra_nodes)
      : g(graph), n(graph.vertex_count()), net(2 + 2 * graph.vertex_count() + extra_nodes) {
    source = 0;
    sink = 1;
    split_arc.resize(n);
    for (int v = 0; v < n; ++v) split_arc[v] = net.add(vin(v), vout(v), 1);
    for (int u = 0; u < n; ++u)
      for (int w : g.neighbors(u))
        net.add(vout(u), vin(w), kInf);
  }
  int vin(int v) const { return 2 + 2 * v; }
  int vout(int v) const { return 2 + 2 * v + 1; }
  int extra(int i) const { return 2 + 2 * n + i; }

  DisjointPathsResult run(const std::vector<int>& targets) {
    for (int b : targets) net.add(vout(b), sink, kInf);
    DisjointPathsResult res;
    while (net.augment(source, sink)) ++res.count;
    // paths: walk flow-carrying arcs from each flow-carrying source arc
    std::vector<std::vector<int>> carry(net.out.size());
    for (std::size_t id = 0; id < net.arcs.size(); id += 2)
      for (int f = 0; f < net.arcs[id].flow; ++f)
        carry[net.arcs[id ^ 1].to].push_back(static_cast<int>(id));
    auto take = [&](int node) {
      int id = carry[node].back();
      carry[node].pop_back();
      return id;
    };
    for (int i = 0; i < res.count; ++i) {
      std::vector<int> path;
      int node = source;
      while (node != sink) {
        int id = take(node);
        node = net.arcs[id].to;
        if (node >= 2 && node < 2 + 2 * n && ((node - 2) % 2 == 0)) path.push_back((node - 2) / 2);
      }
      res.paths.push_back(std::move(path));
    }
    auto seen = net.reachable(source);
    for (int v = 0; v < n; ++v)
      if (seen[vin(v)] && !seen[vout(v)]) res.separator.push_back(v);
    return res;
  }
};

}  // namespace

DisjointPathsResult max_disjoint_paths(const Graph& g, const std::vector<int>& sources,
                                       const std::vector<int>& targets) {
  Builder b(g, 0);
  for (int a : sources) b.net.add(b.source, b.vin(a), kInf);
  return b.run(targets);
}

DisjointPathsResult max_disjoint_paths_grouped(const Graph& g,
                                               const std::vector<std::vector<int>>& groups,
                                               const std::vector<int>& quotas,
                                               const std::vector<int>& targets) {
  if (groups.size() != quotas.size())
    throw std::invalid_argument("max_disjoint_paths_grouped: group/quota mismatch");
  Builder b(g, static_cast<int>(groups.size()));
  for (std::size_t i = 0; i < groups.size(); ++i) {
    int gnode = b.extra(static_cast<int>(i));
    b.net.add(b.source, gnode, quotas[i]);
    for (int a : groups[i]) b.net.add(gnode, b.vin(a), kInf);
  }
  return b.run(targets);
}

}  // namespace llab
