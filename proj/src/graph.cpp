#include "linkagelab/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace llab {

int Graph::add_vertex() {
  adj_.emplace_back();
  return vertex_count() - 1;
}

void Graph::add_edge(int u, int v) {
  if (!has_vertex(u) || !has_vertex(v)) throw std::invalid_argument("add_edge: no such vertex");
  if (u == v) throw std::invalid_argument("add_edge: loops not supported");
  if (has_edge(u, v)) return;
  adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (const auto& a : adj_) total += a.size();
  return total / 2;
}

bool Graph::has_edge(int u, int v) const {
  if (!has_vertex(u) || !has_vertex(v)) return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

bool Graph::connected(int from, int to, const std::vector<char>& alive) const {
  if (!alive[from] || !alive[to]) return false;
  if (from == to) return true;
  std::vector<char> seen(vertex_count(), 0);
  std::deque<int> queue{from};
  seen[from] = 1;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int y : adj_[x]) {
      if (!alive[y] || seen[y]) continue;
      if (y == to) return true;
      seen[y] = 1;
      queue.push_back(y);
    }
  }
  return false;
}

}  // namespace llab
