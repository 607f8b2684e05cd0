#pragma once

#include <cstddef>
#include <vector>

namespace llab {

// Simple undirected graph on vertices 0..n-1. Adjacency lists are kept sorted
// and duplicate-free; loops are rejected (no routing algorithm here wants them).
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(n) {}

  int add_vertex();
  void add_edge(int u, int v);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const;
  bool has_edge(int u, int v) const;
  bool has_vertex(int v) const { return v >= 0 && v < vertex_count(); }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }

  // BFS reachability from `from`, walking only vertices with alive[x] true.
  // `from` itself must be alive.
  bool connected(int from, int to, const std::vector<char>& alive) const;

 private:
  std::vector<std::vector<int>> adj_;
};

}  // namespace llab
