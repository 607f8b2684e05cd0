#include "linkagelab/bruteforce.hpp"

#include <stdexcept>

namespace llab {

namespace {

struct Search {
  const Graph& g;
  const Pattern& p;
  std::int64_t budget;
  std::int64_t nodes = 0;
  bool out_of_budget = false;
  std::vector<char> free;  // vertex not yet used by a routed path
  std::vector<std::vector<int>> paths;

  Search(const Graph& g_, const Pattern& p_, std::int64_t budget_)
      : g(g_), p(p_), budget(budget_), free(g_.vertex_count(), 1) {}

  // Every unfinished element must still be connectable through free vertices.
  bool prunable(int next_elem, int head) const {
    std::vector<char> alive = free;
    if (head >= 0) alive[head] = 1;  // current head counts as available for its own pair
    for (int j = next_elem; j < p.size(); ++j) {
      auto [s, t] = p.pairs[j];
      int from = (j == next_elem && head >= 0) ? head : s;
      if (!alive[from] || !alive[t]) return true;
      if (!g.connected(from, t, alive)) return true;
    }
    return false;
  }

  bool route(int elem) {
    if (elem == p.size()) return true;
    auto [s, t] = p.pairs[elem];
    if (!free[s]) return false;
    free[s] = 0;
    paths.push_back({s});
    if (extend(elem, s, t)) return true;
    paths.pop_back();
    free[s] = 1;
    return false;
  }

  bool extend(int elem, int head, int target) {
    if (++nodes > budget) {
      out_of_budget = true;
      return false;
    }
    if (head == target) {
      if (!prunable(elem + 1, -1) && route(elem + 1)) return true;
      return false;
    }
    if (prunable(elem, head)) return false;
    for (int y : g.neighbors(head)) {
      if (!free[y]) continue;
      if (y != target && !has_free_continue(y, target)) continue;
      free[y] = 0;
      paths.back().push_back(y);
      if (extend(elem, y, target)) return true;
      paths.back().pop_back();
      free[y] = 1;
      if (out_of_budget) return false;
    }
    return false;
  }

  // Cheap local filter: a non-target vertex with no free neighbor is a dead end.
  bool has_free_continue(int y, int target) const {
    for (int z : g.neighbors(y))
      if (z == target || free[z]) return true;
    return false;
  }
};

}  // namespace

SolveResult solve_bruteforce(const Graph& g, const Pattern& p, std::int64_t budget) {
  p.validate();
  for (int v : p.terminals())
    if (!g.has_vertex(v)) throw std::invalid_argument("solve: terminal not in graph");
  Search search(g, p, budget);
  SolveResult res;
  bool found = search.route(0);
  res.nodes = search.nodes;
  if (found) {
    res.status = SolveStatus::Feasible;
    res.linkage = Linkage{search.paths};
  } else if (search.out_of_budget) {
    res.status = SolveStatus::Unknown;
  } else {
    res.status = SolveStatus::Infeasible;
  }
  return res;
}

}  // namespace llab
