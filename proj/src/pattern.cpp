#include "linkagelab/pattern.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace llab {

std::vector<int> Pattern::terminals() const {
  std::vector<int> out;
  for (const auto& [s, t] : pairs) {
    out.push_back(s);
    if (t != s) out.push_back(t);
  }
  return out;
}

void Pattern::validate() const {
  std::set<int> seen;
  for (const auto& [s, t] : pairs) {
    if (!seen.insert(s).second) throw std::invalid_argument("pattern: terminal sets overlap");
    if (t != s && !seen.insert(t).second)
      throw std::invalid_argument("pattern: terminal sets overlap");
  }
}

bool cross_free(const Pattern& p, const std::vector<int>& order) {
  std::vector<int> pos(p.size() * 2, -1);
  auto position = [&order](int v) {
    for (std::size_t i = 0; i < order.size(); ++i)
      if (order[i] == v) return static_cast<int>(i);
    return -1;
  };
  const int n = static_cast<int>(order.size());
  for (int i = 0; i < p.size(); ++i) {
    pos[2 * i] = position(p.pairs[i].first);
    pos[2 * i + 1] = position(p.pairs[i].second);
    if (pos[2 * i] < 0 || pos[2 * i + 1] < 0)
      throw std::invalid_argument("cross_free: terminal missing from cyclic order");
  }
  // {a,b} and {c,d} interleave iff exactly one of c,d lies on the arc a->b.
  auto on_arc = [n](int a, int b, int x) {
    int len = (b - a + n) % n;
    int off = (x - a + n) % n;
    return off > 0 && off < len;
  };
  for (int i = 0; i < p.size(); ++i) {
    if (p.is_singleton(i)) continue;
    for (int j = i + 1; j < p.size(); ++j) {
      if (p.is_singleton(j)) continue;
      bool c_in = on_arc(pos[2 * i], pos[2 * i + 1], pos[2 * j]);
      bool d_in = on_arc(pos[2 * i], pos[2 * i + 1], pos[2 * j + 1]);
      if (c_in != d_in) return false;
    }
  }
  return true;
}

bool verify(const Graph& g, const Pattern& p, const Linkage& l) {
  if (static_cast<int>(l.paths.size()) != p.size()) return false;
  std::set<int> used;
  for (int i = 0; i < p.size(); ++i) {
    const auto& path = l.paths[i];
    if (path.empty()) return false;
    for (int v : path) {
      if (!g.has_vertex(v)) return false;
      if (!used.insert(v).second) return false;  // revisit or cross-path clash
    }
    auto ends = std::minmax(path.front(), path.back());
    auto want = std::minmax(p.pairs[i].first, p.pairs[i].second);
    if (ends != want) return false;
    if (p.is_singleton(i) && path.size() != 1) return false;
    for (std::size_t j = 0; j + 1 < path.size(); ++j)
      if (!g.has_edge(path[j], path[j + 1])) return false;
  }
  return true;
}

}  // namespace llab
