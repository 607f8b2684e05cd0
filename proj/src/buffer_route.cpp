#include "linkagelab/buffer_route.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace llab {

namespace {

bool intersects(const std::vector<int>& p, const std::set<int>& q) {
  for (int v : p)
    if (q.count(v)) return true;
  return false;
}

// PQ := P x Q, x the first vertex of P also in Q.
std::vector<int> product(const std::vector<int>& p, const std::vector<int>& q) {
  std::set<int> qset(q.begin(), q.end());
  std::vector<int> out;
  int x = -1;
  for (int v : p) {
    out.push_back(v);
    if (qset.count(v)) {
      x = v;
      break;
    }
  }
  if (x < 0) throw std::logic_error("product: paths do not intersect");
  auto it = std::find(q.begin(), q.end(), x);
  for (++it; it != q.end(); ++it) out.push_back(*it);
  return out;
}

}  // namespace

BufferRouteResult buffer_route(const Graph& host, const std::vector<int>& v1_cyclic,
                               const std::vector<int>& v2, const BufferPartition& part) {
  return buffer_route(host, v1_cyclic, v2, part, {});
}

BufferRouteResult buffer_route(const Graph& host, const std::vector<int>& v1_cyclic,
                               const std::vector<int>& v2, const BufferPartition& part,
                               const std::vector<std::vector<std::vector<int>>>& families) {
  const int n = static_cast<int>(part.a_blocks.size());
  if (n == 0 || static_cast<int>(part.b_blocks.size()) != n)
    throw std::invalid_argument("buffer_route: need matching A/B block lists");
  // blocks must concatenate to a rotation of the boundary order
  std::vector<int> concat;
  for (int i = 0; i < n; ++i) {
    concat.insert(concat.end(), part.a_blocks[i].begin(), part.a_blocks[i].end());
    concat.insert(concat.end(), part.b_blocks[i].begin(), part.b_blocks[i].end());
  }
  if (concat.size() != v1_cyclic.size())
    throw std::invalid_argument("buffer_route: blocks do not partition the boundary");
  bool rotation_ok = false;
  for (std::size_t shift = 0; shift < v1_cyclic.size() && !rotation_ok; ++shift) {
    bool ok = true;
    for (std::size_t i = 0; i < concat.size(); ++i)
      if (concat[i] != v1_cyclic[(shift + i) % v1_cyclic.size()]) ok = false;
    rotation_ok = ok;
  }
  if (!rotation_ok && !concat.empty())
    throw std::invalid_argument("buffer_route: blocks are not cyclically contiguous");

  Gammoid m{host, v1_cyclic, v2};
  int total = 0;
  for (const auto& a : part.a_blocks) total += static_cast<int>(a.size());
  BufferRouteResult res;
  if (total == 0) return res;
  for (int i = 0; i < n; ++i) {
    if (!m.independent(part.a_blocks[i]))
      throw std::invalid_argument("buffer_route: block A" + std::to_string(i + 1) +
                                  " is not independent");
    if (m.rank(part.b_blocks[i]) < 2 * total)
      throw std::invalid_argument("buffer_route: rank of block B" + std::to_string(i + 1) +
                                  " is below twice the demand");
  }

  std::map<int, int> pos;
  for (std::size_t i = 0; i < v1_cyclic.size(); ++i) pos[v1_cyclic[i]] = static_cast<int>(i);
  const int cyc = static_cast<int>(v1_cyclic.size());
  auto offset_from = [&](int anchor_pos, int v) { return ((pos.at(v) - anchor_pos) % cyc + cyc) % cyc; };

  // per-family path collections, clockwise by start vertex
  std::vector<std::vector<std::vector<int>>> fam(n);
  std::set<int> v2set(v2.begin(), v2.end());
  for (int i = 0; i < n; ++i) {
    if (part.a_blocks[i].empty()) continue;
    if (!families.empty()) {
      fam[i] = families.at(i);
      if (fam[i].size() != part.a_blocks[i].size())
        throw std::invalid_argument("buffer_route: supplied family has the wrong size");
      std::set<int> seen, starts(part.a_blocks[i].begin(), part.a_blocks[i].end());
      for (const auto& path : fam[i]) {
        if (path.empty() || !starts.count(path.front()) || !v2set.count(path.back()))
          throw std::invalid_argument("buffer_route: supplied path has bad endpoints");
        for (std::size_t j = 0; j + 1 < path.size(); ++j)
          if (!host.has_edge(path[j], path[j + 1]))
            throw std::invalid_argument("buffer_route: supplied path uses a non-edge");
        for (int v : path)
          if (!seen.insert(v).second)
            throw std::invalid_argument("buffer_route: supplied family is not disjoint");
      }
    } else {
      auto flow = max_disjoint_paths(host, part.a_blocks[i], v2);
      if (flow.count != static_cast<int>(part.a_blocks[i].size()))
        throw std::logic_error("buffer_route: independent block lost paths");
      fam[i] = flow.paths;
    }
    int anchor = pos.at(part.a_blocks[i].front());
    std::sort(fam[i].begin(), fam[i].end(), [&](const auto& p, const auto& q) {
      return offset_from(anchor, p.front()) < offset_from(anchor, q.front());
    });
  }

  // buffer family with |A_i| + |A_{i+1}| endpoints in B_i
  std::vector<int> quotas(n);
  for (int i = 0; i < n; ++i)
    quotas[i] = static_cast<int>(part.a_blocks[i].size() + part.a_blocks[(i + 1) % n].size());
  auto buffer = max_disjoint_paths_grouped(host, part.b_blocks, quotas, v2);
  if (buffer.count != 2 * total)
    throw std::logic_error("buffer_route: buffer family short of its quota");
  std::vector<std::vector<std::vector<int>>> guards(n);
  for (auto& path : buffer.paths) {
    int start = path.front();
    for (int i = 0; i < n; ++i)
      if (std::find(part.b_blocks[i].begin(), part.b_blocks[i].end(), start) !=
          part.b_blocks[i].end())
        guards[i].push_back(path);
  }
  for (int i = 0; i < n; ++i) {
    if (part.b_blocks[i].empty()) continue;
    int anchor = pos.at(part.b_blocks[i].front());
    std::sort(guards[i].begin(), guards[i].end(), [&](const auto& p, const auto& q) {
      return offset_from(anchor, p.front()) < offset_from(anchor, q.front());
    });
  }

  // confine each family between its guards by walk products
  for (int i = 0; i < n; ++i) {
    int mi = static_cast<int>(fam[i].size());
    if (mi == 0) continue;
    const auto& r_guards = guards[i];                   // clockwise, nearest first
    std::vector<std::vector<int>> q_guards = guards[(i + n - 1) % n];
    std::reverse(q_guards.begin(), q_guards.end());     // counter-clockwise, nearest first
    int l = 0, r = mi - 1;
    while (l <= r) {
      const auto& ql = q_guards[mi - 1 - l];
      const auto& rr = r_guards[r];
      std::set<int> qset(ql.begin(), ql.end());
      std::set<int> rset(rr.begin(), rr.end());
      if (intersects(fam[i][l], qset)) {
        auto candidate = product(fam[i][l], ql);
        if (!intersects(candidate, rset)) {
          fam[i][l] = std::move(candidate);
          ++l;
          ++res.reroutes;
          continue;
        }
      }
      if (intersects(fam[i][r], rset)) {
        auto candidate = product(fam[i][r], rr);
        if (!intersects(candidate, qset)) {
          fam[i][r] = std::move(candidate);
          --r;
          ++res.reroutes;
          continue;
        }
      }
      break;  // family confined
    }
  }

  std::set<int> used;
  for (int i = 0; i < n; ++i)
    for (auto& path : fam[i]) {
      for (int v : path)
        if (!used.insert(v).second)
          throw std::logic_error("buffer_route: rerouted families are not disjoint");
      res.paths.push_back(std::move(path));
    }
  // Existence of the family certifies independence of the union.
  std::vector<int> all_a;
  for (const auto& a : part.a_blocks) all_a.insert(all_a.end(), a.begin(), a.end());
  if (m.rank(all_a) != total)
    throw std::logic_error("buffer_route: union of blocks is dependent after routing");
  return res;
}

}  // namespace llab
