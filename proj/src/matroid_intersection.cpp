#include "linkagelab/matroid_intersection.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace llab {

namespace {

std::vector<int> pick(const std::vector<int>& universe, const std::vector<char>& flags,
                      int flip = -1, int add = -1) {
  std::vector<int> out;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    bool in = flags[i];
    if (static_cast<int>(i) == flip) in = !in;
    if (in) out.push_back(universe[i]);
  }
  if (add >= 0) out.push_back(universe[add]);
  return out;
}

}  // namespace

IntersectionCertificate matroid_intersection(const Gammoid& g0, const Gammoid& g1,
                                             const std::vector<std::pair<int, int>>& ident,
                                             int target) {
  const int n = static_cast<int>(g0.ground.size());
  if (static_cast<int>(ident.size()) != n || static_cast<int>(g1.ground.size()) != n)
    throw std::invalid_argument("matroid_intersection: ground sets must be identified");
  std::vector<int> copy_of(n, -1);
  for (const auto& [a, b] : ident) {
    auto it = std::find(g0.ground.begin(), g0.ground.end(), a);
    if (it == g0.ground.end())
      throw std::invalid_argument("matroid_intersection: identification misses the ground set");
    if (std::find(g1.ground.begin(), g1.ground.end(), b) == g1.ground.end())
      throw std::invalid_argument("matroid_intersection: identification image off the ground set");
    copy_of[it - g0.ground.begin()] = b;
  }
  for (int c : copy_of)
    if (c < 0) throw std::invalid_argument("matroid_intersection: identification not a bijection");

  std::vector<char> in_set(n, 0);
  auto rank0 = [&](const std::vector<int>& ids) { return g0.rank(ids); };
  auto rank1_indices = [&](const std::vector<int>& idx) {
    std::vector<int> ids;
    for (int i : idx) ids.push_back(copy_of[i]);
    return g1.rank(ids);
  };
  auto members0 = [&](int flip = -1, int add = -1) {
    return pick(g0.ground, in_set, flip, add);
  };
  auto members1_idx = [&](int flip = -1, int add = -1) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i) {
      bool in = in_set[i];
      if (i == flip) in = !in;
      if (in) idx.push_back(i);
    }
    if (add >= 0) idx.push_back(add);
    return idx;
  };

  std::vector<char> reach;  // reachable from X1 in the last exchange graph
  while (true) {
    int size = static_cast<int>(std::count(in_set.begin(), in_set.end(), 1));
    std::vector<char> x1(n, 0), x2(n, 0);
    for (int y = 0; y < n; ++y) {
      if (in_set[y]) continue;
      if (rank0(members0(-1, y)) == size + 1) x1[y] = 1;
      if (rank1_indices(members1_idx(-1, y)) == size + 1) x2[y] = 1;
    }
    // exchange arcs
    std::vector<std::vector<int>> adj(n);
    for (int y = 0; y < n; ++y) {
      if (in_set[y]) continue;
      for (int x = 0; x < n; ++x) {
        if (!in_set[x]) continue;
        if (rank0(members0(x, y)) == size) adj[x].push_back(y);
        if (rank1_indices(members1_idx(x, y)) == size) adj[y].push_back(x);
      }
    }
    // shortest path from X1 to X2
    std::vector<int> pred(n, -2);
    std::deque<int> queue;
    for (int y = 0; y < n; ++y)
      if (x1[y]) {
        pred[y] = -1;
        queue.push_back(y);
      }
    int goal = -1;
    while (!queue.empty() && goal < 0) {
      int x = queue.front();
      queue.pop_front();
      if (x2[x]) {
        goal = x;
        break;
      }
      for (int y : adj[x])
        if (pred[y] == -2) {
          pred[y] = x;
          queue.push_back(y);
        }
    }
    if (goal < 0) {
      reach.assign(n, 0);
      for (int y = 0; y < n; ++y)
        if (pred[y] != -2) reach[y] = 1;
      break;
    }
    for (int x = goal; x != -1; x = pred[x]) in_set[x] = !in_set[x];
  }

  IntersectionCertificate cert;
  cert.common = members0();
  cert.below_target = static_cast<int>(cert.common.size()) < target;
  // Min-max partition: one side is the reachable set, the other its
  // complement; exactly one orientation attains |common|.
  std::vector<int> reach_ids, unreach_ids;
  std::vector<int> reach_idx, unreach_idx;
  for (int i = 0; i < n; ++i) {
    if (reach[i]) {
      reach_ids.push_back(g0.ground[i]);
      reach_idx.push_back(i);
    } else {
      unreach_ids.push_back(g0.ground[i]);
      unreach_idx.push_back(i);
    }
  }
  int opt = static_cast<int>(cert.common.size());
  auto try_sides = [&](const std::vector<int>& a_ids, const std::vector<int>& a_idx,
                       const std::vector<int>& b_ids, const std::vector<int>& b_idx) {
    (void)b_ids;
    (void)a_idx;
    int r0 = rank0(a_ids);
    int r1 = rank1_indices(b_idx);
    if (r0 + r1 != opt) return false;
    cert.part_a = a_ids;
    cert.part_b.clear();
    for (int i : b_idx) cert.part_b.push_back(g0.ground[i]);
    cert.bound = r0 + r1;
    cert.separator_a = g0.rank_witness(a_ids).separator;
    std::vector<int> b_copy;
    for (int i : b_idx) b_copy.push_back(copy_of[i]);
    cert.separator_b = g1.rank_witness(b_copy).separator;
    return true;
  };
  if (!try_sides(unreach_ids, unreach_idx, reach_ids, reach_idx) &&
      !try_sides(reach_ids, reach_idx, unreach_ids, unreach_idx))
    throw std::logic_error("matroid_intersection: min-max certificate not attained");
  return cert;
}

}  // namespace llab
