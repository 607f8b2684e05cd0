#pragma once

// Independent test oracles, kept deliberately naive.

#include <set>

#include "linkagelab/leveled_disk.hpp"
#include "linkagelab/protection.hpp"

namespace llab::oracles {

// Exhaustive nested-family search for the protection depth: tries every
// valid cycle as the next layer and recurses. Exponential; fixtures only.
inline int depth_exhaustive(const EmbeddedGraph& g, int v, const Pattern& p) {
  std::set<int> terminals;
  for (int t : p.terminals()) terminals.insert(t);
  struct Cand {
    std::vector<int> cycle;
    std::set<int> closure;  // cycle + v-side
    bool touches_terminal = false;
  };
  std::vector<Cand> cands;
  for (auto& cyc : all_simple_cycles(g)) {
    if (std::find(cyc.begin(), cyc.end(), v) != cyc.end()) continue;
    Cand c;
    c.cycle = cyc;
    bool ok = true;
    auto inside = side_vertices(g, cyc, v);
    for (int x : inside) {
      if (terminals.count(x)) ok = false;
      c.closure.insert(x);
    }
    for (int x : cyc) {
      if (terminals.count(x)) c.touches_terminal = true;
      c.closure.insert(x);
    }
    if (ok) cands.push_back(std::move(c));
  }
  std::function<int(const std::set<int>&)> rec = [&](const std::set<int>& forbidden) {
    int best = 0;
    for (const auto& c : cands) {
      bool usable = true;
      for (int x : c.cycle)
        if (forbidden.count(x)) usable = false;
      if (!usable) continue;
      if (c.touches_terminal) {
        best = std::max(best, 1);  // only ever the final layer
        continue;
      }
      std::set<int> next = forbidden;
      next.insert(c.closure.begin(), c.closure.end());
      best = std::max(best, 1 + rec(next));
    }
    return best;
  };
  return rec({});
}

}  // namespace llab::oracles
