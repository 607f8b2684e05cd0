#include "linkagelab/reducer.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace llab {

SolveStatus embedded_feasibility(const EmbeddedGraph& g, const Pattern& p, std::int64_t budget) {
  std::vector<int> ids;
  std::unordered_map<int, int> index;
  Graph sk = g.skeleton(&ids, &index);
  Pattern mapped;
  for (auto [s, t] : p.pairs) mapped.pairs.emplace_back(index.at(s), index.at(t));
  return solve_bruteforce(sk, mapped, budget).status;
}

bool redundancy_probe(const EmbeddedGraph& g, const Pattern& p, int v, std::int64_t budget) {
  for (int t : p.terminals())
    if (t == v) throw std::invalid_argument("redundancy_probe: v is a terminal");
  SolveStatus with = embedded_feasibility(g, p, budget);
  EmbeddedGraph without = g;
  without.remove_vertex(v);
  SolveStatus sans = embedded_feasibility(without, p, budget);
  if (with == SolveStatus::Unknown || sans == SolveStatus::Unknown)
    throw std::runtime_error("redundancy_probe: oracle budget exhausted");
  return with == sans;
}

ReduceResult reduce(const EmbeddedGraph& g, const Pattern& p, int threshold, ReduceMode mode,
                    std::int64_t budget) {
  if (threshold < 1) throw std::invalid_argument("reduce: threshold must be >= 1");
  p.validate();
  std::set<int> terminals;
  for (int t : p.terminals()) terminals.insert(t);

  ReduceResult res;
  res.graph = g;
  SolveStatus original = embedded_feasibility(g, p, budget);
  while (true) {
    // deepest protected vertex first, ties by id
    ProtectionAnalyzer analyzer(res.graph);
    int pick = -1, pick_depth = -1;
    for (int v : res.graph.vertex_ids()) {
      if (terminals.count(v)) continue;
      int depth = analyzer.depth(v, p).depth;
      if (depth >= threshold && (depth > pick_depth || (depth == pick_depth && v < pick))) {
        pick = v;
        pick_depth = depth;
      }
    }
    if (pick < 0) break;
    ReductionStep step;
    step.vertex = pick;
    step.depth = pick_depth;
    step.mode = mode;
    if (mode == ReduceMode::Safe) {
      step.before = embedded_feasibility(res.graph, p, budget);
      EmbeddedGraph next = res.graph;
      next.remove_vertex(pick);
      step.after = embedded_feasibility(next, p, budget);
      if (step.before == SolveStatus::Unknown || step.after == SolveStatus::Unknown) {
        step.committed = false;
        step.note = "skipped-unknown: oracle budget exhausted";
        res.log.steps.push_back(step);
        break;  // cannot certify anything further at this budget
      }
      if (step.before == step.after) {
        step.committed = true;
        res.graph = std::move(next);
      } else {
        step.committed = false;
        step.note = "oracle verdict changed; deletion rolled back";
        res.log.discrepancy = true;
      }
      res.log.steps.push_back(step);
      if (!step.committed) break;
    } else {
      step.committed = true;
      res.log.steps.push_back(step);
      res.graph.remove_vertex(pick);
    }
  }
  res.log.final_feasibility = embedded_feasibility(res.graph, p, budget);
  if (mode == ReduceMode::Trusting && original != SolveStatus::Unknown &&
      res.log.final_feasibility != SolveStatus::Unknown &&
      original != res.log.final_feasibility) {
    res.log.discrepancy = true;
    if (!res.log.steps.empty()) res.log.steps.back().note = "cross-check: feasibility flipped";
  }
  return res;
}

}  // namespace llab
