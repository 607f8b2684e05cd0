#pragma once

#include <vector>

#include "linkagelab/graph.hpp"

namespace llab {

// A pattern is a list of terminal sets of size 1 or 2. A singleton {s} is
// stored as the pair (s, s). Terminal sets must be pairwise disjoint.
struct Pattern {
  std::vector<std::pair<int, int>> pairs;

  int size() const { return static_cast<int>(pairs.size()); }
  bool is_singleton(int i) const { return pairs[i].first == pairs[i].second; }
  std::vector<int> terminals() const;
  void validate() const;  // throws std::invalid_argument on overlap
};

// One vertex path per pattern element, indexed like the pattern.
struct Linkage {
  std::vector<std::vector<int>> paths;
};

// True iff no two pattern pairs interleave in the given cyclic order.
// Every terminal must occur exactly once in `order`.
bool cross_free(const Pattern& p, const std::vector<int>& order);

// Full linkage check: simple paths, pairwise vertex-disjoint, correct ends,
// every hop an edge of g. Never throws; any violation yields false.
bool verify(const Graph& g, const Pattern& p, const Linkage& l);

}  // namespace llab
