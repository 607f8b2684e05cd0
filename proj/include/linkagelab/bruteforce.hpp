#pragma once

#include <cstdint>
#include <optional>

#include "linkagelab/pattern.hpp"

namespace llab {

enum class SolveStatus { Feasible, Infeasible, Unknown };

struct SolveResult {
  SolveStatus status = SolveStatus::Unknown;
  std::optional<Linkage> linkage;   // present iff Feasible
  std::int64_t nodes = 0;           // backtracking nodes spent
};

// Exhaustive backtracking oracle for vertex-disjoint path patterns.
// Deterministic: elements routed in pattern order, neighbors ascending.
// `budget` counts backtracking nodes; exceeding it yields Unknown, never a
// feasibility verdict. Returned linkages always pass verify().
SolveResult solve_bruteforce(const Graph& g, const Pattern& p,
                             std::int64_t budget = 50'000'000);

}  // namespace llab
