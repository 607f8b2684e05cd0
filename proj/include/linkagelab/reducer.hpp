#pragma once

#include <string>

#include "linkagelab/bruteforce.hpp"
#include "linkagelab/protection.hpp"

namespace llab {

enum class ReduceMode { Safe, Trusting };

struct ReductionStep {
  int vertex = -1;
  int depth = 0;
  ReduceMode mode = ReduceMode::Safe;
  bool committed = false;
  SolveStatus before = SolveStatus::Unknown;  // oracle verdicts when checked
  SolveStatus after = SolveStatus::Unknown;
  std::string note;
};

struct ReductionLog {
  std::vector<ReductionStep> steps;
  SolveStatus final_feasibility = SolveStatus::Unknown;
  bool discrepancy = false;  // trusting-mode cross-check found a flip
};

struct ReduceResult {
  EmbeddedGraph graph;
  ReductionLog log;
};

// Repeatedly deletes a non-terminal vertex of protection depth >= threshold
// (deepest first, ties by id). Safe mode commits a deletion only when the
// oracle's feasibility verdict is unchanged; trusting mode deletes
// unconditionally and cross-checks the final answer against the input.
ReduceResult reduce(const EmbeddedGraph& g, const Pattern& p, int threshold, ReduceMode mode,
                    std::int64_t budget = 50'000'000);

// True iff deleting v preserves pattern feasibility (both sides decided by
// the oracle). Throws std::invalid_argument if v is a terminal and
// std::runtime_error when the oracle budget runs out.
bool redundancy_probe(const EmbeddedGraph& g, const Pattern& p, int v,
                      std::int64_t budget = 50'000'000);

// Oracle feasibility of a pattern over the embedded graph's skeleton.
SolveStatus embedded_feasibility(const EmbeddedGraph& g, const Pattern& p, std::int64_t budget);

}  // namespace llab
