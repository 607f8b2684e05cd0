#pragma once

#include "linkagelab/embedded_graph.hpp"
#include "linkagelab/pattern.hpp"

namespace llab {

struct ProtectionResult {
  int depth = 0;
  std::vector<std::vector<int>> cycles;  // innermost first
};

// Maximum number of nested vertex-disjoint cycles around v whose outermost
// disk interior avoids every terminal, computed by onion peeling: repeatedly
// take the innermost valid cycle (inclusion-minimal v-side disk, then
// shortest, then lexicographic) and continue strictly outside it. Terminals
// may sit on the final cycle but not on or inside any earlier one.
// g must be embedded in the sphere or a disk; v must not be a terminal.
ProtectionResult protection_depth(const EmbeddedGraph& g, int v, const Pattern& p);

// All simple cycles of the embedded graph's skeleton, as vertex id lists in
// canonical form. Exposed for the peeler and its exhaustive test oracle.
std::vector<std::vector<int>> all_simple_cycles(const EmbeddedGraph& g, std::size_t limit = 500000);

// Cycle/side analysis shared across many depth queries on one graph.
class ProtectionAnalyzer {
 public:
  explicit ProtectionAnalyzer(const EmbeddedGraph& g);
  ProtectionResult depth(int v, const Pattern& p) const;

 private:
  struct CycleInfo {
    std::vector<int> cycle;
    std::vector<int> members_sorted;
    std::vector<int> face_comp;  // dual component labels for this cycle's walls
  };
  const EmbeddedGraph& g_;
  std::vector<CycleInfo> cycles_;
  std::unordered_map<int, int> probe_face_;  // vertex id -> one incident face
};

}  // namespace llab
