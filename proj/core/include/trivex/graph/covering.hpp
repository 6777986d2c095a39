#pragma once

#include <string>
#include <vector>

#include "trivex/graph/labeled_graph.hpp"

namespace trivex::graph {

struct CoveringResult {
  bool ok = false;
  int fiber_size = 0;
  std::string reason;  // first violation when !ok
};

// vertex_map : V(big) -> V(small) is a covering map iff, at every vertex v,
// the darts of v map bijectively onto the darts of vertex_map(v): the
// multisets of (label, mapped head) agree. Fibers must all have one size.
CoveringResult covering_check(const LabeledGraph& big, const LabeledGraph& small, const std::vector<int>& vertex_map,
                              bool match_labels = true);

}  // namespace trivex::graph
