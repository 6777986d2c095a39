#pragma once

#include <array>
#include <vector>

#include "trivex/graph/labeled_graph.hpp"

namespace trivex::surface {

// Graph with a rotation system: next(d) is the successor of dart d in the
// cyclic order at its source. Each vertex star is a single cycle.
class OrientedMap {
 public:
  OrientedMap(graph::LabeledGraph g, std::vector<int> next);

  [[nodiscard]] const graph::LabeledGraph& graph() const { return g_; }
  [[nodiscard]] int next(int d) const { return next_[static_cast<std::size_t>(d)]; }
  [[nodiscard]] int prev(int d) const { return prev_[static_cast<std::size_t>(d)]; }

 private:
  graph::LabeledGraph g_;
  std::vector<int> next_;
  std::vector<int> prev_;
};

// Rotation visiting dart labels in the given cyclic order at vertices of
// each class; every vertex must carry exactly those labels once each.
OrientedMap orient_by_labels(const graph::LabeledGraph& g, const std::vector<std::array<int, 3>>& order_per_class);

// The orientation of T_k: blue vertices 0 -> 3 -> 1, green vertices 1 -> 3 -> 0.
OrientedMap orient_Tk(const graph::LabeledGraph& t);
// Same on blue vertices, green cycles reversed; a negative control.
OrientedMap orient_Tk_reversed_green(const graph::LabeledGraph& t);

}  // namespace trivex::surface
