#include "trivex/graph/covering.hpp"

#include <algorithm>

namespace trivex::graph {

CoveringResult covering_check(const LabeledGraph& big, const LabeledGraph& small, const std::vector<int>& vertex_map,
                              bool match_labels) {
  CoveringResult res;
  const int n = big.vertex_count();
  const int m = small.vertex_count();
  if (static_cast<int>(vertex_map.size()) != n) {
    res.reason = "vertex map has wrong length";
    return res;
  }
  std::vector<int> fiber(static_cast<std::size_t>(m), 0);
  for (int v : vertex_map) {
    if (v < 0 || v >= m) {
      res.reason = "vertex map leaves the target graph";
      return res;
    }
    ++fiber[static_cast<std::size_t>(v)];
  }
  if (m == 0 || std::any_of(fiber.begin(), fiber.end(), [&](int f) { return f != fiber[0] || f == 0; })) {
    res.reason = "fibers are empty or of unequal size";
    return res;
  }
  for (int v = 0; v < n; ++v) {
    const int w = vertex_map[static_cast<std::size_t>(v)];
    std::vector<std::pair<int, int>> a, b;
    for (int d : big.darts_at(v)) a.emplace_back(match_labels ? big.dart(d).label : 0, vertex_map[static_cast<std::size_t>(big.head(d))]);
    for (int d : small.darts_at(w)) b.emplace_back(match_labels ? small.dart(d).label : 0, small.head(d));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) {
      res.reason = "star of vertex " + std::to_string(v) + " is not mapped bijectively";
      return res;
    }
  }
  res.ok = true;
  res.fiber_size = fiber[0];
  return res;
}

}  // namespace trivex::graph
