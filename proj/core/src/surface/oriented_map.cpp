#include "trivex/surface/oriented_map.hpp"

#include <string>

#include "trivex/error.hpp"

namespace trivex::surface {

OrientedMap::OrientedMap(graph::LabeledGraph g, std::vector<int> next) : g_(std::move(g)), next_(std::move(next)) {
  const int n = g_.dart_count();
  if (static_cast<int>(next_.size()) != n) throw InvalidArgument("rotation has wrong length");
  prev_.assign(static_cast<std::size_t>(n), -1);
  for (int d = 0; d < n; ++d) {
    const int e = next_[static_cast<std::size_t>(d)];
    if (e < 0 || e >= n || g_.dart(e).source != g_.dart(d).source || prev_[static_cast<std::size_t>(e)] != -1) {
      throw InvalidArgument("rotation is not a permutation of each vertex star");
    }
    prev_[static_cast<std::size_t>(e)] = d;
  }
  for (int v = 0; v < g_.vertex_count(); ++v) {
    const auto& star = g_.darts_at(v);
    if (star.empty()) continue;
    int len = 0;
    int d = star.front();
    do {
      d = this->next(d);
      ++len;
    } while (d != star.front() && len <= static_cast<int>(star.size()));
    if (len != static_cast<int>(star.size())) throw InvalidArgument("rotation at vertex " + std::to_string(v) + " is not one cycle");
  }
}

OrientedMap orient_by_labels(const graph::LabeledGraph& g, const std::vector<std::array<int, 3>>& order_per_class) {
  const auto& cls = g.vertex_classes();
  std::vector<int> next(static_cast<std::size_t>(g.dart_count()), -1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    const int c = cls.empty() ? 0 : cls[static_cast<std::size_t>(v)];
    if (c < 0 || c >= static_cast<int>(order_per_class.size())) throw InvalidArgument("no rotation order for vertex class");
    const auto& order = order_per_class[static_cast<std::size_t>(c)];
    std::array<int, 3> by_pos{-1, -1, -1};
    const auto& star = g.darts_at(v);
    if (star.size() != 3) throw InvalidArgument("orient_by_labels needs a trivalent graph");
    for (int d : star) {
      int pos = -1;
      for (int i = 0; i < 3; ++i) {
        if (order[static_cast<std::size_t>(i)] == g.dart(d).label) pos = i;
      }
      if (pos < 0 || by_pos[static_cast<std::size_t>(pos)] != -1) {
        throw InvalidArgument("vertex " + std::to_string(v) + " does not carry each label once");
      }
      by_pos[static_cast<std::size_t>(pos)] = d;
    }
    for (int i = 0; i < 3; ++i) next[static_cast<std::size_t>(by_pos[static_cast<std::size_t>(i)])] = by_pos[static_cast<std::size_t>((i + 1) % 3)];
  }
  return OrientedMap(g, std::move(next));
}

OrientedMap orient_Tk(const graph::LabeledGraph& t) { return orient_by_labels(t, {{0, 3, 1}, {1, 3, 0}}); }

OrientedMap orient_Tk_reversed_green(const graph::LabeledGraph& t) { return orient_by_labels(t, {{0, 3, 1}, {0, 3, 1}}); }

}  // namespace trivex::surface
