#include "trivex/graph/delta_y.hpp"

#include <algorithm>
#include <string>

#include "trivex/error.hpp"

namespace trivex::graph {

LabeledGraph delta_y(const LabeledGraph& x, const std::vector<Triangle>& triangles, const std::array<int, 3>& corner_labels) {
  std::vector<int> used(static_cast<std::size_t>(x.dart_count()), 0);
  for (const auto& t : triangles) {
    for (int d : t.darts) {
      const int e = std::min(d, x.dart(d).reverse);
      if (used[static_cast<std::size_t>(e)]++) throw InvalidArgument("delta_y: edge " + std::to_string(e) + " shared by two triangles");
    }
  }
  const int n = x.vertex_count();
  LabeledGraph t(n + static_cast<int>(triangles.size()));
  for (int d = 0; d < x.dart_count(); ++d) {
    const int r = x.dart(d).reverse;
    if (d < r && !used[static_cast<std::size_t>(d)]) t.add_edge(x.dart(d).source, x.dart(r).source, x.dart(d).label, x.dart(r).label);
  }
  for (std::size_t i = 0; i < triangles.size(); ++i) {
    const int green = n + static_cast<int>(i);
    for (std::size_t c = 0; c < 3; ++c) t.add_edge(triangles[i].vertices[c], green, corner_labels[c], corner_labels[c]);
  }
  std::vector<int> classes(static_cast<std::size_t>(t.vertex_count()), kBlue);
  std::fill(classes.begin() + n, classes.end(), kGreen);
  t.set_vertex_classes(std::move(classes));
  return t;
}

LabeledGraph contract_green(const LabeledGraph& t) {
  const auto& cls = t.vertex_classes();
  if (cls.empty()) throw InvalidArgument("contract_green needs vertex classes");
  std::vector<int> index(cls.size(), -1);
  int blue = 0;
  for (std::size_t v = 0; v < cls.size(); ++v) {
    if (cls[v] == kBlue) index[v] = blue++;
  }
  LabeledGraph x(blue);
  for (int d = 0; d < t.dart_count(); ++d) {
    const int r = t.dart(d).reverse;
    const int u = t.dart(d).source;
    const int v = t.dart(r).source;
    if (d < r && cls[static_cast<std::size_t>(u)] == kBlue && cls[static_cast<std::size_t>(v)] == kBlue) {
      x.add_edge(index[static_cast<std::size_t>(u)], index[static_cast<std::size_t>(v)]);
    }
  }
  for (int g = 0; g < t.vertex_count(); ++g) {
    if (cls[static_cast<std::size_t>(g)] != kGreen) continue;
    const auto& ds = t.darts_at(g);
    if (ds.size() != 3) throw InvalidArgument("green vertex of degree " + std::to_string(ds.size()));
    int c[3];
    for (int i = 0; i < 3; ++i) {
      c[i] = index[static_cast<std::size_t>(t.head(ds[static_cast<std::size_t>(i)]))];
      if (c[i] < 0) throw InvalidArgument("green vertex adjacent to green vertex");
    }
    x.add_edge(c[0], c[1]);
    x.add_edge(c[1], c[2]);
    x.add_edge(c[2], c[0]);
  }
  return x;
}

}  // namespace trivex::graph
