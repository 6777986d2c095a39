#include "trivex/graph/labeled_graph.hpp"

#include <algorithm>
#include <deque>

#include "trivex/error.hpp"

namespace trivex::graph {

LabeledGraph::LabeledGraph(int vertices, std::vector<Dart> darts)
    : darts_(std::move(darts)), out_(static_cast<std::size_t>(vertices)) {
  const auto n = static_cast<int>(darts_.size());
  for (int d = 0; d < n; ++d) {
    const auto& x = darts_[static_cast<std::size_t>(d)];
    if (x.source < 0 || x.source >= vertices) throw InvalidArgument("dart source out of range");
    if (x.reverse < 0 || x.reverse >= n || x.reverse == d || darts_[static_cast<std::size_t>(x.reverse)].reverse != d) {
      throw InvalidArgument("dart reverse is not a fixed-point-free involution");
    }
    out_[static_cast<std::size_t>(x.source)].push_back(d);
  }
}

int LabeledGraph::add_vertex() {
  out_.emplace_back();
  if (!classes_.empty()) classes_.push_back(0);
  return vertex_count() - 1;
}

int LabeledGraph::add_edge(int u, int v, int label_uv, int label_vu) {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) throw InvalidArgument("edge endpoint out of range");
  const int d = dart_count();
  darts_.push_back({u, d + 1, label_uv});
  darts_.push_back({v, d, label_vu});
  out_[static_cast<std::size_t>(u)].push_back(d);
  out_[static_cast<std::size_t>(v)].push_back(d + 1);
  return d;
}

void LabeledGraph::set_vertex_classes(std::vector<int> classes) {
  if (!classes.empty() && classes.size() != out_.size()) throw InvalidArgument("vertex class vector has wrong length");
  classes_ = std::move(classes);
}

bool LabeledGraph::is_regular(int d) const {
  return std::all_of(out_.begin(), out_.end(), [d](const auto& o) { return static_cast<int>(o.size()) == d; });
}

bool LabeledGraph::is_connected() const {
  if (out_.empty()) return true;
  std::vector<char> seen(out_.size(), 0);
  std::deque<int> q{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!q.empty()) {
    const int v = q.front();
    q.pop_front();
    for (int d : darts_at(v)) {
      const int w = head(d);
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++count;
        q.push_back(w);
      }
    }
  }
  return count == out_.size();
}

bool LabeledGraph::is_simple() const {
  for (int v = 0; v < vertex_count(); ++v) {
    auto nb = neighbors(v);
    if (std::find(nb.begin(), nb.end(), v) != nb.end()) return false;
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) return false;
  }
  return true;
}

std::vector<int> LabeledGraph::bipartition() const {
  std::vector<int> side(out_.size(), -1);
  for (int s = 0; s < vertex_count(); ++s) {
    if (side[static_cast<std::size_t>(s)] != -1) continue;
    side[static_cast<std::size_t>(s)] = 0;
    std::deque<int> q{s};
    while (!q.empty()) {
      const int v = q.front();
      q.pop_front();
      for (int d : darts_at(v)) {
        const int w = head(d);
        auto& sw = side[static_cast<std::size_t>(w)];
        if (sw == -1) {
          sw = 1 - side[static_cast<std::size_t>(v)];
          q.push_back(w);
        } else if (sw == side[static_cast<std::size_t>(v)]) {
          return {};
        }
      }
    }
  }
  return side;
}

std::vector<int> LabeledGraph::neighbors(int v) const {
  std::vector<int> nb;
  nb.reserve(darts_at(v).size());
  for (int d : darts_at(v)) nb.push_back(head(d));
  std::sort(nb.begin(), nb.end());
  return nb;
}

LabeledGraph LabeledGraph::underlying_simple() const {
  LabeledGraph g(vertex_count());
  for (const auto& [u, v] : edge_pairs()) {
    if (u == v) continue;
    if (!g.out_[static_cast<std::size_t>(u)].empty()) {
      bool dup = false;
      for (int d : g.darts_at(u)) dup = dup || g.head(d) == v;
      if (dup) continue;
    }
    g.add_edge(u, v);
  }
  g.classes_ = classes_;
  return g;
}

std::vector<std::pair<int, int>> LabeledGraph::edge_pairs() const {
  std::vector<std::pair<int, int>> e;
  e.reserve(static_cast<std::size_t>(edge_count()));
  for (int d = 0; d < dart_count(); ++d) {
    const int r = dart(d).reverse;
    if (d < r) e.emplace_back(std::min(dart(d).source, dart(r).source), std::max(dart(d).source, dart(r).source));
  }
  std::sort(e.begin(), e.end());
  return e;
}

}  // namespace trivex::graph
