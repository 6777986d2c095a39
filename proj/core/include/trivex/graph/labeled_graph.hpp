#pragma once

#include <cstdint>
#include <vector>

namespace trivex::graph {

inline constexpr int kNoLabel = -1;

// Half-edge. reverse(reverse(d)) = d and reverse(d) != d.
struct Dart {
  int source = 0;
  int reverse = 0;
  int label = kNoLabel;
  friend bool operator==(const Dart&, const Dart&) = default;
};

// Finite multigraph stored as darts; loops and parallel edges allowed.
class LabeledGraph {
 public:
  LabeledGraph() = default;
  explicit LabeledGraph(int vertices) : out_(static_cast<std::size_t>(vertices)) {}
  // Takes a full dart table; validates the involution and source ranges.
  LabeledGraph(int vertices, std::vector<Dart> darts);

  int add_vertex();
  // Adds darts u->v (returned id) and v->u (id + 1).
  int add_edge(int u, int v, int label_uv = kNoLabel, int label_vu = kNoLabel);

  [[nodiscard]] int vertex_count() const { return static_cast<int>(out_.size()); }
  [[nodiscard]] int dart_count() const { return static_cast<int>(darts_.size()); }
  [[nodiscard]] int edge_count() const { return dart_count() / 2; }
  [[nodiscard]] const Dart& dart(int d) const { return darts_[static_cast<std::size_t>(d)]; }
  [[nodiscard]] int head(int d) const { return dart(dart(d).reverse).source; }
  // Darts leaving v, ascending id.
  [[nodiscard]] const std::vector<int>& darts_at(int v) const { return out_[static_cast<std::size_t>(v)]; }
  [[nodiscard]] int degree(int v) const { return static_cast<int>(darts_at(v).size()); }

  // Bipartition or colour class per vertex; empty when absent.
  [[nodiscard]] const std::vector<int>& vertex_classes() const { return classes_; }
  void set_vertex_classes(std::vector<int> classes);

  [[nodiscard]] bool is_regular(int d) const;
  [[nodiscard]] bool is_connected() const;
  [[nodiscard]] bool is_simple() const;
  // Two-colouring if bipartite, empty otherwise.
  [[nodiscard]] std::vector<int> bipartition() const;
  // Sorted neighbour list with multiplicity.
  [[nodiscard]] std::vector<int> neighbors(int v) const;
  // Collapse parallel edges and drop loops; labels are dropped.
  [[nodiscard]] LabeledGraph underlying_simple() const;
  // Sorted (min, max) endpoint pairs, one per edge.
  [[nodiscard]] std::vector<std::pair<int, int>> edge_pairs() const;

 private:
  std::vector<Dart> darts_;
  std::vector<std::vector<int>> out_;
  std::vector<int> classes_;
};

}  // namespace trivex::graph
