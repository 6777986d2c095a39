#pragma once

#include <array>
#include <vector>

#include "trivex/graph/cayley.hpp"
#include "trivex/graph/labeled_graph.hpp"

namespace trivex::graph {

inline constexpr int kBlue = 0;   // original vertices
inline constexpr int kGreen = 1;  // one per replaced triangle

// Edge label of the corner g, g x0, g x0 x1 of triangle T_g: the generator
// index the corner is not incident to.
inline constexpr std::array<int, 3> kCornerLabels = {1, 3, 0};

// Replaces each listed triangle by a new vertex joined to its corners.
// Untouched edges are kept; new vertices follow the old ones in triangle
// order. Throws InvalidArgument when two triangles share an edge.
LabeledGraph delta_y(const LabeledGraph& x, const std::vector<Triangle>& triangles,
                     const std::array<int, 3>& corner_labels = kCornerLabels);

// Inverse operation: each green vertex becomes a triangle on its neighbours.
// Blue vertices keep their indices.
LabeledGraph contract_green(const LabeledGraph& t);

}  // namespace trivex::graph
