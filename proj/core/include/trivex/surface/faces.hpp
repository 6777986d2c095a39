#pragma once

#include <map>
#include <vector>

#include "trivex/graph/labeled_graph.hpp"
#include "trivex/surface/oriented_map.hpp"

namespace trivex::surface {

// Left: d -> prev(reverse(d)). Right: d -> next(reverse(d)).
enum class Turn { Left, Right };

struct FaceSet {
  std::vector<std::vector<int>> faces;  // dart cycles, each starting at its lowest dart
  std::vector<int> face_of_dart;
  long euler = 0;  // V - E + F
  long genus = 0;  // (2 - euler) / 2, for a connected map
  [[nodiscard]] std::map<int, int> length_histogram() const;
  // Common face length, or -1 when faces differ in length.
  [[nodiscard]] int uniform_length() const;
};

FaceSet trace_faces(const OrientedMap& map, Turn turn);

// One vertex per face, one edge per edge of the map joining the faces on its
// two sides. The dart of face-vertex f carries the index of the primal dart.
graph::LabeledGraph dual_graph(const OrientedMap& map, const FaceSet& faces);

}  // namespace trivex::surface
