#pragma once

#include <string>

#include "trivex/surface/faces.hpp"
#include "trivex/surface/oriented_map.hpp"

namespace trivex::surface {

inline constexpr int kMaxRenderRadius = 6;

struct RenderStats {
  int polygons = 0;
  int arcs = 0;
};

// SVG of the universal-cover patch of faces within combinatorial distance
// radius of a seed face, drawn as regular m-gons with angles 2pi/3 in the
// Poincare disk. All faces must share one length m with 1/m + 1/3 < 1/2.
std::string render_disk(const OrientedMap& map, const FaceSet& faces, int radius, RenderStats* stats = nullptr);

}  // namespace trivex::surface
