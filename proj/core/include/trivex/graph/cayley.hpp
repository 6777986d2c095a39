#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "trivex/graph/labeled_graph.hpp"
#include "trivex/group/pc_presentation.hpp"

namespace trivex::graph {

// Dart labels 0..5 stand for x0, x0^-1, x1, x1^-1, x3, x3^-1; label l^1 is the inverse of l.
inline constexpr int kCayleyDegree = 6;

// Right-multiplication table: table[g][l] = index of g * s_l.
using CayleyTable = std::vector<std::array<int, kCayleyDegree>>;

// Dart (g, l) has id 6g + l and reverse (g s_l, l ^ 1). Inverse labels are
// never merged, so an involution s yields a doubled edge.
LabeledGraph cayley_from_table(const CayleyTable& table);

CayleyTable cayley_table(const group::PcPresentation& pcp, std::uint64_t cap);
LabeledGraph cayley(const group::PcPresentation& pcp, std::uint64_t cap);

inline int cayley_dart(int g, int label) { return g * kCayleyDegree + label; }

// Relator triangle of g: corners g, g x0, g x0 x1, darts labelled x0, x1, x3.
struct Triangle {
  std::array<int, 3> vertices{};
  std::array<int, 3> darts{};
};

// One triangle per vertex. Throws InternalError unless every edge lies in
// exactly one triangle and every triangle closes.
std::vector<Triangle> relator_triangles(const LabeledGraph& x);

struct CliqueAudit {
  std::size_t cliques = 0;             // 3-cliques of the underlying simple graph
  std::size_t relator_triangles = 0;   // distinct vertex sets among the triangles
  std::vector<std::array<int, 3>> extra;    // cliques that are no relator triangle
  std::vector<std::array<int, 3>> missing;  // relator triangles that are no clique
  [[nodiscard]] bool coincide() const { return extra.empty() && missing.empty(); }
};
CliqueAudit audit_cliques(const LabeledGraph& x, const std::vector<Triangle>& triangles);

}  // namespace trivex::graph
