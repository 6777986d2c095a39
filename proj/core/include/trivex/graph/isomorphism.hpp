#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "trivex/graph/labeled_graph.hpp"

namespace trivex::graph {

struct IsoOptions {
  bool match_labels = false;   // dart labels must correspond
  bool match_classes = false;  // vertex classes must correspond
  std::uint64_t budget = 1'000'000;  // search nodes before CapExceeded
};

// Bijection phi with phi(g1 vertex) = g2 vertex, or nullopt when none exists.
// Multigraphs are handled by edge multiplicity. Any witness returned has
// passed verify_isomorphism.
std::optional<std::vector<int>> find_isomorphism(const LabeledGraph& g1, const LabeledGraph& g2, const IsoOptions& opts = {});

// Independent check: phi is a bijection and maps the edge multiset of g1
// (with labels / classes when requested) onto that of g2.
bool verify_isomorphism(const LabeledGraph& g1, const LabeledGraph& g2, const std::vector<int>& phi,
                        bool match_labels = false, bool match_classes = false);

}  // namespace trivex::graph
