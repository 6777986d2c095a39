#pragma once

#include <optional>

#include "trivex/graph/labeled_graph.hpp"

namespace trivex::graph {

inline constexpr int kExactCheegerMaxVertices = 20;

struct CheegerResult {
  std::optional<double> exact;  // min |dS|/|S| over 1 <= |S| <= |V|/2, when |V| <= 20
  double lower_bound = 0.0;     // sigma / 2
};

// sigma is the spectral gap d - lambda_1 supplied by the caller.
CheegerResult cheeger(const LabeledGraph& g, double sigma);

// Exhaustive edge expansion. Throws CapExceeded above 20 vertices.
double cheeger_exact(const LabeledGraph& g);

}  // namespace trivex::graph
