#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trivex/graph/labeled_graph.hpp"
#include "trivex/spectral/lanczos.hpp"

namespace trivex::spectral {

struct SpectrumOptions {
  int dense_cap = 2048;
  bool keep_spectrum = false;
  int threads = 1;
  LanczosOptions lanczos;
};

struct SpectrumReport {
  std::string graph;
  int n = 0;
  int d = 0;
  bool bipartite = false;
  double lambda1 = 0;            // largest nontrivial eigenvalue
  double lambda_min = 0;         // smallest nontrivial eigenvalue
  double sigma = 0;              // d - lambda1
  double sigma_rayleigh = 0;     // Dirichlet quotient of the lambda1 eigenvector
  bool ramanujan = false;
  std::string method;            // "dense" or "lanczos"
  double residual = 0;           // worst reported eigenpair residual
  std::optional<std::vector<double>> spectrum;
};

// Dense when n <= dense_cap, otherwise Lanczos with the constant vector
// (and the bipartite sign vector) deflated. Requires a connected d-regular graph.
SpectrumReport spectrum_report(const graph::LabeledGraph& g, const std::string& name, const SpectrumOptions& opts = {});

}  // namespace trivex::spectral
