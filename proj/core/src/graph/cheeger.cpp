#include "trivex/graph/cheeger.hpp"

#include <bit>
#include <cstdint>
#include <limits>

#include "trivex/error.hpp"

namespace trivex::graph {

double cheeger_exact(const LabeledGraph& g) {
  const int n = g.vertex_count();
  if (n > kExactCheegerMaxVertices) throw CapExceeded("exact Cheeger constant limited to 20 vertices");
  if (n < 2) throw InvalidArgument("Cheeger constant needs at least two vertices");
  if (!g.is_connected()) return 0.0;
  const auto edges = g.edge_pairs();
  double best = std::numeric_limits<double>::infinity();
  for (std::uint32_t s = 1; s < (1U << n) - 1; ++s) {
    const int size = std::popcount(s);
    if (2 * size > n) continue;
    int boundary = 0;
    for (const auto& [u, v] : edges) boundary += ((s >> u) & 1U) != ((s >> v) & 1U);
    best = std::min(best, static_cast<double>(boundary) / size);
  }
  return best;
}

CheegerResult cheeger(const LabeledGraph& g, double sigma) {
  CheegerResult r;
  r.lower_bound = sigma / 2.0;
  if (g.vertex_count() <= kExactCheegerMaxVertices) r.exact = cheeger_exact(g);
  return r;
}

}  // namespace trivex::graph
