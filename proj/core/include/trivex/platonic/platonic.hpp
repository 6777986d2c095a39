#pragma once

#include <cstdint>
#include <vector>

#include "trivex/graph/labeled_graph.hpp"

namespace trivex::platonic {

// Class {+(lambda, mu), -(lambda, mu)} mod N, stored as the lexicographically
// smaller representative with entries in [0, N).
struct ProjectivePair {
  int lambda = 0;
  int mu = 0;
  friend auto operator<=>(const ProjectivePair&, const ProjectivePair&) = default;
};

ProjectivePair canonical_pair(int lambda, int mu, int N);

// All classes with gcd(lambda, mu, N) = 1, ascending.
std::vector<ProjectivePair> platonic_vertices(int N);

// Vertex i is platonic_vertices(N)[i]; edge iff lambda w - mu v = +-1 mod N.
// Darts carry no labels. Requires N >= 2.
graph::LabeledGraph build_platonic(int N);

// J_2(N) / 2 for N >= 3 and J_2(2) = 3 for N = 2, where
// J_2(N) = N^2 prod_{p | N} (1 - 1/p^2).
std::int64_t platonic_count(int N);

}  // namespace trivex::platonic
