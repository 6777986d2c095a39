#pragma once

// Test-side reference constructions. Nothing here calls the code it checks.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "trivex/graph/cayley.hpp"
#include "trivex/graph/labeled_graph.hpp"
#include "trivex/toeplitz/periodic_matrix.hpp"

namespace trivex::oracle {

inline graph::LabeledGraph complete(int n) {
  graph::LabeledGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

inline graph::LabeledGraph complete_bipartite(int a, int b) {
  graph::LabeledGraph g(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

// Vertices are 3-bit strings, edges flip one bit.
inline graph::LabeledGraph cube() {
  graph::LabeledGraph g(8);
  for (int v = 0; v < 8; ++v)
    for (int b = 0; b < 3; ++b)
      if (v < (v ^ (1 << b))) g.add_edge(v, v ^ (1 << b));
  return g;
}

// K_{2,2,2}: opposite pairs {0,1}, {2,3}, {4,5} are the non-edges.
inline graph::LabeledGraph octahedron() {
  graph::LabeledGraph g(6);
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (i / 2 != j / 2) g.add_edge(i, j);
  return g;
}

inline graph::LabeledGraph cycle(int n) {
  graph::LabeledGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

// Triangle counting on the underlying simple graph by brute force.
inline long count_triangles(const graph::LabeledGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  for (const auto& [u, v] : g.edge_pairs())
    if (u != v) adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
  long t = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])
        for (int c = b + 1; c < n; ++c)
          if (adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] && adj[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)]) ++t;
  return t;
}

// Dense 0/1 matrices over F2.
using F2Matrix = std::vector<std::vector<int>>;

// Block (i, i + j) holds diagonal j read at slot i mod 3; diagonal 0 is I.
inline F2Matrix instantiate(const toeplitz::PeriodicMatrix& m, int blocks) {
  const int n = 3 * blocks;
  F2Matrix a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int bi = 0; bi < blocks; ++bi)
    for (int j = 0; j <= m.truncation() && bi + j < blocks; ++j)
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
          a[static_cast<std::size_t>(3 * bi + r)][static_cast<std::size_t>(3 * (bi + j) + c)] =
              j == 0 ? (r == c) : m.diagonal(j).entry(r, 3 * (bi % 3) + c);
  return a;
}

inline F2Matrix multiply(const F2Matrix& a, const F2Matrix& b) {
  const std::size_t n = a.size();
  F2Matrix c(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      int s = 0;
      for (std::size_t m = 0; m < n; ++m) s ^= a[i][m] & b[m][j];
      c[i][j] = s;
    }
  return c;
}

// Entries within k block diagonals agree.
inline bool agree_to_depth(const F2Matrix& a, const F2Matrix& b, int k) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i; j < a.size(); ++j)
      if (static_cast<int>(j / 3) - static_cast<int>(i / 3) <= k && a[i][j] != b[i][j]) return false;
  return true;
}

// Eigenvalues of a small symmetric matrix by cyclic Jacobi rotations.
inline std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
  const std::size_t n = a.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a[i][i];
  std::sort(ev.begin(), ev.end());
  return ev;
}

inline std::vector<std::vector<double>> adjacency_matrix(const graph::LabeledGraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
  for (int d = 0; d < g.dart_count(); ++d) a[static_cast<std::size_t>(g.dart(d).source)][static_cast<std::size_t>(g.head(d))] += 1;
  return a;
}

}  // namespace trivex::oracle
