#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trivex/graph/cayley.hpp"
#include "trivex/graph/labeled_graph.hpp"
#include "trivex/spectral/dense.hpp"

namespace trivex::spectral {

// Full spectrum, ascending. Throws CapExceeded above cap vertices.
std::vector<double> dense_spectrum(const graph::LabeledGraph& g, int cap = 2048);
// Eigenvalues and eigenvectors; the residual of every pair is checked
// against tol * max degree and InternalError is thrown on violation.
DenseEigen dense_eigensystem(const graph::LabeledGraph& g, int cap = 2048, double tol = 1e-8);

struct SquaringWitness {
  int row = 0, col = 0;
  long expected = 0;  // entry of A_X
  long actual = 0;    // entry of A_T^2 - 3I
};
struct SquaringResult {
  bool ok = false;
  std::optional<SquaringWitness> witness;
};
// Exact integer check of A_X = (A_T^2 - 3I) on blue vertices 0..|X|-1 of t.
SquaringResult verify_squaring_identity(const graph::LabeledGraph& x, const graph::LabeledGraph& t);

struct SpectraMap {
  bool squares_match = false;  // sorted {l^2 - 3 : l in spec T} equals spec X taken twice
  double squares_error = 0;
  bool above_minus_three = false;  // min spec X >= -3 - 1e-8
  double min_x = 0;
  bool symmetric = false;  // spec T symmetric about 0 within 1e-9
  double symmetry_error = 0;
  int x_minus_three = 0;  // multiplicity of -3 in spec X
  int t_zero = 0;         // multiplicity of 0 in spec T; equals 2 * x_minus_three
  [[nodiscard]] bool ok() const { return squares_match && above_minus_three && symmetric && t_zero == 2 * x_minus_three; }
};
SpectraMap map_spectra(const std::vector<double>& spec_x, const std::vector<double>& spec_t, double tol = 1e-8);

struct LiftResult {
  double mu = 0;
  bool kernel_case = false;     // mu = -3
  double residual_plus = 0;     // ||A_T F+ - sqrt(mu+3) F+|| / ||F+||
  double residual_minus = 0;    // ||A_T F- + sqrt(mu+3) F-|| / ||F-||
  double triangle_sum_norm = 0; // mu = -3: norm of the triangle sums of f
  bool ok = false;
};
// f is an eigenvector of X for mu; t = delta_y(x) with green vertex |X| + i for triangle i.
LiftResult lift_eigenvector(const graph::LabeledGraph& x, const graph::LabeledGraph& t, const std::vector<double>& f, double mu,
                            double tol = 1e-6);

// The eigenvalue -3 of X and the eigenvalue 0 of T, compared through the
// triangle-sum map S on the -3 eigenspace E of X.
struct KernelAudit {
  int x_dimension = 0;       // dim E
  int kernel_dimension = 0;  // dim (ker S restricted to E)
  int t_zero_dimension = 0;  // multiplicity of 0 in spec T
  double lift_residual = 0;  // worst residual of zero-extended kernel vectors in T
  double complement_min_sum = 0;  // smallest ||S f|| over unit f in E orthogonal to the kernel (0 if none)
  double descend_residual = 0;    // worst (A_X + 3) residual of blue parts of T's 0-eigenvectors
  double descend_triangle_sum = 0;
  [[nodiscard]] bool ok(double tol = 1e-6) const;
};
KernelAudit audit_minus_three(const graph::LabeledGraph& x, const DenseEigen& ex, const graph::LabeledGraph& t, const DenseEigen& et,
                              const std::vector<graph::Triangle>& triangles, double tol = 1e-8);

// Multiset inclusion within tol by greedy matching on sorted lists.
bool spectrum_containment(const std::vector<double>& small, const std::vector<double>& big, double tol);

// Every eigenvalue other than one copy of d (and of -d when bipartite) lies
// in [-2 sqrt(d-1), 2 sqrt(d-1)] + 1e-9.
bool ramanujan(const std::vector<double>& spectrum, int d, bool bipartite);
// Iterative form from the extreme nontrivial eigenvalues.
bool ramanujan(double lambda_max_nontrivial, double lambda_min_nontrivial, int d);

// Largest eigenvalue after removing one copy of d and, if bipartite, one of -d.
double largest_nontrivial(const std::vector<double>& spectrum, int d, bool bipartite);
double smallest_nontrivial(const std::vector<double>& spectrum, int d, bool bipartite);

// Sum over edges of (f(u) - f(v))^2 divided by sum f^2.
double dirichlet_quotient(const graph::LabeledGraph& g, const std::vector<double>& f);

}  // namespace trivex::spectral
