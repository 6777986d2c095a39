#include "trivex/spectral/relations.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "trivex/error.hpp"
#include "trivex/spectral/adjacency.hpp"

namespace trivex::spectral {

namespace {

void check_cap(const graph::LabeledGraph& g, int cap) {
  if (g.vertex_count() > cap) {
    throw CapExceeded("dense solver limited to " + std::to_string(cap) + " vertices, graph has " + std::to_string(g.vertex_count()));
  }
}

std::vector<double> column(const DenseEigen& e, int j) { return {e.vector(j), e.vector(j) + e.n}; }

}  // namespace

std::vector<double> dense_spectrum(const graph::LabeledGraph& g, int cap) {
  check_cap(g, cap);
  return symmetric_eigen(AdjacencyOperator(g).dense(), g.vertex_count(), false).values;
}

DenseEigen dense_eigensystem(const graph::LabeledGraph& g, int cap, double tol) {
  check_cap(g, cap);
  const AdjacencyOperator a(g);
  auto e = symmetric_eigen(a.dense(), g.vertex_count(), true);
  const double bound = tol * std::max(1, a.max_degree());
  std::vector<double> av(static_cast<std::size_t>(e.n));
  for (int j = 0; j < e.n; ++j) {
    a.apply(e.vector(j), av.data());
    double r = 0.0;
    for (int i = 0; i < e.n; ++i) {
      const double d = av[static_cast<std::size_t>(i)] - e.values[static_cast<std::size_t>(j)] * e.vector(j)[i];
      r += d * d;
    }
    if (std::sqrt(r) > bound) throw InternalError("dense eigenpair residual " + std::to_string(std::sqrt(r)) + " above tolerance");
  }
  return e;
}

SquaringResult verify_squaring_identity(const graph::LabeledGraph& x, const graph::LabeledGraph& t) {
  const int n = x.vertex_count();
  if (t.vertex_count() < n) throw InvalidArgument("T must contain the vertices of X");
  SquaringResult res;
  for (int v = 0; v < n; ++v) {
    std::map<int, long> sq;  // blue column -> (A_T^2 - 3I)(v, col)
    for (int d1 : t.darts_at(v)) {
      const int mid = t.head(d1);
      for (int d2 : t.darts_at(mid)) {
        const int w = t.head(d2);
        if (w < n) ++sq[w];
      }
    }
    sq[v] -= 3;
    std::map<int, long> ax;
    for (int d : x.darts_at(v)) ++ax[x.head(d)];
    std::map<int, long> cols = sq;
    for (const auto& [c, val] : ax) cols[c];
    for (const auto& [c, val] : cols) {
      const long want = ax.count(c) ? ax[c] : 0;
      const long got = sq.count(c) ? sq[c] : 0;
      if (want != got) {
        res.witness = SquaringWitness{v, c, want, got};
        return res;
      }
    }
  }
  res.ok = true;
  return res;
}

SpectraMap map_spectra(const std::vector<double>& spec_x, const std::vector<double>& spec_t, double tol) {
  SpectraMap m;
  std::vector<double> sq;
  sq.reserve(spec_t.size());
  for (double l : spec_t) sq.push_back(l * l - 3);
  std::sort(sq.begin(), sq.end());
  std::vector<double> doubled;
  for (double mu : spec_x) {
    doubled.push_back(mu);
    doubled.push_back(mu);
  }
  std::sort(doubled.begin(), doubled.end());
  if (sq.size() == doubled.size()) {
    for (std::size_t i = 0; i < sq.size(); ++i) m.squares_error = std::max(m.squares_error, std::abs(sq[i] - doubled[i]));
    m.squares_match = m.squares_error <= tol;
  } else {
    m.squares_error = INFINITY;
  }
  m.min_x = spec_x.empty() ? 0 : *std::min_element(spec_x.begin(), spec_x.end());
  m.above_minus_three = m.min_x >= -3 - 1e-8;
  auto t = spec_t;
  std::sort(t.begin(), t.end());
  for (std::size_t i = 0; i < t.size(); ++i) m.symmetry_error = std::max(m.symmetry_error, std::abs(t[i] + t[t.size() - 1 - i]));
  m.symmetric = m.symmetry_error <= 1e-9;
  for (double mu : spec_x) m.x_minus_three += std::abs(mu + 3) <= 1e-6;
  for (double l : spec_t) m.t_zero += std::abs(l) <= 1e-6;
  return m;
}

LiftResult lift_eigenvector(const graph::LabeledGraph& x, const graph::LabeledGraph& t, const std::vector<double>& f, double mu, double tol) {
  const int n = x.vertex_count();
  if (static_cast<int>(f.size()) != n) throw InvalidArgument("lift: eigenvector length mismatch");
  if (mu < -3 - tol) throw InternalError("lift: eigenvalue below -3 contradicts A_X = A_T^2 - 3");
  LiftResult r;
  r.mu = mu;
  const AdjacencyOperator at(t);
  const auto nt = static_cast<std::size_t>(t.vertex_count());
  std::vector<double> sums(nt, 0.0);
  for (int g = n; g < t.vertex_count(); ++g) {
    for (int d : t.darts_at(g)) sums[static_cast<std::size_t>(g)] += f[static_cast<std::size_t>(t.head(d))];
  }
  if (std::abs(mu + 3) <= tol) {
    r.kernel_case = true;
    double s = 0.0;
    for (double v : sums) s += v * v;
    r.triangle_sum_norm = std::sqrt(s) / norm(f.data(), f.size());
    r.ok = true;
    return r;
  }
  const double root = std::sqrt(mu + 3);
  for (int sign : {1, -1}) {
    std::vector<double> F(nt, 0.0), AF(nt);
    for (int v = 0; v < n; ++v) F[static_cast<std::size_t>(v)] = f[static_cast<std::size_t>(v)];
    for (std::size_t g = static_cast<std::size_t>(n); g < nt; ++g) F[g] = sign * sums[g] / root;
    at.apply(F.data(), AF.data());
    for (std::size_t i = 0; i < nt; ++i) AF[i] -= sign * root * F[i];
    const double res = norm(AF.data(), nt) / norm(F.data(), nt);
    (sign > 0 ? r.residual_plus : r.residual_minus) = res;
  }
  r.ok = r.residual_plus <= tol && r.residual_minus <= tol;
  return r;
}

bool KernelAudit::ok(double tol) const {
  return t_zero_dimension == 2 * kernel_dimension && lift_residual <= tol && descend_residual <= tol && descend_triangle_sum <= tol &&
         (kernel_dimension == x_dimension || complement_min_sum > tol);
}

KernelAudit audit_minus_three(const graph::LabeledGraph& x, const DenseEigen& ex, const graph::LabeledGraph& t, const DenseEigen& et,
                              const std::vector<graph::Triangle>& triangles, double tol) {
  KernelAudit a;
  const int n = x.vertex_count();
  std::vector<std::vector<double>> basis;
  for (int j = 0; j < ex.n; ++j) {
    if (std::abs(ex.values[static_cast<std::size_t>(j)] + 3) <= 1e-6) basis.push_back(column(ex, j));
  }
  a.x_dimension = static_cast<int>(basis.size());
  for (int j = 0; j < et.n; ++j) a.t_zero_dimension += std::abs(et.values[static_cast<std::size_t>(j)]) <= 1e-6;

  auto tri_sums = [&](const std::vector<double>& f) {
    std::vector<double> s(triangles.size());
    for (std::size_t i = 0; i < triangles.size(); ++i) {
      for (int v : triangles[i].vertices) s[i] += f[static_cast<std::size_t>(v)];
    }
    return s;
  };

  const int e = a.x_dimension;
  if (e > 0) {
    std::vector<std::vector<double>> images;
    for (const auto& b : basis) images.push_back(tri_sums(b));
    std::vector<double> gram(static_cast<std::size_t>(e * e));
    for (int i = 0; i < e; ++i) {
      for (int j = 0; j < e; ++j) {
        gram[static_cast<std::size_t>(i * e + j)] = dot(images[static_cast<std::size_t>(i)].data(), images[static_cast<std::size_t>(j)].data(), triangles.size());
      }
    }
    const auto ge = symmetric_eigen(gram, e, true);
    const AdjacencyOperator at(t);
    const auto nt = static_cast<std::size_t>(t.vertex_count());
    for (int k = 0; k < e; ++k) {
      const double lam = ge.values[static_cast<std::size_t>(k)];
      if (lam <= tol * tol) {
        ++a.kernel_dimension;
        std::vector<double> F(nt, 0.0), AF(nt);
        for (int i = 0; i < e; ++i) {
          for (int v = 0; v < n; ++v) F[static_cast<std::size_t>(v)] += ge.vector(k)[i] * basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)];
        }
        at.apply(F.data(), AF.data());
        a.lift_residual = std::max(a.lift_residual, norm(AF.data(), nt) / norm(F.data(), nt));
      } else if (a.complement_min_sum == 0 || std::sqrt(lam) < a.complement_min_sum) {
        a.complement_min_sum = std::sqrt(lam);
      }
    }
  }

  const AdjacencyOperator ax(x);
  for (int j = 0; j < et.n; ++j) {
    if (std::abs(et.values[static_cast<std::size_t>(j)]) > 1e-6) continue;
    std::vector<double> b(et.vector(j), et.vector(j) + n);
    const double nb = norm(b.data(), b.size());
    if (nb <= 1e-9) continue;
    auto r = ax.apply(b);
    for (int v = 0; v < n; ++v) r[static_cast<std::size_t>(v)] += 3 * b[static_cast<std::size_t>(v)];
    a.descend_residual = std::max(a.descend_residual, norm(r.data(), r.size()) / nb);
    const auto s = tri_sums(b);
    a.descend_triangle_sum = std::max(a.descend_triangle_sum, norm(s.data(), s.size()) / nb);
  }
  return a;
}

bool spectrum_containment(const std::vector<double>& small, const std::vector<double>& big, double tol) {
  auto s = small;
  auto b = big;
  std::sort(s.begin(), s.end());
  std::sort(b.begin(), b.end());
  std::size_t j = 0;
  for (double v : s) {
    while (j < b.size() && b[j] < v - tol) ++j;
    if (j == b.size() || b[j] > v + tol) return false;
    ++j;
  }
  return true;
}

double largest_nontrivial(const std::vector<double>& spectrum, [[maybe_unused]] int d, bool bipartite) {
  auto s = spectrum;
  std::sort(s.begin(), s.end());
  if (s.size() < 2 + (bipartite ? 1U : 0U)) throw InvalidArgument("spectrum too short");
  return s[s.size() - 2];
}

double smallest_nontrivial(const std::vector<double>& spectrum, [[maybe_unused]] int d, bool bipartite) {
  auto s = spectrum;
  std::sort(s.begin(), s.end());
  return bipartite ? s[1] : s[0];
}

bool ramanujan(double lambda_max_nontrivial, double lambda_min_nontrivial, int d) {
  const double bound = 2 * std::sqrt(d - 1.0) + 1e-9;
  return lambda_max_nontrivial <= bound && lambda_min_nontrivial >= -bound;
}

bool ramanujan(const std::vector<double>& spectrum, int d, bool bipartite) {
  return ramanujan(largest_nontrivial(spectrum, d, bipartite), smallest_nontrivial(spectrum, d, bipartite), d);
}

double dirichlet_quotient(const graph::LabeledGraph& g, const std::vector<double>& f) {
  double num = 0.0;
  for (const auto& [u, v] : g.edge_pairs()) {
    const double diff = f[static_cast<std::size_t>(u)] - f[static_cast<std::size_t>(v)];
    num += diff * diff;
  }
  return num / dot(f.data(), f.data(), f.size());
}

}  // namespace trivex::spectral
