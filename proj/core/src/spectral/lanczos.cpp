#include "trivex/spectral/lanczos.hpp"

#include <cmath>
#include <cstdio>
#include <random>

#include "trivex/error.hpp"
#include "trivex/spectral/dense.hpp"

namespace trivex::spectral {

namespace {

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

// w <- w - sum <q, w> q over the rows of q, twice; coefficients accumulated
// into coef when given.
void project_out(const std::vector<std::vector<double>>& q, std::size_t count, std::vector<double>& w, double* coef, int threads) {
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t i = 0; i < count; ++i) {
      const double c = dot(q[i].data(), w.data(), w.size(), threads);
      axpy(-c, q[i].data(), w.data(), w.size());
      if (coef) coef[i] += c;
    }
  }
}

}  // namespace

std::vector<std::vector<double>> orthonormalize(const std::vector<std::vector<double>>& vectors) {
  std::vector<std::vector<double>> out;
  for (const auto& v : vectors) {
    auto w = v;
    const double before = norm(w.data(), w.size());
    if (before == 0.0) continue;
    project_out(out, out.size(), w, nullptr, 1);
    const double after = norm(w.data(), w.size());
    if (after <= 1e-10 * before) continue;
    for (auto& x : w) x /= after;
    out.push_back(std::move(w));
  }
  return out;
}

LanczosResult lanczos_extreme(const AdjacencyOperator& a, const std::vector<std::vector<double>>& deflation, bool negate,
                              const LanczosOptions& opts) {
  const auto n = static_cast<std::size_t>(a.size());
  const auto defl = orthonormalize(deflation);
  const int threads = a.threads();
  const int m = std::min<int>(opts.basis, static_cast<int>(n - defl.size()));
  const int keep = std::min(opts.keep, m - 2);
  if (m < 2 || keep < 1) throw InvalidArgument("Lanczos: problem too small for the iterative solver");
  for (const auto& d : defl) {
    if (d.size() != n) throw InvalidArgument("Lanczos: deflation vector has wrong length");
  }
  const double sign = negate ? -1.0 : 1.0;
  auto op = [&](const std::vector<double>& x, std::vector<double>& y) {
    a.apply(x.data(), y.data());
    if (negate) {
      for (auto& v : y) v = -v;
    }
  };

  LanczosResult res;
  std::vector<std::vector<double>> V(static_cast<std::size_t>(m), std::vector<double>(n));
  std::vector<double> H(static_cast<std::size_t>(m * m), 0.0);
  auto h = [&](int i, int j) -> double& { return H[static_cast<std::size_t>(i * m + j)]; };

  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> gauss;
  for (auto& x : V[0]) x = gauss(rng);
  project_out(defl, defl.size(), V[0], nullptr, threads);
  {
    const double nv = norm(V[0].data(), n, threads);
    for (auto& x : V[0]) x /= nv;
  }

  int start = 0;  // first column of the current cycle
  std::vector<double> w(n), coef(static_cast<std::size_t>(m));
  for (int restart = 0; restart <= opts.max_restarts; ++restart) {
    double beta = 0.0;
    for (int j = start; j < m; ++j) {
      op(V[static_cast<std::size_t>(j)], w);
      ++res.matvecs;
      project_out(defl, defl.size(), w, nullptr, threads);
      std::fill(coef.begin(), coef.end(), 0.0);
      project_out(V, static_cast<std::size_t>(j) + 1, w, coef.data(), threads);
      for (int i = 0; i <= j; ++i) {
        h(i, j) = coef[static_cast<std::size_t>(i)];
        h(j, i) = coef[static_cast<std::size_t>(i)];
      }
      beta = norm(w.data(), n, threads);
      if (j + 1 < m) {
        if (beta < 1e-14) {
          // Invariant subspace: continue with a fresh random direction.
          for (auto& x : w) x = gauss(rng);
          project_out(defl, defl.size(), w, nullptr, threads);
          project_out(V, static_cast<std::size_t>(j) + 1, w, nullptr, threads);
          const double nw = norm(w.data(), n, threads);
          for (std::size_t t = 0; t < n; ++t) V[static_cast<std::size_t>(j) + 1][t] = w[t] / nw;
          h(j + 1, j) = h(j, j + 1) = 0.0;
        } else {
          for (std::size_t t = 0; t < n; ++t) V[static_cast<std::size_t>(j) + 1][t] = w[t] / beta;
          h(j + 1, j) = h(j, j + 1) = beta;
        }
      }
    }
    const auto eig = symmetric_eigen(H, m, true);
    // Largest Ritz value is last; estimated residual |beta * y_{m-1}|.
    const int top = m - 1;
    const double* y = eig.vector(top);
    const double estimate = std::abs(beta * y[m - 1]);
    if (estimate <= opts.tol * 0.5 || restart == opts.max_restarts) {
      std::vector<double> x(n, 0.0), ax(n);
      for (int i = 0; i < m; ++i) axpy(y[i], V[static_cast<std::size_t>(i)].data(), x.data(), n);
      const double nx = norm(x.data(), n, threads);
      for (auto& v : x) v /= nx;
      op(x, ax);
      ++res.matvecs;
      const double theta = eig.values[static_cast<std::size_t>(top)];
      axpy(-theta, x.data(), ax.data(), n);
      const double explicit_res = norm(ax.data(), n, threads);
      if (explicit_res <= opts.tol) {
        res.value = sign * theta;
        res.vector = std::move(x);
        res.residual = explicit_res;
        res.restarts = restart;
        return res;
      }
      if (restart == opts.max_restarts) break;
    }
    // Thick restart: top `keep` Ritz vectors plus the normalized residual.
    std::vector<std::vector<double>> kept(static_cast<std::size_t>(keep), std::vector<double>(n, 0.0));
    for (int r = 0; r < keep; ++r) {
      const double* yr = eig.vector(m - 1 - r);
      for (int i = 0; i < m; ++i) axpy(yr[i], V[static_cast<std::size_t>(i)].data(), kept[static_cast<std::size_t>(r)].data(), n);
    }
    std::fill(H.begin(), H.end(), 0.0);
    for (int r = 0; r < keep; ++r) {
      V[static_cast<std::size_t>(r)] = std::move(kept[static_cast<std::size_t>(r)]);
      h(r, r) = eig.values[static_cast<std::size_t>(m - 1 - r)];
    }
    if (beta < 1e-14) {
      for (auto& x : w) x = gauss(rng);
      beta = 0.0;
    }
    project_out(defl, defl.size(), w, nullptr, threads);
    project_out(V, static_cast<std::size_t>(keep), w, nullptr, threads);
    const double nw = norm(w.data(), n, threads);
    for (std::size_t t = 0; t < n; ++t) V[static_cast<std::size_t>(keep)][t] = w[t] / nw;
    for (int r = 0; r < keep; ++r) {
      const double c = beta * eig.vector(m - 1 - r)[m - 1];
      h(keep, r) = h(r, keep) = c;
    }
    start = keep;
  }
  char msg[128];
  std::snprintf(msg, sizeof msg, "Lanczos did not reach residual %g within %d restarts", opts.tol, opts.max_restarts);
  throw NotConverged(msg);
}

ExtremeEigenvalues extreme_eigenvalues(const AdjacencyOperator& a, const std::vector<std::vector<double>>& deflation,
                                       const LanczosOptions& opts) {
  return {lanczos_extreme(a, deflation, false, opts), lanczos_extreme(a, deflation, true, opts)};
}

}  // namespace trivex::spectral
