#include "trivex/spectral/dense.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "trivex/error.hpp"

namespace trivex::spectral {

namespace {

// Column-major n x n view. The inner loops below run down columns, so this
// layout keeps them contiguous. Input matrices are symmetric, so the layout
// does not change their meaning.
struct Mat {
  std::vector<double>& a;
  int n;
  double& operator()(int i, int j) { return a[static_cast<std::size_t>(j) * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)]; }
};

// Householder reduction to tridiagonal form. On return d holds the diagonal,
// e[1..n-1] the subdiagonal, and V the accumulated orthogonal transform when
// vectors are wanted.
void tridiagonalize(Mat V, std::vector<double>& d, std::vector<double>& e, bool vectors) {
  const int n = V.n;
  for (int j = 0; j < n; ++j) d[static_cast<std::size_t>(j)] = V(n - 1, j);
  for (int i = n - 1; i > 0; --i) {
    double scale = 0.0;
    double h = 0.0;
    for (int k = 0; k < i; ++k) scale += std::abs(d[static_cast<std::size_t>(k)]);
    if (scale == 0.0) {
      e[static_cast<std::size_t>(i)] = d[static_cast<std::size_t>(i - 1)];
      for (int j = 0; j < i; ++j) {
        d[static_cast<std::size_t>(j)] = V(i - 1, j);
        V(i, j) = 0.0;
        V(j, i) = 0.0;
      }
    } else {
      for (int k = 0; k < i; ++k) {
        d[static_cast<std::size_t>(k)] /= scale;
        h += d[static_cast<std::size_t>(k)] * d[static_cast<std::size_t>(k)];
      }
      double f = d[static_cast<std::size_t>(i - 1)];
      double g = std::sqrt(h);
      if (f > 0) g = -g;
      e[static_cast<std::size_t>(i)] = scale * g;
      h -= f * g;
      d[static_cast<std::size_t>(i - 1)] = f - g;
      for (int j = 0; j < i; ++j) e[static_cast<std::size_t>(j)] = 0.0;
      for (int j = 0; j < i; ++j) {
        f = d[static_cast<std::size_t>(j)];
        V(j, i) = f;
        g = e[static_cast<std::size_t>(j)] + V(j, j) * f;
        for (int k = j + 1; k <= i - 1; ++k) {
          g += V(k, j) * d[static_cast<std::size_t>(k)];
          e[static_cast<std::size_t>(k)] += V(k, j) * f;
        }
        e[static_cast<std::size_t>(j)] = g;
      }
      f = 0.0;
      for (int j = 0; j < i; ++j) {
        e[static_cast<std::size_t>(j)] /= h;
        f += e[static_cast<std::size_t>(j)] * d[static_cast<std::size_t>(j)];
      }
      const double hh = f / (h + h);
      for (int j = 0; j < i; ++j) e[static_cast<std::size_t>(j)] -= hh * d[static_cast<std::size_t>(j)];
      for (int j = 0; j < i; ++j) {
        f = d[static_cast<std::size_t>(j)];
        g = e[static_cast<std::size_t>(j)];
        for (int k = j; k <= i - 1; ++k) V(k, j) -= (f * e[static_cast<std::size_t>(k)] + g * d[static_cast<std::size_t>(k)]);
        d[static_cast<std::size_t>(j)] = V(i - 1, j);
        V(i, j) = 0.0;
      }
    }
    d[static_cast<std::size_t>(i)] = h;
  }
  if (vectors) {
    for (int i = 0; i < n - 1; ++i) {
      V(n - 1, i) = V(i, i);
      V(i, i) = 1.0;
      const double h = d[static_cast<std::size_t>(i + 1)];
      if (h != 0.0) {
        for (int k = 0; k <= i; ++k) d[static_cast<std::size_t>(k)] = V(k, i + 1) / h;
        for (int j = 0; j <= i; ++j) {
          double g = 0.0;
          for (int k = 0; k <= i; ++k) g += V(k, i + 1) * V(k, j);
          for (int k = 0; k <= i; ++k) V(k, j) -= g * d[static_cast<std::size_t>(k)];
        }
      }
      for (int k = 0; k <= i; ++k) V(k, i + 1) = 0.0;
    }
    for (int j = 0; j < n; ++j) {
      d[static_cast<std::size_t>(j)] = V(n - 1, j);
      V(n - 1, j) = 0.0;
    }
    V(n - 1, n - 1) = 1.0;
  } else {
    for (int j = 0; j < n; ++j) d[static_cast<std::size_t>(j)] = V(j, j);
  }
  e[0] = 0.0;
}

// Implicit QL on the tridiagonal (d, e); rotations applied to V when wanted.
void ql_implicit(Mat V, std::vector<double>& d, std::vector<double>& e, bool vectors) {
  const int n = V.n;
  for (int i = 1; i < n; ++i) e[static_cast<std::size_t>(i - 1)] = e[static_cast<std::size_t>(i)];
  e[static_cast<std::size_t>(n - 1)] = 0.0;
  double f = 0.0;
  double tst1 = 0.0;
  const double eps = std::ldexp(1.0, -52);
  for (int l = 0; l < n; ++l) {
    tst1 = std::max(tst1, std::abs(d[static_cast<std::size_t>(l)]) + std::abs(e[static_cast<std::size_t>(l)]));
    int m = l;
    while (m < n) {
      if (std::abs(e[static_cast<std::size_t>(m)]) <= eps * tst1) break;
      ++m;
    }
    if (m > l) {
      int iter = 0;
      do {
        if (++iter > 60) throw NotConverged("dense eigensolver: QL iteration did not converge");
        double g = d[static_cast<std::size_t>(l)];
        double p = (d[static_cast<std::size_t>(l + 1)] - g) / (2.0 * e[static_cast<std::size_t>(l)]);
        double r = std::hypot(p, 1.0);
        if (p < 0) r = -r;
        d[static_cast<std::size_t>(l)] = e[static_cast<std::size_t>(l)] / (p + r);
        d[static_cast<std::size_t>(l + 1)] = e[static_cast<std::size_t>(l)] * (p + r);
        const double dl1 = d[static_cast<std::size_t>(l + 1)];
        double h = g - d[static_cast<std::size_t>(l)];
        for (int i = l + 2; i < n; ++i) d[static_cast<std::size_t>(i)] -= h;
        f += h;
        p = d[static_cast<std::size_t>(m)];
        double c = 1.0, c2 = 1.0, c3 = 1.0;
        const double el1 = e[static_cast<std::size_t>(l + 1)];
        double s = 0.0, s2 = 0.0;
        for (int i = m - 1; i >= l; --i) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * e[static_cast<std::size_t>(i)];
          h = c * p;
          r = std::hypot(p, e[static_cast<std::size_t>(i)]);
          e[static_cast<std::size_t>(i + 1)] = s * r;
          s = e[static_cast<std::size_t>(i)] / r;
          c = p / r;
          p = c * d[static_cast<std::size_t>(i)] - s * g;
          d[static_cast<std::size_t>(i + 1)] = h + s * (c * g + s * d[static_cast<std::size_t>(i)]);
          if (vectors) {
            for (int k = 0; k < n; ++k) {
              h = V(k, i + 1);
              V(k, i + 1) = s * V(k, i) + c * h;
              V(k, i) = c * V(k, i) - s * h;
            }
          }
        }
        p = -s * s2 * c3 * el1 * e[static_cast<std::size_t>(l)] / dl1;
        e[static_cast<std::size_t>(l)] = s * p;
        d[static_cast<std::size_t>(l)] = c * p;
      } while (std::abs(e[static_cast<std::size_t>(l)]) > eps * tst1);
    }
    d[static_cast<std::size_t>(l)] += f;
    e[static_cast<std::size_t>(l)] = 0.0;
  }
}

}  // namespace

DenseEigen symmetric_eigen(std::vector<double> a, int n, bool want_vectors) {
  if (n < 0 || a.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) throw InvalidArgument("symmetric_eigen: bad matrix size");
  DenseEigen out;
  out.n = n;
  if (n == 0) return out;
  std::vector<double> d(static_cast<std::size_t>(n)), e(static_cast<std::size_t>(n));
  Mat V{a, n};
  tridiagonalize(V, d, e, want_vectors);
  ql_implicit(V, d, e, want_vectors);

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return d[static_cast<std::size_t>(x)] < d[static_cast<std::size_t>(y)]; });
  out.values.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) out.values[static_cast<std::size_t>(j)] = d[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])];
  if (want_vectors) {
    out.vectors.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      const int src = order[static_cast<std::size_t>(j)];
      for (int k = 0; k < n; ++k) out.vectors[static_cast<std::size_t>(j) * static_cast<std::size_t>(n) + static_cast<std::size_t>(k)] = V(k, src);
    }
  }
  return out;
}

}  // namespace trivex::spectral
