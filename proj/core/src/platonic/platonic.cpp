#include "trivex/platonic/platonic.hpp"

#include <algorithm>
#include <numeric>

#include "trivex/error.hpp"

namespace trivex::platonic {

namespace {

int mod(std::int64_t a, int N) {
  const auto r = static_cast<int>(a % N);
  return r < 0 ? r + N : r;
}

void require_modulus(int N) {
  if (N < 2) throw InvalidArgument("platonic graphs need N >= 2");
}

}  // namespace

ProjectivePair canonical_pair(int lambda, int mu, int N) {
  require_modulus(N);
  const ProjectivePair p{mod(lambda, N), mod(mu, N)};
  const ProjectivePair q{mod(-p.lambda, N), mod(-p.mu, N)};
  return std::min(p, q);
}

std::vector<ProjectivePair> platonic_vertices(int N) {
  require_modulus(N);
  std::vector<ProjectivePair> out;
  for (int l = 0; l < N; ++l) {
    for (int m = 0; m < N; ++m) {
      if (std::gcd(std::gcd(l, m), N) != 1) continue;
      const ProjectivePair p{l, m};
      if (canonical_pair(l, m, N) == p) out.push_back(p);
    }
  }
  return out;
}

graph::LabeledGraph build_platonic(int N) {
  const auto verts = platonic_vertices(N);
  const int n = static_cast<int>(verts.size());
  graph::LabeledGraph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const auto det = mod(static_cast<std::int64_t>(verts[static_cast<std::size_t>(i)].lambda) * verts[static_cast<std::size_t>(j)].mu -
                               static_cast<std::int64_t>(verts[static_cast<std::size_t>(i)].mu) * verts[static_cast<std::size_t>(j)].lambda,
                           N);
      if (det == 1 || det == N - 1) g.add_edge(i, j);
    }
  }
  return g;
}

std::int64_t platonic_count(int N) {
  require_modulus(N);
  std::int64_t j2 = static_cast<std::int64_t>(N) * N;
  int rest = N;
  for (int p = 2; p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    j2 = j2 / (static_cast<std::int64_t>(p) * p) * (static_cast<std::int64_t>(p) * p - 1);
  }
  return N == 2 ? j2 : j2 / 2;
}

}  // namespace trivex::platonic
