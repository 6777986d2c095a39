#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "support/oracles.hpp"
#include "support/tower.hpp"
#include "trivex/error.hpp"
#include "trivex/graph/delta_y.hpp"
#include "trivex/spectral/adjacency.hpp"
#include "trivex/spectral/dense.hpp"
#include "trivex/spectral/lanczos.hpp"
#include "trivex/spectral/relations.hpp"
#include "trivex/spectral/report.hpp"

using namespace trivex;
using namespace trivex::spectral;
using trivex::testing::G;

namespace {

constexpr std::uint64_t kCap = 1u << 16;

struct Level {
  graph::LabeledGraph x, t;
  std::vector<graph::Triangle> triangles;
};

Level level(int k) {
  Level l;
  l.x = graph::cayley(G(k), kCap);
  l.triangles = graph::relator_triangles(l.x);
  l.t = graph::delta_y(l.x, l.triangles);
  return l;
}

void check_close(const std::vector<double>& a, const std::vector<double>& b, double tol) {
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) < tol);
}

}  // namespace

TEST_CASE("dense spectra of small graphs") {
  check_close(dense_spectrum(oracle::complete(4)), {-1, -1, -1, 3}, 1e-12);
  check_close(dense_spectrum(oracle::cube()), {-3, -1, -1, -1, 1, 1, 1, 3}, 1e-12);
  check_close(dense_spectrum(oracle::complete_bipartite(3, 3)), {-3, 0, 0, 0, 0, 3}, 1e-12);
  const auto c7 = dense_spectrum(oracle::cycle(7));
  for (int j = 0; j < 7; ++j) CHECK(std::count_if(c7.begin(), c7.end(), [&](double v) { return std::abs(v - 2 * std::cos(2 * M_PI * j / 7)) < 1e-12; }) >= 1);
  CHECK_THROWS_AS(dense_spectrum(oracle::cube(), 7), CapExceeded);
}

TEST_CASE("dense solver agrees with Jacobi") {
  for (int k = 1; k <= 2; ++k) {
    const auto l = level(k);
    check_close(dense_spectrum(l.x), oracle::jacobi_eigenvalues(oracle::adjacency_matrix(l.x)), 1e-9);
    check_close(dense_spectrum(l.t), oracle::jacobi_eigenvalues(oracle::adjacency_matrix(l.t)), 1e-9);
  }
}

TEST_CASE("eigenvectors satisfy A v = lambda v") {
  const auto l = level(2);
  const auto e = dense_eigensystem(l.t);
  const AdjacencyOperator a(l.t);
  for (int j = 0; j < e.n; ++j) {
    std::vector<double> v(e.vector(j), e.vector(j) + e.n);
    const auto av = a.apply(v);
    double r = 0;
    for (int i = 0; i < e.n; ++i) r = std::max(r, std::abs(av[static_cast<std::size_t>(i)] - e.values[static_cast<std::size_t>(j)] * v[static_cast<std::size_t>(i)]));
    CHECK(r < 1e-9);
  }
}

TEST_CASE("adjacency operator") {
  const auto l = level(3);
  AdjacencyOperator a(l.x);
  CHECK(a.size() == 128);
  CHECK(a.max_degree() == 6);
  CHECK(a.symmetry_defect(8, 3) < 1e-12);
  std::vector<double> ones(128, 1.0);
  for (double v : a.apply(ones)) CHECK(v == 6.0);
  const auto dense = a.dense();
  const auto ref = oracle::adjacency_matrix(l.x);
  for (int i = 0; i < 128; ++i)
    for (int j = 0; j < 128; ++j) CHECK(dense[static_cast<std::size_t>(i * 128 + j)] == ref[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  AdjacencyOperator b(l.x, 4);
  std::vector<double> x(128);
  for (int i = 0; i < 128; ++i) x[static_cast<std::size_t>(i)] = std::sin(i + 1.0);
  CHECK(a.apply(x) == b.apply(x));
}

TEST_CASE("Lanczos agrees with the dense solver") {
  for (int k = 2; k <= 3; ++k) {
    const auto l = level(k);
    for (const auto* g : {&l.x, &l.t}) {
      const auto spec = dense_spectrum(*g);
      const bool bip = !g->bipartition().empty();
      const int d = g->degree(0);
      std::vector<std::vector<double>> defl{std::vector<double>(static_cast<std::size_t>(g->vertex_count()), 1.0)};
      if (bip) {
        std::vector<double> s;
        for (int c : g->bipartition()) s.push_back(c ? -1.0 : 1.0);
        defl.push_back(s);
      }
      const auto ext = extreme_eigenvalues(AdjacencyOperator(*g), orthonormalize(defl));
      CHECK(std::abs(ext.top.value - largest_nontrivial(spec, d, bip)) < 1e-7);
      CHECK(std::abs(ext.bottom.value - smallest_nontrivial(spec, d, bip)) < 1e-7);
      CHECK(ext.top.residual < 1e-7);
    }
  }
}

TEST_CASE("Lanczos reports non-convergence") {
  const auto l = level(3);
  LanczosOptions o;
  o.basis = 4;
  o.keep = 2;
  o.max_restarts = 1;
  o.tol = 1e-14;
  CHECK_THROWS_AS(lanczos_extreme(AdjacencyOperator(l.x), {}, false, o), NotConverged);
}

TEST_CASE("orthonormalize drops dependent vectors") {
  const auto q = orthonormalize({{1, 1, 0}, {2, 2, 0}, {0, 1, 1}});
  REQUIRE(q.size() == 2);
  CHECK(std::abs(q[0][0] * q[1][0] + q[0][1] * q[1][1] + q[0][2] * q[1][2]) < 1e-14);
}

TEST_CASE("spectral table values") {
  const double x[] = {2.8284271, 4.3401730};
  const double t[] = {2.4142136, 2.7092754};
  for (int k = 2; k <= 3; ++k) {
    const auto l = level(k);
    const auto rx = spectrum_report(l.x, "X");
    const auto rt = spectrum_report(l.t, "T");
    CHECK(std::abs(rx.lambda1 - x[k - 2]) < 1e-6);
    CHECK(std::abs(rt.lambda1 - t[k - 2]) < 1e-6);
    CHECK(rt.bipartite);
    CHECK(!rx.bipartite);
    CHECK(rt.ramanujan);
    CHECK(rx.sigma == doctest::Approx(6 - rx.lambda1));
    CHECK(rx.sigma_rayleigh == doctest::Approx(rx.sigma).epsilon(1e-6));
    CHECK(rx.method == "dense");
  }
  CHECK(std::abs(spectrum_report(level(2).x, "X").lambda1 - 2 * std::sqrt(2.0)) < 1e-10);
  CHECK(std::abs(spectrum_report(level(2).t, "T").lambda1 - (1 + std::sqrt(2.0))) < 1e-10);
}

TEST_CASE("Lanczos route of the report") {
  const auto l = level(3);
  SpectrumOptions o;
  o.dense_cap = 64;
  const auto r = spectrum_report(l.t, "T", o);
  CHECK(r.method == "lanczos");
  CHECK(std::abs(r.lambda1 - 2.7092754) < 1e-6);
  CHECK(!r.spectrum);
  CHECK_THROWS_AS(spectrum_report(oracle::cycle(1 + 1), "C2"), InvalidArgument);
}

TEST_CASE("Ramanujan predicate") {
  CHECK(ramanujan(dense_spectrum(oracle::complete(4)), 3, false));
  CHECK(ramanujan(dense_spectrum(oracle::cube()), 3, true));
  CHECK(!ramanujan(std::vector<double>{-1, 2.9, 3}, 3, false));
  CHECK(ramanujan(2.8, -2.8, 3));
  CHECK(!ramanujan(2.9, -2.0, 3));
}

TEST_CASE("squaring identity") {
  for (int k = 1; k <= 3; ++k) {
    const auto l = level(k);
    CHECK(verify_squaring_identity(l.x, l.t).ok);
  }
  auto l = level(2);
  auto bad = l.t;
  bad.add_edge(0, 1);
  const auto r = verify_squaring_identity(l.x, bad);
  CHECK(!r.ok);
  REQUIRE(r.witness);
  CHECK(r.witness->expected != r.witness->actual);
}

TEST_CASE("spectra of X and T determine each other") {
  for (int k = 1; k <= 3; ++k) {
    const auto l = level(k);
    const auto m = map_spectra(dense_spectrum(l.x), dense_spectrum(l.t));
    CHECK(m.ok());
    CHECK(m.x_minus_three == 0);
    CHECK(m.t_zero == 0);
  }
  CHECK(!map_spectra({-1, -1, -1, 3}, {-2, 0, 0, 2}).ok());
}

TEST_CASE("eigenvectors lift from X to T") {
  const auto l = level(2);
  const auto e = dense_eigensystem(l.x);
  for (int j : {0, e.n / 2, e.n - 2}) {
    std::vector<double> f(e.vector(j), e.vector(j) + e.n);
    const auto r = lift_eigenvector(l.x, l.t, f, e.values[static_cast<std::size_t>(j)]);
    CHECK(r.ok);
    CHECK(!r.kernel_case);
    CHECK(r.residual_plus < 1e-8);
    CHECK(r.residual_minus < 1e-8);
  }
}

TEST_CASE("-3 kernel on a graph that has it") {
  // K3 with each edge tripled, one triangle per copy; T is K_{3,3}.
  graph::LabeledGraph x(3);
  std::vector<graph::Triangle> tris;
  for (int copy = 0; copy < 3; ++copy) {
    graph::Triangle tri;
    tri.vertices = {0, 1, 2};
    for (int i = 0; i < 3; ++i) tri.darts[static_cast<std::size_t>(i)] = x.add_edge(i, (i + 1) % 3);
    tris.push_back(tri);
  }
  const auto t = graph::delta_y(x, tris);
  check_close(dense_spectrum(t), oracle::jacobi_eigenvalues(oracle::adjacency_matrix(oracle::complete_bipartite(3, 3))), 1e-12);
  const auto ex = dense_eigensystem(x);
  const auto et = dense_eigensystem(t);
  const auto audit = audit_minus_three(x, ex, t, et, tris);
  CHECK(audit.ok());
  CHECK(audit.x_dimension == 2);
  CHECK(audit.kernel_dimension == 2);
  CHECK(audit.t_zero_dimension == 4);
  CHECK(verify_squaring_identity(x, t).ok);
  const auto m = map_spectra(ex.values, et.values);
  CHECK(m.ok());
  CHECK(m.x_minus_three == 2);
}

TEST_CASE("containment") {
  const auto x2 = dense_spectrum(level(2).x);
  const auto x3 = dense_spectrum(level(3).x);
  CHECK(spectrum_containment(x2, x3, 1e-8));
  CHECK(!spectrum_containment(x3, x2, 1e-8));
  CHECK(spectrum_containment(dense_spectrum(oracle::complete(4)), dense_spectrum(oracle::cube()), 1e-8));
  CHECK(!spectrum_containment(dense_spectrum(oracle::complete_bipartite(3, 3)), dense_spectrum(oracle::cube()), 1e-8));
  CHECK(spectrum_containment({}, x2, 1e-8));
}

TEST_CASE("traces count closed walks") {
  const auto l = level(2);
  const auto s = dense_spectrum(l.x);
  double t2 = 0, t3 = 0;
  for (double v : s) {
    t2 += v * v;
    t3 += v * v * v;
  }
  CHECK(t2 == doctest::Approx(2.0 * l.x.edge_count()));
  CHECK(t3 == doctest::Approx(6.0 * static_cast<double>(l.triangles.size())));
}

TEST_CASE("Dirichlet quotient") {
  const auto c = oracle::cube();
  CHECK(dirichlet_quotient(c, {1, 1, 1, 1, 1, 1, 1, 1}) == 0);
  CHECK(dirichlet_quotient(c, {1, -1, -1, 1, -1, 1, 1, -1}) == doctest::Approx(6.0));
}
