#include "app/verify.hpp"

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <random>

#include "trivex/error.hpp"
#include "trivex/graph/delta_y.hpp"
#include "trivex/graph/isomorphism.hpp"
#include "trivex/platonic/duality.hpp"
#include "trivex/platonic/platonic.hpp"
#include "trivex/platonic/psl2.hpp"
#include "trivex/spectral/adjacency.hpp"
#include "trivex/spectral/dense.hpp"
#include "trivex/spectral/relations.hpp"
#include "trivex/surface/hyperbolic.hpp"
#include "trivex/surface/report.hpp"
#include "trivex/toeplitz/periodic_matrix.hpp"

namespace trivex::app {

namespace {

using Check = std::function<void(LedgerRow&)>;

std::string fmt(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string sci(double v, int digits = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*e", digits, v);
  return buf;
}

void run(Ledger& ledger, std::string id, std::string anchor, const Check& check) {
  LedgerRow row;
  row.id = std::move(id);
  row.anchor = std::move(anchor);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    check(row);
  } catch (const std::exception& e) {
    row.pass = false;
    row.computed = "error: " + std::string(e.what());
  }
  row.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  ledger.add(std::move(row));
}

const std::vector<double>& full_spectrum(const spectral::SpectrumReport& r) {
  if (!r.spectrum) throw CapExceeded(r.graph + " has no dense spectrum; raise --dense-cap");
  return *r.spectrum;
}

// T = K_{3,3} over X = K_3 with every edge tripled: X has -3 with
// multiplicity 2, all of it with vanishing triangle sums.
struct KernelControl {
  graph::LabeledGraph x{3};
  std::vector<graph::Triangle> triangles;
  graph::LabeledGraph t{0};
};

KernelControl kernel_control() {
  KernelControl c;
  for (int copy = 0; copy < 3; ++copy) {
    graph::Triangle tri;
    tri.vertices = {0, 1, 2};
    for (int i = 0; i < 3; ++i) {
      tri.darts[static_cast<std::size_t>(i)] = c.x.add_edge(i, (i + 1) % 3);
    }
    c.triangles.push_back(tri);
  }
  c.t = graph::delta_y(c.x, c.triangles);
  return c;
}

// Block (i, i + j) of the instantiated matrix is diagonal j at slot i mod 3.
using Dense = std::vector<std::vector<int>>;

Dense instantiate(const toeplitz::PeriodicMatrix& m, int blocks) {
  const int n = 3 * blocks;
  Dense a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int bi = 0; bi < blocks; ++bi) {
    for (int j = 0; j <= m.truncation() && bi + j < blocks; ++j) {
      for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
          const int v = j == 0 ? (r == c) : m.diagonal(j).entry(r, 3 * (bi % 3) + c);
          a[static_cast<std::size_t>(3 * bi + r)][static_cast<std::size_t>(3 * (bi + j) + c)] = v;
        }
      }
    }
  }
  return a;
}

Dense dense_product(const Dense& a, const Dense& b) {
  const std::size_t n = a.size();
  Dense c(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t m = 0; m < n; ++m)
      if (a[i][m])
        for (std::size_t j = 0; j < n; ++j) c[i][j] ^= b[m][j];
  return c;
}

bool same_truncated(const Dense& product, const Dense& expected, int k) {
  for (std::size_t i = 0; i < product.size(); ++i)
    for (std::size_t j = i; j < product.size(); ++j)
      if (static_cast<int>(j / 3 - i / 3) <= k && product[i][j] != expected[i][j]) return false;
  return true;
}

}  // namespace

Ledger verify_all(Pipeline& pipe) {
  const int K = pipe.config().k_max;
  const std::map<int, int> tabulated_rank{{1, 2}, {2, 5}, {3, 7}, {4, 10}, {5, 13}};
  const std::map<int, double> x_table{{2, 2.828427}, {3, 4.340172}, {4, 4.475244}, {5, 5.160252}};
  const std::map<int, double> t_table{{2, 2.414213}, {3, 2.709275}, {4, 2.734089}, {5, 2.856615}};
  const std::map<int, bool> x_ramanujan{{2, true}, {3, true}, {4, false}, {5, false}};
  const std::map<int, bool> t_ramanujan{{2, true}, {3, true}, {4, true}, {5, false}};
  const int dense_max = std::min(K, 4);

  std::vector<std::pair<int, Which>> jobs;
  for (int k = 1; k <= std::min(K, 5); ++k) {
    jobs.emplace_back(k, Which::X);
    jobs.emplace_back(k, Which::T);
  }
  Ledger ledger;
  try {
    pipe.prefetch_spectra(jobs);
  } catch (const std::exception&) {
    // Each row recomputes what it needs and records its own failure.
  }

  run(ledger, "AC-01", "group order |G_k| = 2^{N_k} with N_k = 8 floor(k/3) + 3 (k mod 3) - 1", [&](LedgerRow& row) {
    row.pass = true;
    for (int k = 1; k <= K; ++k) {
      const int expected = tabulated_rank.count(k) ? tabulated_rank.at(k) : surface::predicted_pc_rank(k);
      const int N = pipe.group(k).size();
      const bool ok = N == expected && N == surface::predicted_pc_rank(k) && pipe.x(k).vertex_count() == (1 << N);
      row.pass = row.pass && ok;
      row.expected += (k > 1 ? "," : "N_k = ") + std::to_string(expected);
      row.computed += (k > 1 ? "," : "N_k = ") + std::to_string(N);
    }
    row.computed += row.pass ? "; Cayley graph enumeration has 2^{N_k} vertices" : "";
    row.tolerance = "exact";
  });

  run(ledger, "AC-02", "ord(x0) = ord(x1) = ord(x3) = 2^{floor(log2 k) + 1} in G_k", [&](LedgerRow& row) {
    row.pass = K >= 2;
    for (int k = 2; k <= K; ++k) {
      const auto& g = pipe.group(k);
      const auto x0 = g.image(0);
      const auto x1 = g.image(1);
      const auto x3 = g.inverse(g.multiply(x0, x1));
      const auto want = std::uint64_t{1} << surface::predicted_order_exponent(k);
      const auto o0 = g.element_order(x0), o1 = g.element_order(x1), o3 = g.element_order(x3);
      row.pass = row.pass && o0 == want && o1 == want && o3 == want;
      row.expected += "k=" + std::to_string(k) + ": " + std::to_string(want) + "; ";
      row.computed += "k=" + std::to_string(k) + ": " + std::to_string(o0) + "/" + std::to_string(o1) + "/" + std::to_string(o3) + "; ";
    }
    row.tolerance = "exact";
  });

  auto table_row = [&](Which w, const std::map<int, double>& table, const std::map<int, bool>& ram) {
    return [&, w](LedgerRow& row) {
      row.pass = K >= 2;
      for (int k = 2; k <= std::min(K, 5); ++k) {
        const auto r = pipe.spectrum(k, w);
        const bool ok = std::abs(r.lambda1 - table.at(k)) <= 1e-5 && r.ramanujan == ram.at(k) && r.residual <= 1e-8 * r.d;
        row.pass = row.pass && ok;
        row.expected += r.graph + ": " + fmt(table.at(k)) + (ram.at(k) ? " R; " : " non-R; ");
        row.computed += r.graph + ": " + fmt(r.lambda1, 7) + (r.ramanujan ? " R" : " non-R") + " [" + r.method + "]; ";
      }
      row.tolerance = "1e-5 on lambda1; residual <= 1e-8 d";
    };
  };
  run(ledger, "AC-03", "largest nontrivial eigenvalues of X_k; only X_2 and X_3 Ramanujan", table_row(Which::X, x_table, x_ramanujan));
  run(ledger, "AC-04", "largest nontrivial eigenvalues of T_k; only T_2, T_3, T_4 Ramanujan", table_row(Which::T, t_table, t_ramanujan));

  run(ledger, "AC-05", "A_X = A_T^2 - 3 on the vertices of X_k", [&](LedgerRow& row) {
    row.pass = true;
    row.expected = "exact equality for k=1.." + std::to_string(dense_max);
    for (int k = 1; k <= dense_max; ++k) {
      const auto res = spectral::verify_squaring_identity(pipe.x(k), pipe.t(k));
      row.pass = row.pass && res.ok;
      if (res.witness) {
        row.computed += "k=" + std::to_string(k) + " differs at (" + std::to_string(res.witness->row) + "," + std::to_string(res.witness->col) + "); ";
      }
    }
    if (row.pass) row.computed = "exact equality for k=1.." + std::to_string(dense_max);
    row.tolerance = "exact (integers)";
  });

  run(ledger, "AC-06", "spec T_k symmetric; spec X_k avoids [-6,-3); spec X_k contained in spec X_{k+1}", [&](LedgerRow& row) {
    row.pass = true;
    row.expected = "symmetric, min >= -3, squares map onto spec X twice, containment chain X_2..X_" + std::to_string(dense_max);
    for (int k = 1; k <= dense_max; ++k) {
      const auto m = spectral::map_spectra(full_spectrum(pipe.spectrum(k, Which::X)), full_spectrum(pipe.spectrum(k, Which::T)));
      row.pass = row.pass && m.ok();
      row.computed += "k=" + std::to_string(k) + ": asym " + sci(m.symmetry_error) + ", min " + fmt(m.min_x) + (m.ok() ? "; " : " FAIL; ");
    }
    for (int k = 2; k < dense_max; ++k) {
      const bool c = spectral::spectrum_containment(full_spectrum(pipe.spectrum(k, Which::X)), full_spectrum(pipe.spectrum(k + 1, Which::X)), 1e-8);
      row.pass = row.pass && c;
      row.computed += "X" + std::to_string(k) + (c ? " in " : " NOT in ") + "X" + std::to_string(k + 1) + "; ";
    }
    row.tolerance = "1e-9 symmetry, 1e-8 otherwise";
  });

  run(ledger, "AC-07", "eigenvectors of X_k lift to T_k at +-sqrt(mu + 3); mu = -3 lifts iff triangle sums vanish", [&](LedgerRow& row) {
    row.pass = K >= 2;
    row.expected = "lift residual <= 1e-6 for every mu != -3; kernel audit consistent in both directions";
    for (int k = 2; k <= std::min(K, 3); ++k) {
      const auto ex = spectral::dense_eigensystem(pipe.x(k), pipe.config().dense_cap, pipe.config().tol);
      const auto et = spectral::dense_eigensystem(pipe.t(k), pipe.config().dense_cap, pipe.config().tol);
      double worst = 0;
      int lifted = 0;
      bool ok = true;
      for (int j = 0; j < ex.n; ++j) {
        const std::vector<double> f(ex.vector(j), ex.vector(j) + ex.n);
        const auto l = spectral::lift_eigenvector(pipe.x(k), pipe.t(k), f, ex.values[static_cast<std::size_t>(j)]);
        ok = ok && l.ok;
        if (!l.kernel_case) {
          ++lifted;
          worst = std::max({worst, l.residual_plus, l.residual_minus});
        }
      }
      const auto audit = spectral::audit_minus_three(pipe.x(k), ex, pipe.t(k), et, pipe.triangles(k));
      ok = ok && audit.ok();
      row.pass = row.pass && ok;
      row.computed += "X" + std::to_string(k) + ": " + std::to_string(lifted) + " pairs, worst " + sci(worst) + ", dim E_-3 = " +
                      std::to_string(audit.x_dimension) + ", T zero mult = " + std::to_string(audit.t_zero_dimension) + "; ";
    }
    const auto c = kernel_control();
    const auto ex = spectral::symmetric_eigen(spectral::AdjacencyOperator(c.x).dense(), c.x.vertex_count(), true);
    const auto et = spectral::symmetric_eigen(spectral::AdjacencyOperator(c.t).dense(), c.t.vertex_count(), true);
    const auto audit = spectral::audit_minus_three(c.x, ex, c.t, et, c.triangles);
    const bool control = audit.ok() && audit.x_dimension == 2 && audit.kernel_dimension == 2 && audit.t_zero_dimension == 4;
    row.pass = row.pass && control;
    row.computed += "control K_{3,3}: dim E_-3 = " + std::to_string(audit.x_dimension) + ", kernel " + std::to_string(audit.kernel_dimension) +
                    ", T zero mult = " + std::to_string(audit.t_zero_dimension);
    row.tolerance = "1e-6";
  });

  run(ledger, "AC-08", "traced faces of T_k match |V|, |E|, |F|, face length, genus closed forms and the Hurwitz genus", [&](LedgerRow& row) {
    row.pass = true;
    for (int k = 1; k <= K; ++k) {
      const auto r = surface::surface_report(pipe.group(k), pipe.config().enum_cap);
      bool ok = r.matches_closed_forms();
      if (k == 2) ok = ok && r.faces == 24 && r.face_length == 8 && r.genus == 5;
      row.pass = row.pass && ok;
      row.expected += "k=" + std::to_string(k) + ": F=" + std::to_string(r.predicted.faces) + "x" + std::to_string(r.predicted.face_length) +
                      " g=" + std::to_string(r.predicted.genus) + "; ";
      row.computed += "k=" + std::to_string(k) + ": F=" + std::to_string(r.faces) + "x" + std::to_string(r.face_length) + " g=" +
                      std::to_string(r.genus) + " (Hurwitz " + r.genus_hurwitz.str() + "); ";
    }
    row.tolerance = "exact";
  });

  run(ledger, "AC-09", "non-flatness 6g/|E| equals 5/16 at k=2 and increases strictly for k=2..5", [&](LedgerRow& row) {
    row.expected = "5/16 at k=2, strictly increasing";
    std::vector<Rational> ratios;
    for (int k = 2; k <= std::min(K, 5); ++k) {
      const auto r = surface::surface_report(pipe.group(k), pipe.config().enum_cap);
      ratios.push_back(r.ratio);
      row.computed += (k > 2 ? ", " : "") + r.ratio.str();
    }
    row.pass = !ratios.empty() && ratios.front() == Rational(5, 16);
    for (std::size_t i = 1; i < ratios.size(); ++i) {
      if (!(ratios[i - 1] < ratios[i])) {
        row.pass = false;
        row.computed += "; drops at k=" + std::to_string(i + 2) + " (6g/|E| = 1 - 3/2^{n_k} + 6/|E| is not monotone)";
        break;
      }
    }
    row.tolerance = "exact rationals";
  });

  run(ledger, "AC-10", "Platonic graph counts; T_1* = Pi_4, T_2* = Pi_8; no Pi_N is dual to T_k for k >= 3; |PSL(2,Z_8)| = 192", [&](LedgerRow& row) {
    bool counts = true;
    for (int N = 2; N <= 24; ++N) {
      const auto g = platonic::build_platonic(N);
      counts = counts && g.vertex_count() == platonic::platonic_count(N) && (N < 3 || g.is_regular(N));
    }
    const auto psl8 = platonic::psl2(8).size();
    row.pass = counts && psl8 == 192;
    row.expected = "counts N=2..24, |PSL| 192, k=1,2 isomorphic, k=3,4 refuted";
    row.computed = std::string("counts ") + (counts ? "match" : "MISMATCH") + ", |PSL| " + std::to_string(psl8);
    for (int k = 1; k <= std::min(K, 4); ++k) {
      const auto v = platonic::duality_verdict(pipe.group(k), pipe.config().enum_cap);
      const bool ok = k <= 2 ? v.isomorphic && v.witness : !v.counts_equal && v.direct && !v.isomorphic;
      row.pass = row.pass && ok;
      row.computed += "; k=" + std::to_string(k) + " Pi_" + std::to_string(v.modulus) + (v.isomorphic ? " isomorphic (witness verified)" : " refuted (" + std::to_string(v.dual_vertices) + " vs " + std::to_string(v.platonic_vertices) + " vertices, direct search)");
    }
    row.tolerance = "exact";
  });

  run(ledger, "AC-11", "Cayley graph of <X,Y,Z> mod 8 is X_2 with x0->X, x1->Y, x3->Z; r1, r2, r3 vanish", [&](LedgerRow& row) {
    row.expected = "label-preserving isomorphism, order 32, index 6, normal, relators trivial";
    if (K < 2) throw InvalidArgument("needs k_max >= 2");
    const auto s = platonic::xyz_subgroup();
    const auto c = graph::cayley_from_table(s.table);
    graph::IsoOptions o;
    o.match_labels = true;
    const auto phi = graph::find_isomorphism(c, pipe.x(2), o);
    const bool verified = phi && graph::verify_isomorphism(c, pipe.x(2), *phi, true);
    row.pass = verified && s.relators_hold && s.order == 32 && s.index == 6 && s.normal;
    row.computed = "order " + std::to_string(s.order) + ", index " + std::to_string(s.index) + (s.normal ? ", normal" : ", not normal") +
                   (s.relators_hold ? ", relators trivial" : ", relators FAIL") + (verified ? ", isomorphism verified" : ", no isomorphism");
    row.tolerance = "exact";
  });

  run(ledger, "AC-12", "quadrilateral distance bound and surface eigenvalue bounds from sigma(T_2)", [&](LedgerRow& row) {
    row.expected = "ell >= 1.12838; ratio > 1/4 for alpha = pi/2^j, j=2..20; lambda1(S_2) >= 0.0059563; lambda1(hat S_2) >= 2.0609e-4";
    const auto q = surface::quad_bound(std::numbers::pi / 4);
    bool ratios = true;
    for (int j = 2; j <= 20; ++j) ratios = ratios && surface::quad_bound(std::numbers::pi / std::ldexp(1.0, j)).ratio_lower > 0.25;
    if (K < 2) throw InvalidArgument("needs k_max >= 2");
    const auto b = surface::surface_lambda_bounds(pipe.spectrum(2, Which::T).sigma);
    row.pass = std::abs(q.ell_lower - 1.12838) <= 1e-5 && ratios && std::abs(b.lambda1_S - 0.0059563) <= 1e-6 &&
               std::abs(b.lambda1_hatS - 2.0609e-4) <= 1e-6;
    row.computed = "ell " + fmt(q.ell_lower, 7) + ", ratios " + (ratios ? "> 1/4" : "FAIL") + ", lambda1(S_2) " + fmt(b.lambda1_S, 7) +
                   ", lambda1(hat S_2) " + sci(b.lambda1_hatS, 5);
    row.tolerance = "1e-5 (ell), 1e-6 (eigenvalue bounds)";
  });

  run(ledger, "AC-13", "periodic Toeplitz product equals the instantiated matrix product; alpha/beta constants as displayed", [&](LedgerRow& row) {
    std::mt19937_64 rng(pipe.config().seed);
    int agree = 0;
    constexpr int kPairs = 200;
    for (int p = 0; p < kPairs; ++p) {
      const int k = 1 + static_cast<int>(rng() % 8);
      std::vector<toeplitz::BlockTriple> da, db;
      for (int j = 0; j < k; ++j) {
        da.emplace_back(static_cast<std::uint32_t>(rng()));
        db.emplace_back(static_cast<std::uint32_t>(rng()));
      }
      const auto a = toeplitz::PeriodicMatrix::with_depth(0, da, k);
      const auto b = toeplitz::PeriodicMatrix::with_depth(0, db, k);
      const int blocks = k + 4;
      if (same_truncated(dense_product(instantiate(a, blocks), instantiate(b, blocks)), instantiate(toeplitz::ptm_multiply(a, b), blocks), k)) ++agree;
    }
    const auto ab = toeplitz::alpha_beta();
    const std::map<std::string, std::pair<toeplitz::BlockTriple, std::string>> display{
        {"alpha0", {ab.alpha0, "000000000\n001001001\n011011011"}}, {"beta0", {ab.beta0, "000000000\n011011011\n010010010"}},
        {"alpha1", {ab.alpha1, "000011010\n010100001\n111000010"}}, {"beta1", {ab.beta1, "000011010\n010100001\n111000010"}},
        {"alpha3", {ab.alpha3, "000011010\n011101000\n100011001"}}, {"beta3", {ab.beta3, "000001011\n110011000\n011001100"}}};
    int constants = 0;
    for (const auto& [name, pair] : display) constants += pair.first.str() == pair.second;
    row.pass = agree == kPairs && constants == 6;
    row.expected = "200/200 products, 6/6 constants";
    row.computed = std::to_string(agree) + "/200 products, " + std::to_string(constants) + "/6 constants";
    row.tolerance = "exact over F2";
  });

  return ledger;
}

}  // namespace trivex::app
