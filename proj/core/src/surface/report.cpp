#include "trivex/surface/report.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include "trivex/error.hpp"
#include "trivex/graph/cayley.hpp"
#include "trivex/graph/delta_y.hpp"

namespace trivex::surface {

int predicted_pc_rank(int k) {
  if (k < 1) throw InvalidArgument("k must be positive");
  return 8 * (k / 3) + 3 * (k % 3) - 1;
}

int predicted_order_exponent(int k) {
  if (k < 1) throw InvalidArgument("k must be positive");
  return std::bit_width(static_cast<unsigned>(k));
}

ClosedForms closed_forms(int N, int n) {
  if (n < 1 || N < n || N > 60) throw InvalidArgument("closed forms need 1 <= n <= N <= 60");
  ClosedForms c;
  c.N = N;
  c.n = n;
  c.vertices = std::int64_t{1} << (N + 1);
  c.edges = 3 * (std::int64_t{1} << N);
  c.faces = 3 * (std::int64_t{1} << (N - n));
  c.face_length = 1 << (n + 1);
  // 2^{N-n-1}(2^n - 3) with N - n - 1 possibly -1.
  const std::int64_t t = (std::int64_t{1} << n) - 3;
  c.genus = N - n - 1 >= 0 ? 1 + (std::int64_t{1} << (N - n - 1)) * t : 1 + t / 2;
  return c;
}

Rational hurwitz_mu(int n) { return Rational(3, std::int64_t{1} << n); }

Rational hurwitz_genus(int N, int n) {
  const Rational order(std::int64_t{1} << N, 1);
  return Rational(1, 1) + (Rational(1, 1) - hurwitz_mu(n)) / Rational(2, 1) * order;
}

Rational non_flatness(std::int64_t genus, std::int64_t edges) { return Rational(6 * genus, edges); }

bool SurfaceReport::matches_closed_forms() const {
  return vertices == predicted.vertices && edges == predicted.edges && faces == predicted.faces &&
         face_length == predicted.face_length && genus == predicted.genus && genus_hurwitz == Rational(genus, 1);
}

SurfaceReport surface_report(const group::PcPresentation& pcp, std::uint64_t cap) {
  const auto x = graph::cayley(pcp, cap);
  const auto t = graph::delta_y(x, graph::relator_triangles(x));
  const auto map = orient_Tk(t);
  const auto left = trace_faces(map, Turn::Left);
  const auto right = trace_faces(map, Turn::Right);

  SurfaceReport r;
  r.k = pcp.pclass();
  r.N = pcp.size();
  const auto ord = pcp.element_order(group::labeled_generators(pcp)[0]);
  r.n = std::countr_zero(ord);
  r.vertices = t.vertex_count();
  r.edges = t.edge_count();
  r.faces = static_cast<std::int64_t>(left.faces.size());
  r.face_length = left.uniform_length();
  r.genus = left.genus;
  r.genus_hurwitz = hurwitz_genus(r.N, r.n);
  r.mu = hurwitz_mu(r.n);
  r.ratio = non_flatness(r.genus, r.edges);
  r.isometry_lower = std::int64_t{1} << r.N;
  r.hat_genus = 1 + r.vertices / 2;
  r.cusps = r.faces;
  r.predicted = closed_forms(r.N, r.n);
  r.convention = r.face_length == r.predicted.face_length ? "paper-left" : "unmatched";
  r.right_same_type = right.length_histogram() == left.length_histogram();
  if (r.n >= 2) {
    r.hyperbolic = hyperbolic_face_data(r.n);
    r.areas = area_check(*r.hyperbolic, r.faces, r.isometry_lower, r.genus);
  }
  r.cusp_length_ok = r.face_length > 2 * std::numbers::pi;
  return r;
}

HatSurface hat_surface_report(std::int64_t vertices_k, std::int64_t vertices_k1) {
  if (vertices_k <= 0 || vertices_k % 2 != 0 || vertices_k1 % vertices_k != 0) {
    throw InvalidArgument("hat surface needs |V_k| even and dividing |V_{k+1}|");
  }
  HatSurface h;
  h.genus = 1 + vertices_k / 2;
  h.index = vertices_k1 / vertices_k;
  h.index_power_of_two = std::has_single_bit(static_cast<std::uint64_t>(h.index));
  return h;
}

}  // namespace trivex::surface
