#include "trivex/platonic/duality.hpp"

#include <bit>

#include "trivex/error.hpp"
#include "trivex/graph/cayley.hpp"
#include "trivex/graph/delta_y.hpp"
#include "trivex/graph/isomorphism.hpp"
#include "trivex/platonic/platonic.hpp"
#include "trivex/surface/faces.hpp"
#include "trivex/surface/oriented_map.hpp"

namespace trivex::platonic {

DualityVerdict duality_verdict(const group::PcPresentation& gk, std::uint64_t cap) {
  DualityVerdict v;
  v.k = gk.pclass();
  v.N_k = gk.size();
  const auto order = gk.element_order(gk.image(0));
  if (!std::has_single_bit(order) || order < 2) throw InternalError("order of x0 is not a nontrivial power of two");
  v.n_k = std::countr_zero(order);
  v.modulus = 1 << (v.n_k + 1);
  v.dual_vertices = std::int64_t{3} << (v.N_k - v.n_k);
  v.platonic_vertices = platonic_count(v.modulus);
  v.counts_equal = v.dual_vertices == v.platonic_vertices;
  if (v.counts_equal != (3 * v.n_k == v.N_k + 1)) throw InternalError("vertex counts disagree with 3 n_k = N_k + 1");

  const std::string counts = "|V(T_k*)| = 3*2^(N_k-n_k) = " + std::to_string(v.dual_vertices) + ", |V(Pi_" + std::to_string(v.modulus) +
                             ")| = " + std::to_string(v.platonic_vertices) + "; 3n_k = " + std::to_string(3 * v.n_k) +
                             ", N_k+1 = " + std::to_string(v.N_k + 1);
  if (v.k <= kDirectDualityMaxClass || v.counts_equal) {
    const auto x = graph::cayley(gk, cap);
    const auto t = graph::delta_y(x, graph::relator_triangles(x));
    const auto map = surface::orient_Tk(t);
    const auto dual = surface::dual_graph(map, surface::trace_faces(map, surface::Turn::Left));
    const auto pi = build_platonic(v.modulus);
    if (dual.vertex_count() != v.dual_vertices) throw InternalError("traced face count differs from 3*2^(N_k-n_k)");
    v.direct = true;
    v.witness = graph::find_isomorphism(dual, pi);
    if (v.witness && !graph::verify_isomorphism(dual, pi, *v.witness, false, false)) throw InternalError("duality witness failed verification");
    v.isomorphic = v.witness.has_value();
    v.certificate = counts + (v.isomorphic ? "; explicit isomorphism verified" : "; direct search finds no isomorphism");
  } else {
    v.certificate = counts + "; vertex counts differ, no isomorphism";
  }
  return v;
}

}  // namespace trivex::platonic
