#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "trivex/group/pc_presentation.hpp"
#include "trivex/surface/faces.hpp"
#include "trivex/surface/hyperbolic.hpp"
#include "trivex/util/rational.hpp"

namespace trivex::surface {

// N_k = 8 floor(k/3) + 3 (k mod 3) - 1.
int predicted_pc_rank(int k);
// n_k = floor(log2 k) + 1.
int predicted_order_exponent(int k);

// Counts predicted from N and n alone.
struct ClosedForms {
  int N = 0;
  int n = 0;
  std::int64_t vertices = 0;   // 2^{N+1}
  std::int64_t edges = 0;      // 3 * 2^N
  std::int64_t faces = 0;      // 3 * 2^{N-n}
  int face_length = 0;         // 2^{n+1}
  std::int64_t genus = 0;      // 1 + 2^{N-n-1} (2^n - 3)
};
ClosedForms closed_forms(int N, int n);

// mu = 3 / 2^n and g = 1 + (1 - mu)/2 * |G|.
Rational hurwitz_mu(int n);
Rational hurwitz_genus(int N, int n);
// 6g / |E|.
Rational non_flatness(std::int64_t genus, std::int64_t edges);

struct SurfaceReport {
  int k = 0;
  int N = 0;  // measured pc rank
  int n = 0;  // measured: ord(x0) = 2^n
  std::int64_t vertices = 0, edges = 0, faces = 0;
  int face_length = 0;  // -1 if faces differ in length
  std::int64_t genus = 0;  // Euler, from traced faces
  Rational genus_hurwitz;
  Rational mu;
  Rational ratio;
  std::int64_t isometry_lower = 0;  // 2^N
  std::int64_t hat_genus = 0;       // 1 + |V| / 2
  std::int64_t cusps = 0;           // = faces
  std::string convention;           // "paper-left" when left tracing gives length 2^{n+1}
  bool right_same_type = false;     // right tracing yields the same face lengths
  ClosedForms predicted;
  std::optional<HyperbolicFaceData> hyperbolic;  // n >= 2 only
  std::optional<AreaCheck> areas;
  bool cusp_length_ok = false;  // face length > 2 pi
  [[nodiscard]] bool matches_closed_forms() const;
};

// Builds X_k, T_k and the orientation of orient_Tk from a class-k quotient.
SurfaceReport surface_report(const group::PcPresentation& pcp, std::uint64_t cap);

struct HatSurface {
  std::int64_t genus = 0;  // 1 + |V_k| / 2
  std::int64_t index = 0;  // |V_{k+1}| / |V_k|
  bool index_power_of_two = false;
};
HatSurface hat_surface_report(std::int64_t vertices_k, std::int64_t vertices_k1);

}  // namespace trivex::surface
