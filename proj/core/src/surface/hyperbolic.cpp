#include "trivex/surface/hyperbolic.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "trivex/error.hpp"

namespace trivex::surface {

namespace {
constexpr double kPi = std::numbers::pi;
}

HyperbolicFaceData hyperbolic_face_data(int n) {
  if (n < 2 || n > 30) throw InvalidArgument("hyperbolic face data needs 2 <= n <= 30, got " + std::to_string(n));
  HyperbolicFaceData d;
  d.n = n;
  d.m = 1 << (n + 1);
  const double m = d.m;
  d.interior_angle = 2 * kPi / 3;
  // Right triangle centre / side midpoint / vertex with angles pi/m and pi/3.
  d.polygon_side = 2 * std::acosh(std::cos(kPi / m) / std::sin(kPi / 3));
  d.polygon_circumradius = std::acosh(1 / (std::tan(kPi / m) * std::tan(kPi / 3)));
  d.polygon_inradius = std::acosh(std::cos(kPi / 3) / std::sin(kPi / m));
  d.polygon_area = (m - 2) * kPi - m * d.interior_angle;
  d.triangle_angle = kPi / std::ldexp(1.0, n);
  const double c = std::cos(d.triangle_angle);
  d.triangle_side = std::acosh(c / (1 - c));
  d.triangle_area = kPi - 3 * d.triangle_angle;
  return d;
}

bool AreaCheck::agree(double rel_tol) const {
  const double scale = std::abs(by_genus) > 0 ? std::abs(by_genus) : 1.0;
  return std::abs(by_polygons - by_genus) <= rel_tol * scale && std::abs(by_triangles - by_genus) <= rel_tol * scale;
}

AreaCheck area_check(const HyperbolicFaceData& data, long faces, long group_order, long genus) {
  AreaCheck a;
  a.by_polygons = static_cast<double>(faces) * data.polygon_area;
  a.by_triangles = 2.0 * static_cast<double>(group_order) * data.triangle_area;
  a.by_genus = 2 * kPi * static_cast<double>(2 * genus - 2);
  return a;
}

QuadBound quad_bound(double alpha) {
  if (!(alpha > 0 && alpha <= kPi / 4 * (1 + 1e-15))) throw InvalidArgument("quad_bound needs 0 < alpha <= pi/4");
  QuadBound q;
  q.alpha = alpha;
  q.cosh_h = std::cos(alpha) / std::sin(alpha / 2);
  q.cosh_ell = std::cos(alpha) * (1 + 2 * std::cos(alpha));
  q.cosh_ell_check = q.cosh_h * std::sin(1.5 * alpha);
  if (std::abs(q.cosh_ell - q.cosh_ell_check) > 1e-12 * q.cosh_ell) throw InternalError("quad_bound routes disagree");
  q.ell_lower = std::acosh(q.cosh_ell);
  q.ratio_lower = q.ell_lower / kPi;
  if (!(q.ratio_lower > 0.25)) throw InternalError("quad_bound ratio not above 1/4");
  return q;
}

SurfaceLambdaBounds surface_lambda_bounds(double sigma) {
  if (!(sigma >= 0 && sigma <= 3)) throw InvalidArgument("spectral gap must lie in [0, 3]");
  SurfaceLambdaBounds b;
  b.sigma = sigma;
  b.lambda1_S = 0.25 * sigma / (24 + sigma);
  b.h_T = sigma / 2;
  b.lambda1_hatS = b.h_T / (144 * kPi * kPi);
  return b;
}

double cheeger_h0(double c) {
  if (c < -3) throw InvalidArgument("cheeger_h0 needs C >= -3");
  return (3 - std::sqrt(c + 3)) / 2;
}

}  // namespace trivex::surface
