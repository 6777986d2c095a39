#pragma once

namespace trivex::surface {

// Regular hyperbolic m-gon with m = 2^{n+1} and interior angles 2pi/3,
// subdivided into triangles with angles pi/2^n.
struct HyperbolicFaceData {
  int n = 0;
  int m = 0;
  double interior_angle = 0;
  double polygon_side = 0;
  double polygon_area = 0;
  double polygon_circumradius = 0;
  double polygon_inradius = 0;
  double triangle_angle = 0;
  double triangle_side = 0;
  double triangle_area = 0;
};

// Throws InvalidArgument for n < 2 (the faces would not be hyperbolic).
HyperbolicFaceData hyperbolic_face_data(int n);

// The three totals |F| * polygon area, 2|G| * triangle area, 2pi(2g - 2).
struct AreaCheck {
  double by_polygons = 0;
  double by_triangles = 0;
  double by_genus = 0;
  [[nodiscard]] bool agree(double rel_tol = 1e-12) const;
};
AreaCheck area_check(const HyperbolicFaceData& data, long faces, long group_order, long genus);

// Distance bound inside the quadrilateral of angle alpha.
struct QuadBound {
  double alpha = 0;
  double cosh_h = 0;          // cos(alpha) / sin(alpha / 2)
  double cosh_ell = 0;        // cos(alpha)(1 + 2 cos(alpha))
  double cosh_ell_check = 0;  // cosh_h * sin(3 alpha / 2), same value by a second route
  double ell_lower = 0;
  double ratio_lower = 0;     // ell_lower / pi, always > 1/4
};
// Throws InvalidArgument unless 0 < alpha <= pi/4; InternalError if the two
// routes disagree or the ratio is not above 1/4.
QuadBound quad_bound(double alpha);

struct SurfaceLambdaBounds {
  double sigma = 0;
  double lambda1_S = 0;     // (1/4) sigma / (24 + sigma)
  double h_T = 0;           // sigma / 2
  double lambda1_hatS = 0;  // (sigma / 2) / (144 pi^2)
};
SurfaceLambdaBounds surface_lambda_bounds(double sigma);

// Cheeger lower bound (3 - sqrt(C + 3)) / 2 for a nontrivial X-eigenvalue bound C.
double cheeger_h0(double c);

}  // namespace trivex::surface
