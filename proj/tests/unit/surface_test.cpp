#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "support/oracles.hpp"
#include "support/tower.hpp"
#include "trivex/error.hpp"
#include "trivex/graph/delta_y.hpp"
#include "trivex/surface/faces.hpp"
#include "trivex/surface/hyperbolic.hpp"
#include "trivex/surface/render.hpp"
#include "trivex/surface/report.hpp"

using namespace trivex;
using namespace trivex::surface;
using trivex::testing::G;

namespace {

constexpr std::uint64_t kCap = 1u << 16;

graph::LabeledGraph tk(int k) {
  const auto x = graph::cayley(G(k), kCap);
  return graph::delta_y(x, graph::relator_triangles(x));
}

// Cube drawn in the plane as two nested squares; rotation by angle.
OrientedMap planar_cube() {
  const double xy[8][2] = {{2, 2}, {-2, 2}, {-2, -2}, {2, -2}, {1, 1}, {-1, 1}, {-1, -1}, {1, -1}};
  graph::LabeledGraph g(8);
  for (int i = 0; i < 4; ++i) {
    g.add_edge(i, (i + 1) % 4);
    g.add_edge(4 + i, 4 + (i + 1) % 4);
    g.add_edge(i, 4 + i);
  }
  std::vector<int> next(static_cast<std::size_t>(g.dart_count()));
  for (int v = 0; v < 8; ++v) {
    auto ds = g.darts_at(v);
    auto angle = [&](int d) {
      const int h = g.head(d);
      return std::atan2(xy[h][1] - xy[v][1], xy[h][0] - xy[v][0]);
    };
    std::sort(ds.begin(), ds.end(), [&](int a, int b) { return angle(a) < angle(b); });
    for (std::size_t i = 0; i < ds.size(); ++i) next[static_cast<std::size_t>(ds[i])] = ds[(i + 1) % ds.size()];
  }
  return {g, next};
}

}  // namespace

TEST_CASE("planar cube has six square faces") {
  const auto map = planar_cube();
  for (auto turn : {Turn::Left, Turn::Right}) {
    const auto f = trace_faces(map, turn);
    CHECK(f.faces.size() == 6);
    CHECK(f.uniform_length() == 4);
    CHECK(f.genus == 0);
  }
}

TEST_CASE("orientation of T_k") {
  const auto t = tk(2);
  const auto map = orient_Tk(t);
  for (int v = 0; v < t.vertex_count(); ++v) {
    std::vector<int> labels;
    const int d0 = t.darts_at(v).front();
    int d = d0, steps = 0;
    do {
      labels.push_back(t.dart(d).label);
      d = map.next(d);
      ++steps;
    } while (d != d0);
    CHECK(steps == 3);
    std::sort(labels.begin(), labels.end());
    CHECK(labels == std::vector<int>{0, 1, 3});
  }
}

TEST_CASE("faces of T_2 and T_4") {
  const auto f2 = trace_faces(orient_Tk(tk(2)), Turn::Left);
  CHECK(f2.faces.size() == 24);
  CHECK(f2.uniform_length() == 8);
  CHECK(f2.genus == 5);
  const auto f4 = trace_faces(orient_Tk(tk(4)), Turn::Left);
  CHECK(f4.faces.size() == 384);
  CHECK(f4.uniform_length() == 16);
  CHECK(f4.genus == 321);
  const auto r2 = trace_faces(orient_Tk_reversed_green(tk(2)), Turn::Left);
  CHECK(r2.faces.size() == 16);
  CHECK(r2.uniform_length() == 12);
  CHECK(r2.genus == 9);
}

TEST_CASE("left and right tracing give the same cycle type") {
  for (int k = 1; k <= 4; ++k) {
    const auto map = orient_Tk(tk(k));
    CHECK(trace_faces(map, Turn::Left).length_histogram() == trace_faces(map, Turn::Right).length_histogram());
  }
}

TEST_CASE("surface reports match the closed forms") {
  for (int k = 1; k <= 5; ++k) {
    CAPTURE(k);
    const auto r = surface_report(G(k), kCap);
    CHECK(r.matches_closed_forms());
    CHECK(r.N == predicted_pc_rank(k));
    CHECK(r.n == predicted_order_exponent(k));
    CHECK(r.cusps == r.faces);
    CHECK(r.right_same_type);
    CHECK(r.convention == "paper-left");
  }
  const auto r1 = surface_report(G(1), kCap);
  CHECK(r1.faces == 6);
  CHECK(r1.face_length == 4);
  CHECK(r1.genus == 0);
  const auto r2 = surface_report(G(2), kCap);
  CHECK(r2.vertices == 64);
  CHECK(r2.edges == 96);
  CHECK(r2.faces == 24);
  CHECK(r2.genus == 5);
  CHECK(r2.mu == Rational(3, 4));
  CHECK(r2.ratio == Rational(5, 16));
  CHECK(r2.cusp_length_ok);
  REQUIRE(r2.areas);
  CHECK(r2.areas->agree());
  const auto r5 = surface_report(G(5), kCap);
  CHECK(r5.vertices == 16384);
  CHECK(r5.faces == 3072);
  CHECK(r5.face_length == 16);
  CHECK(r5.genus == 2561);
  CHECK(r5.ratio == Rational(2561, 4096));
}

TEST_CASE("closed forms") {
  const auto c = closed_forms(5, 2);
  CHECK(c.vertices == 64);
  CHECK(c.faces == 24);
  CHECK(c.genus == 5);
  CHECK(closed_forms(2, 1).genus == 0);
  CHECK(hurwitz_genus(10, 3) == Rational(321));
  CHECK(non_flatness(5, 96) == Rational(5, 16));
  CHECK(predicted_pc_rank(6) == 15);
  CHECK(predicted_order_exponent(4) == 3);
}

TEST_CASE("hyperbolic face data") {
  const auto h = hyperbolic_face_data(2);
  CHECK(h.m == 8);
  CHECK(h.interior_angle == doctest::Approx(2 * std::numbers::pi / 3));
  CHECK(h.polygon_area == doctest::Approx(2 * std::numbers::pi / 3));
  CHECK(h.triangle_angle == doctest::Approx(std::numbers::pi / 4));
  CHECK(h.triangle_area == doctest::Approx(std::numbers::pi / 4));
  const auto a = area_check(h, 24, 32, 5);
  CHECK(a.by_polygons == doctest::Approx(16 * std::numbers::pi));
  CHECK(a.by_triangles == doctest::Approx(16 * std::numbers::pi));
  CHECK(a.agree());
  CHECK_THROWS_AS(hyperbolic_face_data(1), InvalidArgument);
}

TEST_CASE("quadrilateral bound") {
  const auto q = quad_bound(std::numbers::pi / 4);
  CHECK(q.cosh_h == doctest::Approx(1.84776).epsilon(1e-5));
  CHECK(q.cosh_ell == doctest::Approx((1 + std::sqrt(2.0)) / std::sqrt(2.0)));
  CHECK(q.cosh_ell_check == doctest::Approx(q.cosh_ell));
  CHECK(std::abs(q.ell_lower - 1.12838) < 1e-5);
  for (int j = 2; j <= 20; ++j) CHECK(quad_bound(std::numbers::pi / std::ldexp(1.0, j)).ratio_lower > 0.25);
  CHECK_THROWS_AS(quad_bound(1.0), InvalidArgument);
}

TEST_CASE("surface eigenvalue bounds") {
  const double sigma = 2 - std::sqrt(2.0);
  const auto b = surface_lambda_bounds(sigma);
  CHECK(std::abs(b.lambda1_S - 0.0059563) < 1e-6);
  CHECK(b.lambda1_S == doctest::Approx(0.25 * sigma / (24 + sigma)));
  CHECK(std::abs(b.lambda1_hatS - 2.0609e-4) < 1e-6);
  CHECK(b.h_T == doctest::Approx(sigma / 2));
  const auto z = surface_lambda_bounds(0);
  CHECK(z.lambda1_S == 0);
  CHECK(z.lambda1_hatS == 0);
  CHECK(cheeger_h0(6.0) == doctest::Approx(0.0));
}

TEST_CASE("hat surfaces") {
  const auto h = hat_surface_report(64, 256);
  CHECK(h.genus == 33);
  CHECK(h.index == 4);
  CHECK(h.index_power_of_two);
  CHECK(hat_surface_report(8, 64).genus == 5);
}

TEST_CASE("dual of T_2 is 8-regular on 24 vertices") {
  const auto map = orient_Tk(tk(2));
  const auto dual = dual_graph(map, trace_faces(map, Turn::Left));
  CHECK(dual.vertex_count() == 24);
  CHECK(dual.is_regular(8));
}

TEST_CASE("rendering") {
  const auto map = orient_Tk(tk(2));
  const auto faces = trace_faces(map, Turn::Left);
  const int expected[] = {1, 9, 41, 161};
  for (int r = 0; r <= 3; ++r) {
    RenderStats s;
    const auto svg = render_disk(map, faces, r, &s);
    CHECK(s.polygons == expected[r]);
    CHECK(s.arcs == 8 * s.polygons);
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(render_disk(map, faces, r) == svg);
  }
  CHECK_THROWS_AS(render_disk(map, faces, kMaxRenderRadius + 1), InvalidArgument);
  const auto m1 = orient_Tk(tk(1));
  CHECK_THROWS_AS(render_disk(m1, trace_faces(m1, Turn::Left), 1), InvalidArgument);
}
