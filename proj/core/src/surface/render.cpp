#include "trivex/surface/render.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <deque>
#include <numbers>
#include <sstream>
#include <unordered_map>

#include "trivex/error.hpp"
#include "trivex/version.hpp"

namespace trivex::surface {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

// z -> (a z + b) / (c z + d), kept with ad - bc = 1.
struct Mobius {
  cplx a{1}, b{0}, c{0}, d{1};
  [[nodiscard]] cplx operator()(cplx z) const { return (a * z + b) / (c * z + d); }
  friend Mobius operator*(const Mobius& f, const Mobius& g) {
    Mobius h{f.a * g.a + f.b * g.c, f.a * g.b + f.b * g.d, f.c * g.a + f.d * g.c, f.c * g.b + f.d * g.d};
    const cplx s = std::sqrt(h.a * h.d - h.b * h.c);
    h.a /= s;
    h.b /= s;
    h.c /= s;
    h.d /= s;
    return h;
  }
};

// Half-turn of the disk about point p.
Mobius half_turn(cplx p) {
  const Mobius to{1, p, std::conj(p), 1};
  const Mobius from{1, -p, -std::conj(p), 1};
  const Mobius flip{cplx(0, 1), 0, 0, cplx(0, -1)};
  return to * flip * from;
}

struct Placed {
  Mobius g;
  int face = 0;
  int offset = 0;  // standard side s carries dart faces[face][(s + offset) mod m]
  int depth = 0;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

// Geodesic from p to q as an SVG path segment, y axis flipped.
std::string geodesic(cplx p, cplx q, double scale) {
  const double px = p.real(), py = -p.imag(), qx = q.real(), qy = -q.imag();
  const double det = px * qy - py * qx;
  std::ostringstream os;
  if (std::abs(det) < 1e-12) {
    os << "L " << fmt(scale * qx) << ' ' << fmt(scale * qy);
    return os.str();
  }
  // Circle orthogonal to the unit circle: c.p = (1 + |p|^2)/2, c.q = (1 + |q|^2)/2.
  const double rp = (1 + px * px + py * py) / 2, rq = (1 + qx * qx + qy * qy) / 2;
  const double cx = (rp * qy - py * rq) / det, cy = (px * rq - rp * qx) / det;
  const double r = std::hypot(px - cx, py - cy);
  const double cross = (px - cx) * (qy - cy) - (py - cy) * (qx - cx);
  os << "A " << fmt(scale * r) << ' ' << fmt(scale * r) << " 0 0 " << (cross > 0 ? 1 : 0) << ' ' << fmt(scale * qx) << ' '
     << fmt(scale * qy);
  return os.str();
}

}  // namespace

std::string render_disk(const OrientedMap& map, const FaceSet& faces, int radius, RenderStats* stats) {
  if (radius < 0 || radius > kMaxRenderRadius) throw InvalidArgument("render radius must lie in [0, 6]");
  const int m = faces.uniform_length();
  if (m < 7) throw InvalidArgument("render_disk needs faces of one length m >= 7");
  const auto& g = map.graph();

  std::vector<int> pos_in_face(static_cast<std::size_t>(g.dart_count()));
  for (const auto& f : faces.faces) {
    for (std::size_t i = 0; i < f.size(); ++i) pos_in_face[static_cast<std::size_t>(f[i])] = static_cast<int>(i);
  }

  const double circum = std::tanh(std::acosh(1 / (std::tan(kPi / m) * std::tan(kPi / 3))) / 2);
  const double apothem = std::tanh(std::acosh(std::cos(kPi / 3) / std::sin(kPi / m)) / 2);
  std::vector<cplx> corner(static_cast<std::size_t>(m) + 1), mid(static_cast<std::size_t>(m));
  for (int i = 0; i <= m; ++i) corner[static_cast<std::size_t>(i)] = std::polar(circum, 2 * kPi * (i - 0.5) / m);
  std::vector<Mobius> across(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    mid[static_cast<std::size_t>(i)] = std::polar(apothem, 2 * kPi * i / m);
    across[static_cast<std::size_t>(i)] = half_turn(mid[static_cast<std::size_t>(i)]);
  }

  // Centres are deduplicated on a grid with tolerance 1e-9.
  constexpr double kCell = 1e-7;
  std::unordered_map<long long, std::vector<cplx>> grid;
  auto key = [&](long long ix, long long iy) { return ix * 1'000'000'007LL + iy; };
  auto seen_or_insert = [&](cplx z) {
    const auto ix = static_cast<long long>(std::floor(z.real() / kCell));
    const auto iy = static_cast<long long>(std::floor(z.imag() / kCell));
    for (long long dx = -1; dx <= 1; ++dx) {
      for (long long dy = -1; dy <= 1; ++dy) {
        auto it = grid.find(key(ix + dx, iy + dy));
        if (it == grid.end()) continue;
        for (const auto& w : it->second) {
          if (std::abs(w - z) < 1e-9) return true;
        }
      }
    }
    grid[key(ix, iy)].push_back(z);
    return false;
  };

  std::vector<Placed> placed;
  std::deque<Placed> queue;
  queue.push_back({Mobius{}, 0, 0, 0});
  seen_or_insert(0);
  while (!queue.empty()) {
    const Placed p = queue.front();
    queue.pop_front();
    placed.push_back(p);
    if (p.depth == radius) continue;
    const auto& face = faces.faces[static_cast<std::size_t>(p.face)];
    for (int s = 0; s < m; ++s) {
      const int dart = face[static_cast<std::size_t>((s + p.offset) % m)];
      const int rev = g.dart(dart).reverse;
      const int nf = faces.face_of_dart[static_cast<std::size_t>(rev)];
      const int j = pos_in_face[static_cast<std::size_t>(rev)];
      const Placed q{p.g * across[static_cast<std::size_t>(s)], nf, ((j - s) % m + m) % m, p.depth + 1};
      if (!seen_or_insert(q.g(0))) queue.push_back(q);
    }
  }

  constexpr double kScale = 500;
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<!-- trivex " << kVersion << " render m=" << m << " radius=" << radius << " polygons=" << placed.size() << " -->\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"1040\" height=\"1040\" viewBox=\"-520 -520 1040 1040\">\n";
  os << "<circle cx=\"0\" cy=\"0\" r=\"" << fmt(kScale) << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  int arcs = 0;
  for (const auto& p : placed) {
    os << "<path data-face=\"" << p.face << "\" data-depth=\"" << p.depth << "\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"0.8\" d=\"";
    const cplx start = p.g(corner[0]);
    os << "M " << fmt(kScale * start.real()) << ' ' << fmt(-kScale * start.imag());
    for (int i = 0; i < m; ++i) {
      os << ' ' << geodesic(p.g(corner[static_cast<std::size_t>(i)]), p.g(corner[static_cast<std::size_t>(i) + 1]), kScale);
      ++arcs;
    }
    os << " Z\"/>\n";
  }
  os << "</svg>\n";
  if (stats) *stats = {static_cast<int>(placed.size()), arcs};
  return os.str();
}

}  // namespace trivex::surface
