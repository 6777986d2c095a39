#include "trivex/surface/faces.hpp"

#include "trivex/error.hpp"

namespace trivex::surface {

std::map<int, int> FaceSet::length_histogram() const {
  std::map<int, int> h;
  for (const auto& f : faces) ++h[static_cast<int>(f.size())];
  return h;
}

int FaceSet::uniform_length() const {
  const auto h = length_histogram();
  return h.size() == 1 ? h.begin()->first : -1;
}

FaceSet trace_faces(const OrientedMap& map, Turn turn) {
  const auto& g = map.graph();
  if (!g.is_connected()) throw InvalidArgument("trace_faces needs a connected map");
  FaceSet fs;
  fs.face_of_dart.assign(static_cast<std::size_t>(g.dart_count()), -1);
  for (int start = 0; start < g.dart_count(); ++start) {
    if (fs.face_of_dart[static_cast<std::size_t>(start)] != -1) continue;
    const int id = static_cast<int>(fs.faces.size());
    std::vector<int> face;
    int d = start;
    do {
      fs.face_of_dart[static_cast<std::size_t>(d)] = id;
      face.push_back(d);
      const int r = g.dart(d).reverse;
      d = turn == Turn::Left ? map.prev(r) : map.next(r);
    } while (d != start);
    fs.faces.push_back(std::move(face));
  }
  fs.euler = static_cast<long>(g.vertex_count()) - g.edge_count() + static_cast<long>(fs.faces.size());
  if ((2 - fs.euler) % 2 != 0) throw InternalError("odd Euler characteristic on an oriented map");
  fs.genus = (2 - fs.euler) / 2;
  return fs;
}

graph::LabeledGraph dual_graph(const OrientedMap& map, const FaceSet& faces) {
  const auto& g = map.graph();
  graph::LabeledGraph dual(static_cast<int>(faces.faces.size()));
  for (int d = 0; d < g.dart_count(); ++d) {
    const int r = g.dart(d).reverse;
    if (d < r) {
      dual.add_edge(faces.face_of_dart[static_cast<std::size_t>(d)], faces.face_of_dart[static_cast<std::size_t>(r)], d, r);
    }
  }
  return dual;
}

}  // namespace trivex::surface
