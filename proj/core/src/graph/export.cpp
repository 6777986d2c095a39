#include "trivex/graph/export.hpp"

#include <json.hpp>
#include <sstream>

#include "trivex/error.hpp"
#include "trivex/version.hpp"

namespace trivex::graph {

namespace {

void header(std::ostringstream& os, const LabeledGraph& g, const ExportMeta& meta, const char* prefix) {
  os << prefix << " trivex " << kVersion << '\n';
  os << prefix << " graph " << meta.name << " vertices " << g.vertex_count() << " edges " << g.edge_count() << '\n';
  os << prefix << " input " << meta.input_hash << '\n';
}

}  // namespace

std::string to_edgelist(const LabeledGraph& g, const ExportMeta& meta) {
  std::ostringstream os;
  header(os, g, meta, "#");
  for (int d = 0; d < g.dart_count(); ++d) {
    const int r = g.dart(d).reverse;
    if (d < r) os << g.dart(d).source << ' ' << g.dart(r).source << '\n';
  }
  return os.str();
}

std::string to_graph6(const LabeledGraph& g) {
  if (!g.is_simple()) throw InvalidArgument("graph6 needs a simple graph");
  const auto n = static_cast<std::uint64_t>(g.vertex_count());
  if (n > 258047) throw InvalidArgument("graph6 writer limited to 258047 vertices");
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(63 + n);
  } else {
    out += '~';
    for (int s = 12; s >= 0; s -= 6) out += static_cast<char>(63 + ((n >> s) & 63U));
  }
  std::vector<char> adj(n * n, 0);
  for (const auto& [u, v] : g.edge_pairs()) {
    adj[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)] = 1;
    adj[static_cast<std::size_t>(v) * n + static_cast<std::size_t>(u)] = 1;
  }
  unsigned acc = 0;
  int bits = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i) {
      acc = (acc << 1) | static_cast<unsigned>(adj[i * n + j]);
      if (++bits == 6) {
        out += static_cast<char>(63 + acc);
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits) out += static_cast<char>(63 + (acc << (6 - bits)));
  return out;
}

LabeledGraph from_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw InvalidArgument("empty graph6 string");
  std::size_t pos = 0;
  auto next = [&]() -> unsigned {
    if (pos >= text.size()) throw InvalidArgument("truncated graph6 string");
    const auto c = static_cast<unsigned char>(text[pos++]);
    if (c < 63 || c > 126) throw InvalidArgument("bad graph6 character");
    return c - 63U;
  };
  std::uint64_t n = 0;
  if (text[0] == '~') {
    ++pos;
    if (text.size() > 1 && text[1] == '~') throw InvalidArgument("graph6 sizes above 258047 not supported");
    for (int i = 0; i < 3; ++i) n = (n << 6) | next();
  } else {
    n = next();
  }
  LabeledGraph g(static_cast<int>(n));
  unsigned acc = 0;
  int left = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i) {
      if (left == 0) {
        acc = next();
        left = 6;
      }
      --left;
      if ((acc >> left) & 1U) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return g;
}

std::string graph6_sidecar(const LabeledGraph& g, const ExportMeta& meta) {
  nlohmann::json j = {{"tool", "trivex"},        {"version", kVersion},          {"graph", meta.name},
                      {"input", meta.input_hash}, {"vertices", g.vertex_count()}, {"edges", g.edge_count()}};
  return j.dump(2) + "\n";
}

std::string to_dot(const LabeledGraph& g, const ExportMeta& meta) {
  std::ostringstream os;
  header(os, g, meta, "//");
  os << "graph \"" << meta.name << "\" {\n";
  const auto& cls = g.vertex_classes();
  for (int v = 0; v < g.vertex_count(); ++v) {
    os << "  " << v;
    if (!cls.empty()) os << " [class=" << cls[static_cast<std::size_t>(v)] << ']';
    os << ";\n";
  }
  for (int d = 0; d < g.dart_count(); ++d) {
    const int r = g.dart(d).reverse;
    if (d >= r) continue;
    os << "  " << g.dart(d).source << " -- " << g.dart(r).source;
    if (g.dart(d).label != kNoLabel) os << " [label=" << g.dart(d).label << ']';
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace trivex::graph
