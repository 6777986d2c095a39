#include "app/commands.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "app/json_io.hpp"
#include "app/verify.hpp"
#include "trivex/error.hpp"
#include "trivex/graph/export.hpp"
#include "trivex/group/serialize.hpp"
#include "trivex/platonic/duality.hpp"
#include "trivex/platonic/platonic.hpp"
#include "trivex/surface/render.hpp"
#include "trivex/surface/report.hpp"
#include "trivex/util/hash.hpp"
#include "trivex/version.hpp"

namespace trivex::app {

namespace {

using nlohmann::json;

std::string format_or(const RunConfig& cfg, const std::string& fallback) { return cfg.format.empty() ? fallback : cfg.format; }

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  std::string list;
  for (const char* a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
  throw InvalidArgument("format '" + format + "' not supported here (use " + list + ")");
}

// Returns the path written, or "-" for stdout.
std::string emit(const RunConfig& cfg, const std::string& file, const std::string& content, std::ostream& out) {
  if (cfg.out_dir == "-") {
    out << content;
    return "-";
  }
  std::filesystem::create_directories(cfg.out_dir);
  const auto path = std::filesystem::path(cfg.out_dir) / file;
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error("cannot write " + path.string());
  f << content;
  return path.string();
}

void report(const RunConfig& cfg, std::ostream& out, const std::string& path, const std::string& summary) {
  if (cfg.out_dir != "-") out << summary << " -> " << path << '\n';
}

json provenance(const std::string& input_hash) { return {{"tool_version", kVersion}, {"input_hash", input_hash}}; }

std::string csv_header(const std::string& what, const std::string& input_hash) {
  return "# trivex " + std::string(kVersion) + " " + what + " input " + input_hash + "\n";
}

Which parse_which(const std::string& which) {
  if (which == "X") return Which::X;
  if (which == "T") return Which::T;
  throw InvalidArgument("--which must be X or T here, got '" + which + "'");
}

std::string graph_text(const graph::LabeledGraph& g, const graph::ExportMeta& meta, const std::string& format) {
  if (format == "edgelist") return graph::to_edgelist(g, meta);
  if (format == "dot") return graph::to_dot(g, meta);
  if (format == "graph6") return graph::to_graph6(g) + "\n";
  std::ostringstream os;
  os << csv_header("graph " + meta.name, meta.input_hash) << "source,target,label_forward,label_backward\n";
  for (int d = 0; d < g.dart_count(); ++d) {
    const auto& dart = g.dart(d);
    if (d < dart.reverse) os << dart.source << ',' << g.head(d) << ',' << dart.label << ',' << g.dart(dart.reverse).label << '\n';
  }
  return os.str();
}

void write_graph(const RunConfig& cfg, const graph::LabeledGraph& g, const graph::ExportMeta& meta, std::ostream& out) {
  const auto format = format_or(cfg, "edgelist");
  require_format(format, {"edgelist", "graph6", "dot", "csv"});
  const auto path = emit(cfg, meta.name + "." + (format == "graph6" ? "g6" : format), graph_text(g, meta, format), out);
  if (format == "graph6" && path != "-") emit(cfg, meta.name + ".g6.json", graph::graph6_sidecar(g, meta), out);
  report(cfg, out, path,
         meta.name + ": " + std::to_string(g.vertex_count()) + " vertices, " + std::to_string(g.edge_count()) + " edges");
}

}  // namespace

int cmd_group(Pipeline& pipe, std::ostream& out) {
  const auto& cfg = pipe.config();
  require_format(format_or(cfg, "json"), {"json"});
  const auto& g = pipe.group(cfg.k);
  const auto path = emit(cfg, "G" + std::to_string(cfg.k) + ".json", group::to_json(g, 2) + "\n", out);
  std::string layers;
  for (int s : g.layer_sizes()) layers += (layers.empty() ? "" : ",") + std::to_string(s);
  report(cfg, out, path, "G" + std::to_string(cfg.k) + ": order 2^" + std::to_string(g.size()) + ", layers " + layers);
  return kExitPass;
}

int cmd_graph(Pipeline& pipe, const std::string& which, std::ostream& out) {
  const auto& cfg = pipe.config();
  const int k = cfg.k;
  if (which == "dual") {
    const auto map = surface::orient_Tk(pipe.t(k));
    const auto dual = surface::dual_graph(map, surface::trace_faces(map, surface::Turn::Left));
    write_graph(cfg, dual, {"T" + std::to_string(k) + "_dual", pipe.input_hash(k)}, out);
  } else {
    const auto w = parse_which(which);
    write_graph(cfg, pipe.graph(k, w), {graph_name(k, w), pipe.input_hash(k)}, out);
  }
  return kExitPass;
}

int cmd_spectrum(Pipeline& pipe, const std::string& which, std::ostream& out) {
  const auto& cfg = pipe.config();
  const auto format = format_or(cfg, "json");
  require_format(format, {"json", "csv"});
  const auto w = parse_which(which);
  const auto r = pipe.spectrum(cfg.k, w);
  std::string text;
  if (format == "json") {
    auto j = to_json(r);
    j.update(provenance(pipe.input_hash(cfg.k)));
    text = j.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os.precision(17);
    os << csv_header("spectrum " + r.graph, pipe.input_hash(cfg.k)) << "index,eigenvalue\n";
    if (r.spectrum) {
      for (std::size_t i = 0; i < r.spectrum->size(); ++i) os << i << ',' << (*r.spectrum)[i] << '\n';
    } else {
      os << "min," << r.lambda_min << "\nmax," << r.lambda1 << '\n';
    }
    text = os.str();
  }
  const auto path = emit(cfg, r.graph + "_spectrum." + format, text, out);
  char buf[128];
  std::snprintf(buf, sizeof buf, "%s: lambda1 %.6f, sigma %.6f, %s [%s]", r.graph.c_str(), r.lambda1, r.sigma,
                r.ramanujan ? "Ramanujan" : "not Ramanujan", r.method.c_str());
  report(cfg, out, path, buf);
  return kExitPass;
}

int cmd_faces(Pipeline& pipe, std::ostream& out) {
  const auto& cfg = pipe.config();
  const auto format = format_or(cfg, "json");
  require_format(format, {"json", "csv"});
  const int k = cfg.k;
  const auto r = surface::surface_report(pipe.group(k), cfg.enum_cap);
  std::string text;
  if (format == "json") {
    auto j = to_json(r);
    j.update(provenance(pipe.input_hash(k)));
    text = j.dump(2) + "\n";
  } else {
    const auto map = surface::orient_Tk(pipe.t(k));
    const auto faces = surface::trace_faces(map, surface::Turn::Left);
    std::ostringstream os;
    os << csv_header("faces T" + std::to_string(k), pipe.input_hash(k)) << "face,length,darts\n";
    for (std::size_t f = 0; f < faces.faces.size(); ++f) {
      os << f << ',' << faces.faces[f].size() << ',';
      for (std::size_t i = 0; i < faces.faces[f].size(); ++i) os << (i ? " " : "") << faces.faces[f][i];
      os << '\n';
    }
    text = os.str();
  }
  const auto path = emit(cfg, "T" + std::to_string(k) + "_faces." + format, text, out);
  report(cfg, out, path,
         "S" + std::to_string(k) + ": " + std::to_string(r.faces) + " faces of length " + std::to_string(r.face_length) + ", genus " +
             std::to_string(r.genus));
  return r.matches_closed_forms() ? kExitPass : kExitVerification;
}

int cmd_platonic(Pipeline& pipe, int N, bool with_duality, std::ostream& out) {
  const auto& cfg = pipe.config();
  const auto g = platonic::build_platonic(N);
  write_graph(cfg, g, {"Pi" + std::to_string(N), hex64(fnv1a64("platonic N=" + std::to_string(N)))}, out);
  if (!with_duality) return kExitPass;
  const auto v = platonic::duality_verdict(pipe.group(cfg.k), cfg.enum_cap);
  auto j = to_json(v);
  j.update(provenance(pipe.input_hash(cfg.k)));
  const auto path = emit(cfg, "duality_k" + std::to_string(cfg.k) + ".json", j.dump(2) + "\n", out);
  report(cfg, out, path, "T" + std::to_string(cfg.k) + "* vs Pi_" + std::to_string(v.modulus) + ": " + (v.isomorphic ? "isomorphic" : "not isomorphic"));
  return kExitPass;
}

int cmd_render(Pipeline& pipe, int radius, std::ostream& out) {
  const auto& cfg = pipe.config();
  require_format(format_or(cfg, "svg"), {"svg"});
  const auto map = surface::orient_Tk(pipe.t(cfg.k));
  const auto faces = surface::trace_faces(map, surface::Turn::Left);
  surface::RenderStats stats;
  auto svg = surface::render_disk(map, faces, radius, &stats);
  const auto after_decl = svg.find('\n') + 1;
  svg.insert(after_decl, "<!-- input " + pipe.input_hash(cfg.k) + " -->\n");
  const auto path = emit(cfg, "S" + std::to_string(cfg.k) + "_r" + std::to_string(radius) + ".svg", svg, out);
  report(cfg, out, path, std::to_string(stats.polygons) + " polygons, " + std::to_string(stats.arcs) + " arcs");
  return kExitPass;
}

int cmd_verify_all(Pipeline& pipe, std::ostream& out) {
  const auto& cfg = pipe.config();
  require_format(format_or(cfg, "json"), {"json"});
  const auto ledger = verify_all(pipe);
  if (cfg.out_dir == "-") {
    out << ledger.json();
    return ledger.all_pass() ? kExitPass : kExitVerification;
  }
  out << ledger.table();
  out << "ledger -> " << emit(cfg, "ledger.json", ledger.json(), out) << '\n';
  return ledger.all_pass() ? kExitPass : kExitVerification;
}

}  // namespace trivex::app
