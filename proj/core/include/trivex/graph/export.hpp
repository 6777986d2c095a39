#pragma once

#include <string>
#include <string_view>

#include "trivex/graph/labeled_graph.hpp"

namespace trivex::graph {

struct ExportMeta {
  std::string name;        // e.g. "T2"
  std::string input_hash;  // hash of whatever produced the graph
};

// "# ..." header lines, then "u v" per edge, 0-indexed, in dart order.
std::string to_edgelist(const LabeledGraph& g, const ExportMeta& meta);

// graph6 of a simple graph (no header; graph6 has no comment syntax).
// Throws InvalidArgument on loops or parallel edges.
std::string to_graph6(const LabeledGraph& g);
LabeledGraph from_graph6(std::string_view text);
// Sidecar metadata for a graph6 file, as a JSON object.
std::string graph6_sidecar(const LabeledGraph& g, const ExportMeta& meta);

// Undirected DOT; edges carry "label", vertices carry "class" when present.
std::string to_dot(const LabeledGraph& g, const ExportMeta& meta);

}  // namespace trivex::graph
