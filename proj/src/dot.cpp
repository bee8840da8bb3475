#include "suclab/dot.hpp"

#include <sstream>

#include "suclab/error.hpp"

namespace suclab {

namespace {

std::string node_name(const NodeLabels& labels, int v) {
  if (!labels) return std::to_string(v);
  std::string quoted = "\"";
  for (char c : (*labels)[static_cast<std::size_t>(v)]) {
    if (c == '"' || c == '\\') quoted.push_back('\\');
    quoted.push_back(c);
  }
  quoted.push_back('"');
  return quoted;
}

void check_labels(const NodeLabels& labels, int n) {
  if (labels && static_cast<int>(labels->size()) != n)
    throw PreconditionError("to_dot: label count does not match vertex count");
}

}  // namespace

std::string to_dot(const SimpleGraph& g, const NodeLabels& labels) {
  check_labels(labels, g.vertex_count());
  std::ostringstream os;
  os << "graph G {\n";
  for (int v = 0; v < g.vertex_count(); ++v) os << "  " << node_name(labels, v) << ";\n";
  for (auto [u, v] : g.edges()) os << "  " << node_name(labels, u) << " -- " << node_name(labels, v) << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const WeightedDigraph& g, const NodeLabels& labels) {
  check_labels(labels, g.vertex_count());
  std::ostringstream os;
  os << "digraph G {\n";
  for (int v = 0; v < g.vertex_count(); ++v) os << "  " << node_name(labels, v) << ";\n";
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = 0; v < g.vertex_count(); ++v)
      if (g.has_arc(u, v))
        os << "  " << node_name(labels, u) << " -> " << node_name(labels, v) << " [label=" << g.weight(u, v)
           << "];\n";
  os << "}\n";
  return os.str();
}

}  // namespace suclab
