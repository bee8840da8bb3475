#pragma once

#include <optional>
#include <string>
#include <vector>

#include "suclab/graph.hpp"

namespace suclab {

using NodeLabels = std::optional<std::vector<std::string>>;

/// Graphviz text. Nodes are named by index unless labels are given.
std::string to_dot(const SimpleGraph& g, const NodeLabels& labels = std::nullopt);
/// Arcs carry label=<weight>.
std::string to_dot(const WeightedDigraph& g, const NodeLabels& labels = std::nullopt);

}  // namespace suclab
