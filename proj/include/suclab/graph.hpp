#pragma once

#include <bit>
#include <concepts>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "suclab/matrix.hpp"

namespace suclab {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Largest vertex count representable (single-byte graph6 size field).
inline constexpr int kMaxVertices = 62;

/// Undirected graph without loops or multi-edges on vertices 0..n-1.
/// Neighborhoods are stored as 64-bit masks.
class SimpleGraph {
 public:
  /// Edgeless graph on n vertices.
  explicit SimpleGraph(int n);
  /// From neighborhood masks; validates symmetry, no loops and range.
  static SimpleGraph from_masks(std::vector<std::uint64_t> masks);

  int vertex_count() const noexcept { return static_cast<int>(adj_.size()); }
  bool has_edge(Vertex u, Vertex v) const { return (adj_[u] >> v) & 1U; }
  std::uint64_t neighbors(Vertex u) const { return adj_[u]; }
  int degree(Vertex u) const { return std::popcount(adj_[u]); }
  long weight(Vertex u, Vertex v) const { return has_edge(u, v) ? 1 : 0; }
  std::size_t edge_count() const;
  /// Edges {u, v} with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  /// Image under the relabeling v -> perm[v].
  SimpleGraph relabeled(std::span<const Vertex> perm) const;

  bool operator==(const SimpleGraph&) const = default;

 private:
  explicit SimpleGraph(std::vector<std::uint64_t> masks) : adj_(std::move(masks)) {}
  std::vector<std::uint64_t> adj_;
};

/// Directed graph with nonnegative integer arc weights and no loops.
class WeightedDigraph {
 public:
  /// weights is k x k, nonnegative, zero diagonal (validated).
  explicit WeightedDigraph(IntMatrix weights);

  int vertex_count() const noexcept { return static_cast<int>(weights_.rows()); }
  long weight(Vertex u, Vertex v) const { return weights_(u, v).get_si(); }
  bool has_arc(Vertex u, Vertex v) const { return weights_(u, v) != 0; }

  const IntMatrix& adjacency() const noexcept { return weights_; }
  /// Out-weight on the diagonal minus the adjacency matrix.
  IntMatrix laplacian() const;

  bool operator==(const WeightedDigraph&) const = default;

 private:
  IntMatrix weights_;
};

template <typename G>
concept WeightedGraphLike = requires(const G& g, Vertex u) {
  { g.vertex_count() } -> std::convertible_to<int>;
  { g.weight(u, u) } -> std::convertible_to<long>;
};

/// Throws PreconditionError on out-of-range endpoints or self-loops.
SimpleGraph graph_from_edges(int n, std::span<const Edge> edges);
inline SimpleGraph graph_from_edges(int n, std::initializer_list<Edge> edges) {
  return graph_from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

IntMatrix adjacency(const SimpleGraph& g);
IntMatrix degree_matrix(const SimpleGraph& g);
/// L = D - A.
IntMatrix laplacian(const SimpleGraph& g);

/// deg(u, C): total weight of arcs from u into C.
template <WeightedGraphLike G>
long degree_in(const G& g, Vertex u, std::span<const Vertex> cell) {
  long total = 0;
  for (Vertex v : cell) total += g.weight(u, v);
  return total;
}

bool is_connected(const SimpleGraph& g);

/// e_u in R^n.
IntVector unit_vector(int n, Vertex u);
/// (1, ..., 1) in R^n.
IntVector ones(int n);

}  // namespace suclab
