#include "suclab/graph.hpp"

#include <string>

#include "suclab/error.hpp"

namespace suclab {

SimpleGraph::SimpleGraph(int n) {
  if (n < 1 || n > kMaxVertices)
    throw PreconditionError("vertex count " + std::to_string(n) + " outside 1.." +
                            std::to_string(kMaxVertices));
  adj_.assign(static_cast<std::size_t>(n), 0);
}

SimpleGraph SimpleGraph::from_masks(std::vector<std::uint64_t> masks) {
  const int n = static_cast<int>(masks.size());
  if (n < 1 || n > kMaxVertices)
    throw PreconditionError("vertex count " + std::to_string(n) + " outside 1.." +
                            std::to_string(kMaxVertices));
  const std::uint64_t all = (1ULL << n) - 1;
  for (int u = 0; u < n; ++u) {
    if (masks[u] & ~all) throw PreconditionError("neighbor mask out of range");
    if ((masks[u] >> u) & 1U) throw PreconditionError("self-loop at vertex " + std::to_string(u));
    for (int v = 0; v < n; ++v) {
      if (((masks[u] >> v) & 1U) != ((masks[v] >> u) & 1U))
        throw PreconditionError("asymmetric adjacency");
    }
  }
  return SimpleGraph(std::move(masks));
}

std::size_t SimpleGraph::edge_count() const {
  std::size_t twice = 0;
  for (auto m : adj_) twice += static_cast<std::size_t>(std::popcount(m));
  return twice / 2;
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < vertex_count(); ++u)
    for (int v = u + 1; v < vertex_count(); ++v)
      if (has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

SimpleGraph SimpleGraph::relabeled(std::span<const Vertex> perm) const {
  const int n = vertex_count();
  if (static_cast<int>(perm.size()) != n) throw PreconditionError("relabeled: permutation size");
  std::vector<std::uint64_t> masks(static_cast<std::size_t>(n), 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (has_edge(u, v)) masks[perm[u]] |= 1ULL << perm[v];
  return from_masks(std::move(masks));
}

WeightedDigraph::WeightedDigraph(IntMatrix weights) : weights_(std::move(weights)) {
  if (!weights_.is_square()) throw PreconditionError("weighted digraph: weights not square");
  for (std::size_t u = 0; u < weights_.rows(); ++u) {
    if (weights_(u, u) != 0) throw PreconditionError("weighted digraph: loop weight");
    for (std::size_t v = 0; v < weights_.cols(); ++v)
      if (weights_(u, v) < 0) throw PreconditionError("weighted digraph: negative weight");
  }
}

IntMatrix WeightedDigraph::laplacian() const {
  const std::size_t k = weights_.rows();
  IntMatrix l(k, k);
  for (std::size_t u = 0; u < k; ++u) {
    Integer out = 0;
    for (std::size_t v = 0; v < k; ++v) {
      out += weights_(u, v);
      l(u, v) = -weights_(u, v);
    }
    l(u, u) = out;
  }
  return l;
}

SimpleGraph graph_from_edges(int n, std::span<const Edge> edges) {
  if (n < 1 || n > kMaxVertices)
    throw PreconditionError("vertex count " + std::to_string(n) + " outside 1.." +
                            std::to_string(kMaxVertices));
  std::vector<std::uint64_t> masks(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw PreconditionError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                              "} out of range for n=" + std::to_string(n));
    if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
    masks[u] |= 1ULL << v;
    masks[v] |= 1ULL << u;
  }
  return SimpleGraph::from_masks(std::move(masks));
}

IntMatrix adjacency(const SimpleGraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  IntMatrix a(n, n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (g.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v))) a(u, v) = 1;
  return a;
}

IntMatrix degree_matrix(const SimpleGraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  IntMatrix d(n, n);
  for (std::size_t u = 0; u < n; ++u) d(u, u) = g.degree(static_cast<Vertex>(u));
  return d;
}

IntMatrix laplacian(const SimpleGraph& g) { return degree_matrix(g) - adjacency(g); }

bool is_connected(const SimpleGraph& g) {
  const int n = g.vertex_count();
  std::uint64_t seen = 1;
  std::uint64_t frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f; f &= f - 1) next |= g.neighbors(std::countr_zero(f));
    frontier = next & ~seen;
    seen |= next;
  }
  return std::popcount(seen) == n;
}

IntVector unit_vector(int n, Vertex u) {
  IntVector e(static_cast<std::size_t>(n), Integer(0));
  e[static_cast<std::size_t>(u)] = 1;
  return e;
}

IntVector ones(int n) { return IntVector(static_cast<std::size_t>(n), Integer(1)); }

}  // namespace suclab
