#include "suclab/twins.hpp"

#include "suclab/error.hpp"
#include "suclab/linalg.hpp"

namespace suclab {

bool is_twin_pair(const SimpleGraph& g, Vertex u, Vertex v) {
  if (u == v) return false;
  const std::uint64_t nu = g.neighbors(u) & ~(1ULL << v);
  const std::uint64_t nv = g.neighbors(v) & ~(1ULL << u);
  return nu == nv;
}

std::vector<TwinPair> twin_pairs(const SimpleGraph& g) {
  std::vector<TwinPair> out;
  const int n = g.vertex_count();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!is_twin_pair(g, u, v)) continue;
      const bool adjacent = g.has_edge(u, v);
      out.push_back({u, v, adjacent, g.degree(u) + (adjacent ? 1L : 0L)});
    }
  }
  return out;
}

FariaEigenpair faria_vector(const SimpleGraph& g, const TwinPair& pair) {
  if (pair.u < 0 || pair.v < 0 || pair.u >= g.vertex_count() || pair.v >= g.vertex_count() ||
      !is_twin_pair(g, pair.u, pair.v))
    throw PreconditionError("faria_vector: {" + std::to_string(pair.u) + "," + std::to_string(pair.v) +
                            "} is not a twin pair");
  const int n = g.vertex_count();
  IntVector x(static_cast<std::size_t>(n), Integer(0));
  x[static_cast<std::size_t>(pair.u)] = 1;
  x[static_cast<std::size_t>(pair.v)] = -1;
  const long lambda = g.degree(pair.u) + (g.has_edge(pair.u, pair.v) ? 1 : 0);

  const IntVector lx = laplacian(g) * x;
  for (std::size_t i = 0; i < lx.size(); ++i)
    if (lx[i] != lambda * x[i]) throw VerificationError("faria_vector: L x != lambda x for a twin pair");
  return {std::move(x), lambda};
}

std::string TwinGraphCheck::describe() const {
  switch (reason) {
    case Reason::Ok:
      return "twin graph";
    case Reason::NotSimpleSpectrum:
      return "Laplacian spectrum is not simple";
    case Reason::TwinCountBelowBound:
      return std::to_string(twin_pair_count) + " twin pairs, fewer than the maximum " + std::to_string(bound);
    case Reason::TwinCountAboveBound:
      return std::to_string(twin_pair_count) + " twin pairs, more than the maximum " + std::to_string(bound);
  }
  return {};
}

TwinGraphCheck is_twin_graph(const SimpleGraph& g, bool simple_spectrum, const std::vector<TwinPair>& twins) {
  TwinGraphCheck check;
  check.twin_pair_count = static_cast<int>(twins.size());
  check.bound = max_twin_bound(g.vertex_count());
  if (!simple_spectrum) {
    check.reason = TwinGraphCheck::Reason::NotSimpleSpectrum;
    return check;
  }
  std::uint64_t used = 0;
  for (const auto& t : twins) {
    const std::uint64_t both = (1ULL << t.u) | (1ULL << t.v);
    if (used & both)
      throw VerificationError("simple-spectrum graph with overlapping twin pairs (vertex shared by two pairs)");
    used |= both;
  }
  if (check.twin_pair_count < check.bound) {
    check.reason = TwinGraphCheck::Reason::TwinCountBelowBound;
  } else if (check.twin_pair_count > check.bound) {
    check.reason = TwinGraphCheck::Reason::TwinCountAboveBound;
  } else {
    check.is_twin_graph = true;
  }
  return check;
}

TwinGraphCheck is_twin_graph(const SimpleGraph& g) {
  return is_twin_graph(g, is_squarefree(char_poly(laplacian(g))), twin_pairs(g));
}

TwinPartition twin_partition(const SimpleGraph& g) {
  auto twins = twin_pairs(g);
  const auto check = is_twin_graph(g, is_squarefree(char_poly(laplacian(g))), twins);
  if (!check) throw PreconditionError("twin_partition: not a twin graph (" + check.describe() + ")");

  std::vector<std::vector<Vertex>> cells;
  std::uint64_t used = 0;
  for (const auto& t : twins) {
    cells.push_back({t.u, t.v});
    used |= (1ULL << t.u) | (1ULL << t.v);
  }
  std::vector<Vertex> singletons;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if ((used >> v) & 1U) continue;
    singletons.push_back(v);
    cells.push_back({v});
  }
  Partition p(std::move(cells), g.vertex_count());
  return TwinPartition(std::move(twins), std::move(singletons), std::move(p));
}

int min_input_lower_bound(const SimpleGraph& g) { return twin_partition(g).twin_count(); }

}  // namespace suclab
