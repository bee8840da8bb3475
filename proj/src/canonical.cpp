#include "suclab/canonical.hpp"

#include <array>
#include <limits>
#include <map>

#include "suclab/error.hpp"
#include "suclab/graph6.hpp"

namespace suclab {

namespace {

// graph6 lists the upper triangle column by column, so placing vertices in
// order fixes one column at a time. Column j is encoded with row 0 as its
// most significant bit; comparing columns in order then compares bodies.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const SimpleGraph& g) : g_(g), n_(g.vertex_count()) {
    best_.fill(kUnset);
  }

  std::vector<Vertex> run() {
    descend(0, 0);
    std::vector<Vertex> perm(static_cast<std::size_t>(n_));
    for (int pos = 0; pos < n_; ++pos) perm[static_cast<std::size_t>(best_order_[pos])] = pos;
    return perm;
  }

 private:
  static constexpr std::uint64_t kUnset = std::numeric_limits<std::uint64_t>::max();

  void descend(int depth, std::uint64_t used) {
    if (depth == n_) {
      best_order_ = order_;
      return;
    }
    for (Vertex v = 0; v < n_; ++v) {
      if ((used >> v) & 1U) continue;
      std::uint64_t column = 0;
      for (int i = 0; i < depth; ++i) column = (column << 1) | (g_.has_edge(order_[i], v) ? 1U : 0U);
      if (column > best_[depth]) continue;
      if (column < best_[depth]) {
        best_[depth] = column;
        for (int j = depth + 1; j < n_; ++j) best_[j] = kUnset;
      }
      order_[depth] = v;
      descend(depth + 1, used | (1ULL << v));
    }
  }

  const SimpleGraph& g_;
  int n_;
  std::array<Vertex, kMaxCanonicalVertices> order_{};
  std::array<Vertex, kMaxCanonicalVertices> best_order_{};
  std::array<std::uint64_t, kMaxCanonicalVertices> best_{};
};

std::vector<SimpleGraph> extend_all(int n, bool connected) {
  if (n < 1 || n > kMaxGeneratedVertices)
    throw PreconditionError("generator supports 1 <= n <= " + std::to_string(kMaxGeneratedVertices));
  std::vector<SimpleGraph> level{SimpleGraph(1)};
  for (int m = 2; m <= n; ++m) {
    // Every connected graph has a vertex whose removal keeps it connected,
    // so extending connected graphs by a nonempty neighborhood reaches all.
    std::map<std::string, SimpleGraph> seen;
    const std::uint64_t first = connected ? 1 : 0;
    for (const auto& base : level) {
      for (std::uint64_t nbrs = first; nbrs < (1ULL << (m - 1)); ++nbrs) {
        std::vector<std::uint64_t> masks(static_cast<std::size_t>(m));
        for (int u = 0; u < m - 1; ++u)
          masks[static_cast<std::size_t>(u)] = base.neighbors(u) | (((nbrs >> u) & 1U) << (m - 1));
        masks[static_cast<std::size_t>(m - 1)] = nbrs;
        const SimpleGraph g = SimpleGraph::from_masks(std::move(masks));
        const auto perm = canonical_labeling(g);
        SimpleGraph canon = g.relabeled(perm);
        seen.try_emplace(write_graph6(canon), std::move(canon));
      }
    }
    level.clear();
    for (auto& [key, g] : seen) level.push_back(std::move(g));
  }
  return level;
}

}  // namespace

std::vector<Vertex> canonical_labeling(const SimpleGraph& g) {
  if (g.vertex_count() > kMaxCanonicalVertices)
    throw PreconditionError("canonical_form: n=" + std::to_string(g.vertex_count()) + " exceeds " +
                            std::to_string(kMaxCanonicalVertices));
  return CanonicalSearch(g).run();
}

std::string canonical_form(const SimpleGraph& g) { return write_graph6(g.relabeled(canonical_labeling(g))); }

std::vector<SimpleGraph> generate_connected(int n) { return extend_all(n, true); }

std::vector<SimpleGraph> generate_all(int n) { return extend_all(n, false); }

}  // namespace suclab
