#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "suclab/error.hpp"
#include "suclab/graph.hpp"
#include "suclab/matrix.hpp"

namespace suclab {

/// Ordered list of disjoint nonempty cells covering 0..n-1. Each cell is kept
/// sorted; the order of cells is preserved as given and fixes the column
/// order of the characteristic matrix.
class Partition {
 public:
  /// Throws PreconditionError unless the cells form a partition of 0..n-1.
  Partition(std::vector<std::vector<Vertex>> cells, int n);

  static Partition singletons(int n);
  static Partition whole(int n);
  /// labels[v] is the cell index of v; cell indices must cover 0..k-1.
  static Partition from_labels(std::span<const int> labels);

  int vertex_count() const noexcept { return n_; }
  int cell_count() const noexcept { return static_cast<int>(cells_.size()); }
  const std::vector<std::vector<Vertex>>& cells() const noexcept { return cells_; }
  std::span<const Vertex> cell(int i) const { return cells_[static_cast<std::size_t>(i)]; }
  int cell_of(Vertex v) const { return owner_[static_cast<std::size_t>(v)]; }
  std::size_t cell_size(int i) const { return cells_[static_cast<std::size_t>(i)].size(); }

  /// Same cells ordered by their minimum element.
  Partition sorted_by_min() const;

  bool operator==(const Partition& rhs) const { return n_ == rhs.n_ && cells_ == rhs.cells_; }

  /// "[[0,1],[2]]"
  std::string to_string() const;

 private:
  int n_;
  std::vector<std::vector<Vertex>> cells_;
  std::vector<int> owner_;
};

/// A partition of the cell indices 0..k-1 of some base partition.
class MetaPartition {
 public:
  MetaPartition(std::vector<std::vector<int>> groups, int base_cell_count)
      : groups_(std::move(groups), base_cell_count) {}

  static MetaPartition singletons(int base_cell_count) {
    return MetaPartition(Partition::singletons(base_cell_count));
  }

  int base_cell_count() const noexcept { return groups_.vertex_count(); }
  int group_count() const noexcept { return groups_.cell_count(); }
  const std::vector<std::vector<int>>& groups() const noexcept { return groups_.cells(); }
  std::span<const int> group(int j) const { return groups_.cell(j); }
  int group_of(int cell) const { return groups_.cell_of(cell); }
  /// The groups viewed as a partition of the cell indices.
  const Partition& as_partition() const noexcept { return groups_; }

  bool operator==(const MetaPartition& rhs) const { return groups_ == rhs.groups_; }
  std::string to_string() const { return groups_.to_string(); }

 private:
  explicit MetaPartition(Partition p) : groups_(std::move(p)) {}
  Partition groups_;
};

/// n x k 0/1 matrix whose i-th column is the indicator of cell i.
IntMatrix characteristic_matrix(const Partition& p);
inline IntMatrix characteristic_matrix(const MetaPartition& rho) {
  return characteristic_matrix(rho.as_partition());
}

/// K = P^T P = diag(|C_1|, ..., |C_k|).
IntMatrix cell_size_matrix(const Partition& p);
/// diag(|C_{1,1}|, ..., |C_{m,1}|): size of the first cell of each group.
IntMatrix representative_size_matrix(const Partition& p, const MetaPartition& rho);

/// Almost equitable: constant out-degree from each cell into every other cell.
template <WeightedGraphLike G>
bool is_aep(const G& g, const Partition& p) {
  if (g.vertex_count() != p.vertex_count()) throw PreconditionError("is_aep: vertex count mismatch");
  for (int i = 0; i < p.cell_count(); ++i) {
    const auto ci = p.cell(i);
    for (int j = 0; j < p.cell_count(); ++j) {
      if (i == j) continue;
      const auto cj = p.cell(j);
      const long first = degree_in(g, ci.front(), cj);
      for (Vertex u : ci.subspan(1))
        if (degree_in(g, u, cj) != first) return false;
    }
  }
  return true;
}

/// An AEP whose cells additionally have constant internal degree.
template <WeightedGraphLike G>
bool is_equitable(const G& g, const Partition& p) {
  if (!is_aep(g, p)) return false;
  for (int i = 0; i < p.cell_count(); ++i) {
    const auto ci = p.cell(i);
    const long first = degree_in(g, ci.front(), ci);
    for (Vertex u : ci.subspan(1))
      if (degree_in(g, u, ci) != first) return false;
  }
  return true;
}

/// Quotient digraph on the cells with arc weights deg(C_i, C_j).
/// Throws PreconditionError when p is not an AEP of g.
template <WeightedGraphLike G>
WeightedDigraph quotient(const G& g, const Partition& p) {
  if (!is_aep(g, p)) throw PreconditionError("quotient: partition is not almost equitable");
  const auto k = static_cast<std::size_t>(p.cell_count());
  IntMatrix w(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j) w(i, j) = degree_in(g, p.cell(static_cast<int>(i)).front(), p.cell(static_cast<int>(j)));
  return WeightedDigraph(std::move(w));
}

/// Cell j of the result is the union of the base cells in group j.
Partition rho_merge(const Partition& p, const MetaPartition& rho);

/// Every group of rho consists of base cells of one common size.
bool is_pi_regular(const Partition& p, const MetaPartition& rho);

/// img(P) is M-invariant: rank [P | M P] == rank P.
bool preserves_image(const IntMatrix& m, const IntMatrix& p);
/// ker(P^T) is M-invariant: rank [P^T ; P^T M] == rank P^T.
bool preserves_kernel(const IntMatrix& m, const IntMatrix& p);

/// Set partitions of {0..k-1} as restricted-growth strings in lexicographic order.
class SetPartitionStream {
 public:
  explicit SetPartitionStream(int k);
  /// Next restricted-growth string, or nullopt when exhausted.
  std::optional<std::vector<int>> next();

 private:
  int k_;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> rgs_;
  std::vector<int> prefix_max_;
};

struct MetaConstraint {
  enum class Kind { None, TailAsOneGroup, TailAsSingletons };
  Kind kind = Kind::None;
  /// Number of trailing cell indices the constraint applies to.
  int tail = 0;

  static MetaConstraint none() { return {}; }
  static MetaConstraint tail_as_one_group(int count) { return {Kind::TailAsOneGroup, count}; }
  static MetaConstraint tail_as_singletons(int count) { return {Kind::TailAsSingletons, count}; }
};

inline constexpr int kMaxMetaCells = 12;

/// Every meta-partition of k cells honoring the constraint, exactly once.
/// The free leading cells are enumerated by restricted-growth string; the
/// constrained tail groups come last.
class MetaPartitionStream {
 public:
  MetaPartitionStream(int k, MetaConstraint constraint = MetaConstraint::none());
  std::optional<MetaPartition> next();

 private:
  int k_;
  MetaConstraint constraint_;
  SetPartitionStream free_;
};

inline constexpr int kMaxAepVertices = 10;

/// Every AEP of g (n <= 10), cells sorted by minimum element.
template <WeightedGraphLike G>
std::vector<Partition> enumerate_aeps(const G& g) {
  if (g.vertex_count() > kMaxAepVertices) throw PreconditionError("enumerate_aeps: graph too large");
  std::vector<Partition> out;
  SetPartitionStream stream(g.vertex_count());
  while (auto rgs = stream.next()) {
    Partition p = Partition::from_labels(*rgs);
    if (is_aep(g, p)) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace suclab
