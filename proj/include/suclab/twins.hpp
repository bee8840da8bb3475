#pragma once

#include <string>
#include <vector>

#include "suclab/graph.hpp"
#include "suclab/matrix.hpp"
#include "suclab/partition.hpp"

namespace suclab {

/// Vertices u < v with N(u) \ {v} = N(v) \ {u}.
struct TwinPair {
  Vertex u;
  Vertex v;
  bool adjacent;
  /// deg(u) + A(u, v): the eigenvalue of the eigenvector e_u - e_v.
  long faria_eigenvalue;

  bool operator==(const TwinPair&) const = default;
};

/// All twin pairs, lexicographically sorted. Overlapping pairs (twin
/// triples and larger classes) are all reported.
std::vector<TwinPair> twin_pairs(const SimpleGraph& g);

bool is_twin_pair(const SimpleGraph& g, Vertex u, Vertex v);

struct FariaEigenpair {
  IntVector vector;  // e_u - e_v
  long eigenvalue;
};

/// Builds e_u - e_v and checks L x = lambda x exactly.
/// Throws PreconditionError when {u, v} is not a twin pair of g.
FariaEigenpair faria_vector(const SimpleGraph& g, const TwinPair& pair);

/// floor((n - 1) / 2): the most twin pairs a simple-spectrum graph can have.
constexpr int max_twin_bound(int n) { return n >= 1 ? (n - 1) / 2 : 0; }

struct TwinGraphCheck {
  enum class Reason { Ok, NotSimpleSpectrum, TwinCountBelowBound, TwinCountAboveBound };
  bool is_twin_graph = false;
  Reason reason = Reason::Ok;
  int twin_pair_count = 0;
  int bound = 0;

  explicit operator bool() const noexcept { return is_twin_graph; }
  std::string describe() const;
};

/// Simple Laplacian spectrum and exactly max_twin_bound(n) twin pairs.
/// Throws VerificationError if a simple-spectrum graph has overlapping
/// twin pairs (such a graph would carry an order-3 automorphism).
TwinGraphCheck is_twin_graph(const SimpleGraph& g);
/// Same, reusing an already computed simple-spectrum flag and twin list.
TwinGraphCheck is_twin_graph(const SimpleGraph& g, bool simple_spectrum, const std::vector<TwinPair>& twins);

/// Twin cells followed by the remaining singleton vertices.
class TwinPartition {
 public:
  const std::vector<TwinPair>& twin_cells() const noexcept { return twins_; }
  const std::vector<Vertex>& singletons() const noexcept { return singletons_; }
  int twin_count() const noexcept { return static_cast<int>(twins_.size()); }
  /// Twin cells in order, then singleton cells ascending.
  const Partition& partition() const noexcept { return partition_; }

  bool operator==(const TwinPartition& rhs) const { return partition_ == rhs.partition_; }

 private:
  friend TwinPartition twin_partition(const SimpleGraph& g);
  TwinPartition(std::vector<TwinPair> twins, std::vector<Vertex> singletons, Partition p)
      : twins_(std::move(twins)), singletons_(std::move(singletons)), partition_(std::move(p)) {}

  std::vector<TwinPair> twins_;
  std::vector<Vertex> singletons_;
  Partition partition_;
};

/// Throws PreconditionError if g is not a twin graph.
TwinPartition twin_partition(const SimpleGraph& g);

/// Number of twin cells t; any controllable input set needs at least t columns.
/// Throws PreconditionError if g is not a twin graph.
int min_input_lower_bound(const SimpleGraph& g);

}  // namespace suclab
