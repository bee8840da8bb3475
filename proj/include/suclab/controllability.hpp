#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "suclab/graph.hpp"
#include "suclab/matrix.hpp"
#include "suclab/polynomial.hpp"
#include "suclab/twins.hpp"

namespace suclab {

/// A vector in {0,1}^n, n <= 62, bit v of `bits` is entry v.
struct BinaryVector {
  int n = 0;
  std::uint64_t bits = 0;

  static BinaryVector indicator(int n, Vertex v) { return {n, 1ULL << v}; }
  bool at(Vertex v) const { return (bits >> v) & 1U; }
  BinaryVector complement() const { return {n, ~bits & ((1ULL << n) - 1)}; }
  IntVector to_integers() const;
  /// "(1,0,0)"
  std::string to_string() const;

  bool operator==(const BinaryVector&) const = default;
};

/// [B, L B, ..., L^{n-1} B]. Throws PreconditionError on shape mismatch.
IntMatrix krylov_matrix(const IntMatrix& l, const IntMatrix& b);

/// Kalman rank test: rank of the Krylov matrix equals n.
bool is_controllable(const IntMatrix& l, const IntMatrix& b);
bool is_controllable(const IntMatrix& l, const BinaryVector& b);

/// Columns e_i for i in `inputs`.
IntMatrix input_matrix(int n, std::span<const Vertex> inputs);

/// Per-graph spectral data shared by the decision procedure and the pipeline.
struct LaplacianFacts {
  IntMatrix laplacian;
  IntPolynomial char_poly;
  bool simple_spectrum = false;
  std::vector<TwinPair> twins;

  static LaplacianFacts of(const SimpleGraph& g);
};

struct Verdict {
  enum class Status { StronglyUncontrollable, NotSimpleSpectrum, Controllable };
  Status status = Status::NotSimpleSpectrum;
  /// Set iff status == Controllable.
  std::optional<BinaryVector> witness;
  /// Number of binary vectors whose Krylov rank was computed.
  std::uint64_t checked_count = 0;
  /// Vectors excluded from the sweep by twin and complement symmetry.
  std::uint64_t pruned_count = 0;

  bool strongly_uncontrollable() const noexcept { return status == Status::StronglyUncontrollable; }
};

std::string to_string(Verdict::Status status);

inline constexpr std::uint64_t kDefaultSeed = 0x5eed5c1ab;
inline constexpr int kMaxDecisionVertices = 30;

struct SearchOptions {
  /// Restrict the sweep to vectors that separate every twin pair, and to
  /// one representative of each {b, e - b}.
  bool prune = true;
  /// Try indicator vectors and random twin-separating vectors first.
  bool probe = true;
  int random_probes = 16;
  std::uint64_t seed = kDefaultSeed;
};

/// Decides whether (L, b) is uncontrollable for every b in {0,1}^n, after
/// the simple-spectrum gate. The caller is responsible for connectivity
/// (disconnected graphs never pass the gate: 0 is then a repeated eigenvalue).
/// Throws PreconditionError for n > 30.
Verdict decide_strong_uncontrollability(const SimpleGraph& g, const SearchOptions& options = {});
Verdict decide_strong_uncontrollability(const SimpleGraph& g, const LaplacianFacts& facts,
                                        const SearchOptions& options = {});

/// True when the input set misses some twin cell of the twin graph g; in
/// that case (L, B) is checked to be uncontrollable (VerificationError if not).
/// Throws PreconditionError if g is not a twin graph.
bool uncontrollable_input_sets_missing_twin(const SimpleGraph& g, std::span<const Vertex> inputs);

}  // namespace suclab
