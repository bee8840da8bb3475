#pragma once

#include <stdexcept>
#include <string>

#include "suclab/controllability.hpp"
#include "suclab/graph.hpp"

namespace suclab {

/// Why a vertex-addition construction refused its input or failed re-verification.
class ConstructionError : public std::runtime_error {
 public:
  enum class Reason {
    NotStronglyUncontrollable,
    SpectralRadiusNotBelowN,  // n is a Laplacian eigenvalue
    EigenvalueNMinus2,
    EigenvalueN,
    NoDominatingVertex,
    EigenvalueOne,
    TooLarge,
    VerificationFailed,
  };

  ConstructionError(Reason reason, const std::string& what) : std::runtime_error(what), reason_(reason) {}
  Reason reason() const noexcept { return reason_; }

 private:
  Reason reason_;
};

std::string to_string(ConstructionError::Reason reason);

struct ConstructionOptions {
  /// Re-run the direct decision procedure on the output.
  bool verify = true;
  SearchOptions search;
};

/// Adds one vertex adjacent to every vertex. Requires g strongly
/// uncontrollable and n not an eigenvalue of L (equivalently spectral
/// radius < n, since Laplacian eigenvalues of a simple graph lie in [0, n]).
SimpleGraph cone(const SimpleGraph& g, const ConstructionOptions& options = {});

/// Adds two non-adjacent vertices, each adjacent to every vertex of g.
/// Requires g strongly uncontrollable and neither n - 2 nor n an eigenvalue.
SimpleGraph join_two_isolated(const SimpleGraph& g, const ConstructionOptions& options = {});

/// Adds one pendant vertex attached to the dominating vertex of g.
/// Requires g strongly uncontrollable, a vertex of degree n - 1 and 1 not an
/// eigenvalue.
SimpleGraph pendant_on_dominating(const SimpleGraph& g, const ConstructionOptions& options = {});

/// Unchecked graph operations behind the constructions.
SimpleGraph add_cone_vertex(const SimpleGraph& g);
SimpleGraph add_two_cone_vertices(const SimpleGraph& g);
SimpleGraph add_pendant(const SimpleGraph& g, Vertex anchor);

}  // namespace suclab
