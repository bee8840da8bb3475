#pragma once

#include <string>
#include <vector>

#include "suclab/graph.hpp"

namespace suclab {

inline constexpr int kMaxCanonicalVertices = 10;
inline constexpr int kMaxGeneratedVertices = 7;

/// Relabeling perm (v -> perm[v]) whose image has the smallest graph6 body.
/// Exact branch and bound over vertex orders; n <= 10.
std::vector<Vertex> canonical_labeling(const SimpleGraph& g);

/// Minimum graph6 record over all relabelings: equal iff isomorphic.
/// Throws PreconditionError for n > 10.
std::string canonical_form(const SimpleGraph& g);

/// One canonically labeled representative per isomorphism class of
/// connected graphs on n vertices, ordered by canonical form. n <= 7.
std::vector<SimpleGraph> generate_connected(int n);

/// Same for all graphs on n vertices, connected or not. n <= 7.
std::vector<SimpleGraph> generate_all(int n);

}  // namespace suclab
