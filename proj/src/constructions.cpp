#include "suclab/constructions.hpp"

#include <vector>

#include "suclab/error.hpp"
#include "suclab/linalg.hpp"

namespace suclab {

std::string to_string(ConstructionError::Reason reason) {
  using R = ConstructionError::Reason;
  switch (reason) {
    case R::NotStronglyUncontrollable:
      return "not_strongly_uncontrollable";
    case R::SpectralRadiusNotBelowN:
      return "spectral_radius_not_below_n";
    case R::EigenvalueNMinus2:
      return "eigenvalue_n_minus_2";
    case R::EigenvalueN:
      return "eigenvalue_n";
    case R::NoDominatingVertex:
      return "no_dominating_vertex";
    case R::EigenvalueOne:
      return "eigenvalue_one";
    case R::TooLarge:
      return "too_large";
    case R::VerificationFailed:
      return "verification_failed";
  }
  return {};
}

namespace {

using Reason = ConstructionError::Reason;

LaplacianFacts require_suc(const SimpleGraph& g, const ConstructionOptions& options, int added) {
  if (g.vertex_count() + added > kMaxDecisionVertices)
    throw ConstructionError(Reason::TooLarge, "construction output exceeds the decision guard");
  LaplacianFacts facts = LaplacianFacts::of(g);
  if (!is_connected(g) || !decide_strong_uncontrollability(g, facts, options.search).strongly_uncontrollable())
    throw ConstructionError(Reason::NotStronglyUncontrollable, "input graph is not strongly uncontrollable");
  return facts;
}

void require_not_eigenvalue(const IntPolynomial& p, long value, Reason reason, const std::string& what) {
  if (eval_at_integer(p, Integer(value)) == 0) throw ConstructionError(reason, what);
}

SimpleGraph verified(SimpleGraph out, const ConstructionOptions& options) {
  if (options.verify && !(is_connected(out) && decide_strong_uncontrollability(out, options.search).strongly_uncontrollable()))
    throw ConstructionError(Reason::VerificationFailed, "constructed graph is not strongly uncontrollable");
  return out;
}

}  // namespace

SimpleGraph add_cone_vertex(const SimpleGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::uint64_t> masks(static_cast<std::size_t>(n + 1));
  for (int u = 0; u < n; ++u) masks[static_cast<std::size_t>(u)] = g.neighbors(u) | (1ULL << n);
  masks[static_cast<std::size_t>(n)] = (1ULL << n) - 1;
  return SimpleGraph::from_masks(std::move(masks));
}

SimpleGraph add_two_cone_vertices(const SimpleGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::uint64_t> masks(static_cast<std::size_t>(n + 2));
  for (int u = 0; u < n; ++u) masks[static_cast<std::size_t>(u)] = g.neighbors(u) | (3ULL << n);
  masks[static_cast<std::size_t>(n)] = (1ULL << n) - 1;
  masks[static_cast<std::size_t>(n + 1)] = (1ULL << n) - 1;
  return SimpleGraph::from_masks(std::move(masks));
}

SimpleGraph add_pendant(const SimpleGraph& g, Vertex anchor) {
  const int n = g.vertex_count();
  if (anchor < 0 || anchor >= n) throw PreconditionError("add_pendant: anchor out of range");
  std::vector<std::uint64_t> masks(static_cast<std::size_t>(n + 1));
  for (int u = 0; u < n; ++u) masks[static_cast<std::size_t>(u)] = g.neighbors(u);
  masks[static_cast<std::size_t>(anchor)] |= 1ULL << n;
  masks[static_cast<std::size_t>(n)] = 1ULL << anchor;
  return SimpleGraph::from_masks(std::move(masks));
}

SimpleGraph cone(const SimpleGraph& g, const ConstructionOptions& options) {
  const LaplacianFacts facts = require_suc(g, options, 1);
  const long n = g.vertex_count();
  require_not_eigenvalue(facts.char_poly, n, Reason::SpectralRadiusNotBelowN,
                         "n is a Laplacian eigenvalue (spectral radius is not below n)");
  return verified(add_cone_vertex(g), options);
}

SimpleGraph join_two_isolated(const SimpleGraph& g, const ConstructionOptions& options) {
  const LaplacianFacts facts = require_suc(g, options, 2);
  const long n = g.vertex_count();
  require_not_eigenvalue(facts.char_poly, n - 2, Reason::EigenvalueNMinus2, "n - 2 is a Laplacian eigenvalue");
  require_not_eigenvalue(facts.char_poly, n, Reason::EigenvalueN, "n is a Laplacian eigenvalue");
  return verified(add_two_cone_vertices(g), options);
}

SimpleGraph pendant_on_dominating(const SimpleGraph& g, const ConstructionOptions& options) {
  const int n = g.vertex_count();
  std::vector<Vertex> dominating;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) == n - 1) dominating.push_back(v);
  if (dominating.empty()) throw ConstructionError(Reason::NoDominatingVertex, "no vertex of degree n - 1");
  const LaplacianFacts facts = require_suc(g, options, 1);
  // Two dominating vertices would be twins of degree n - 1, forcing a
  // repeated eigenvalue n.
  if (dominating.size() != 1)
    throw VerificationError("simple-spectrum graph with more than one dominating vertex");
  require_not_eigenvalue(facts.char_poly, 1, Reason::EigenvalueOne, "1 is a Laplacian eigenvalue");
  return verified(add_pendant(g, dominating.front()), options);
}

}  // namespace suclab
