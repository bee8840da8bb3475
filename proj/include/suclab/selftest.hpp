#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "suclab/graph.hpp"

namespace suclab {

/// Outcome of one exhaustive invariant suite.
struct SuiteResult {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t counterexamples = 0;
  /// A few counterexamples, "<graph6>: <detail>".
  std::vector<std::string> samples;
  double seconds = 0;

  bool passed() const noexcept { return counterexamples == 0; }
};

/// Connected graphs on 1..max_n vertices, one per isomorphism class.
std::vector<SimpleGraph> connected_graphs_up_to(int max_n);

/// AEP iff img(P) is L-invariant, and then L P = P L_pi; every partition.
SuiteResult suite_aep_invariance(const std::vector<SimpleGraph>& graphs);
/// {u, v} twins iff L (e_u - e_v) = (deg u + A_uv)(e_u - e_v); every pair.
SuiteResult suite_twin_eigenvectors(const std::vector<SimpleGraph>& graphs);
/// Simple spectrum implies at most floor((n - 1) / 2) twin pairs.
SuiteResult suite_twin_bound(const std::vector<SimpleGraph>& graphs);
/// Simple spectrum implies every twin has degree below n - 1.
SuiteResult suite_twin_degree(const std::vector<SimpleGraph>& graphs);
/// For every AEP pi of g and pi-regular AEP rho of G_pi: K P_rho = P_rho K~,
/// ker(P_rho^T) is L_pi-invariant, L_pi P_rho = P_rho L_rho, the quotient
/// of G_pi by rho equals the quotient of G by the rho-merge, and
/// L_pi^T P_rho K~ = P_rho K~ L_rho.
SuiteResult suite_regular_merge(const std::vector<SimpleGraph>& graphs);
/// Pruned, pruned without probes, and full sweeps give the same status.
SuiteResult suite_pruned_sweep(const std::vector<SimpleGraph>& graphs);

/// All suites above over connected_graphs_up_to(max_n).
std::vector<SuiteResult> run_selftest(int max_n = 6);

}  // namespace suclab
