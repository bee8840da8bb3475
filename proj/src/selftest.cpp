#include "suclab/selftest.hpp"

#include <chrono>
#include <functional>

#include "suclab/canonical.hpp"
#include "suclab/controllability.hpp"
#include "suclab/graph6.hpp"
#include "suclab/linalg.hpp"
#include "suclab/partition.hpp"
#include "suclab/twins.hpp"

namespace suclab {

namespace {

constexpr std::size_t kMaxSamples = 5;

// Runs body(g, fail) for each graph; fail(detail) records a counterexample.
SuiteResult run_suite(std::string name, const std::vector<SimpleGraph>& graphs,
                      const std::function<void(const SimpleGraph&, SuiteResult&,
                                               const std::function<void(const std::string&)>&)>& body) {
  const auto start = std::chrono::steady_clock::now();
  SuiteResult r;
  r.name = std::move(name);
  for (const auto& g : graphs) {
    auto fail = [&](const std::string& detail) {
      ++r.counterexamples;
      if (r.samples.size() < kMaxSamples) r.samples.push_back(write_graph6(g) + ": " + detail);
    };
    body(g, r, fail);
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

std::vector<SimpleGraph> connected_graphs_up_to(int max_n) {
  std::vector<SimpleGraph> out;
  for (int n = 1; n <= max_n; ++n)
    for (auto& g : generate_connected(n)) out.push_back(std::move(g));
  return out;
}

SuiteResult suite_aep_invariance(const std::vector<SimpleGraph>& graphs) {
  return run_suite("aep-invariance", graphs, [](const SimpleGraph& g, SuiteResult& r, const auto& fail) {
    const IntMatrix l = laplacian(g);
    SetPartitionStream stream(g.vertex_count());
    while (auto rgs = stream.next()) {
      ++r.cases;
      const Partition pi = Partition::from_labels(*rgs);
      const IntMatrix p = characteristic_matrix(pi);
      const bool aep = is_aep(g, pi);
      if (aep != preserves_image(l, p)) {
        fail(pi.to_string() + " AEP=" + (aep ? "yes" : "no") + " disagrees with invariance");
        continue;
      }
      if (!aep) continue;
      const IntMatrix lq = quotient(g, pi).laplacian();
      if (l * p != p * lq) fail(pi.to_string() + " L P != P L_pi");
      if (cell_size_matrix(pi) * lq != p.transpose() * l * p) fail(pi.to_string() + " K L_pi != P^T L P");
    }
  });
}

SuiteResult suite_twin_eigenvectors(const std::vector<SimpleGraph>& graphs) {
  return run_suite("twin-eigenvectors", graphs, [](const SimpleGraph& g, SuiteResult& r, const auto& fail) {
    const IntMatrix l = laplacian(g);
    const int n = g.vertex_count();
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        ++r.cases;
        IntVector x(static_cast<std::size_t>(n), Integer(0));
        x[static_cast<std::size_t>(u)] = 1;
        x[static_cast<std::size_t>(v)] = -1;
        const long lambda = g.degree(u) + g.weight(u, v);
        IntVector scaled = x;
        for (auto& e : scaled) e *= lambda;
        const bool eigen = l * x == scaled;
        if (eigen != is_twin_pair(g, u, v))
          fail("pair {" + std::to_string(u) + "," + std::to_string(v) + "}");
      }
    }
  });
}

SuiteResult suite_twin_bound(const std::vector<SimpleGraph>& graphs) {
  return run_suite("twin-bound", graphs, [](const SimpleGraph& g, SuiteResult& r, const auto& fail) {
    const LaplacianFacts facts = LaplacianFacts::of(g);
    if (!facts.simple_spectrum) return;
    ++r.cases;
    const int bound = max_twin_bound(g.vertex_count());
    if (static_cast<int>(facts.twins.size()) > bound)
      fail(std::to_string(facts.twins.size()) + " twin pairs exceed " + std::to_string(bound));
  });
}

SuiteResult suite_twin_degree(const std::vector<SimpleGraph>& graphs) {
  return run_suite("twin-degree", graphs, [](const SimpleGraph& g, SuiteResult& r, const auto& fail) {
    const LaplacianFacts facts = LaplacianFacts::of(g);
    if (!facts.simple_spectrum) return;
    for (const auto& t : facts.twins) {
      ++r.cases;
      if (g.degree(t.u) >= g.vertex_count() - 1)
        fail("twin {" + std::to_string(t.u) + "," + std::to_string(t.v) + "} has degree n - 1");
    }
  });
}

SuiteResult suite_regular_merge(const std::vector<SimpleGraph>& graphs) {
  return run_suite("regular-merge", graphs, [](const SimpleGraph& g, SuiteResult& r, const auto& fail) {
    for (const Partition& pi : enumerate_aeps(g)) {
      const WeightedDigraph gq = quotient(g, pi);
      const IntMatrix lq = gq.laplacian();
      const IntMatrix k = cell_size_matrix(pi);
      MetaPartitionStream stream(pi.cell_count());
      while (auto rho = stream.next()) {
        if (!is_pi_regular(pi, *rho) || !is_aep(gq, rho->as_partition())) continue;
        ++r.cases;
        const std::string where = pi.to_string() + " rho=" + rho->to_string();
        const IntMatrix p = characteristic_matrix(*rho);
        const IntMatrix kt = representative_size_matrix(pi, *rho);
        const WeightedDigraph merged = quotient(gq, rho->as_partition());
        const IntMatrix lr = merged.laplacian();
        if (k * p != p * kt) fail(where + " K P != P K~");
        if (!preserves_kernel(lq, p)) fail(where + " ker(P^T) not invariant");
        if (lq * p != p * lr) fail(where + " L_pi P != P L_rho");
        if (!(merged == quotient(g, rho_merge(pi, *rho)))) fail(where + " merge quotient differs");
        if (lq.transpose() * p * kt != p * kt * lr) fail(where + " L_pi^T P K~ != P K~ L_rho");
      }
    }
  });
}

SuiteResult suite_pruned_sweep(const std::vector<SimpleGraph>& graphs) {
  return run_suite("pruned-sweep", graphs, [](const SimpleGraph& g, SuiteResult& r, const auto& fail) {
    const LaplacianFacts facts = LaplacianFacts::of(g);
    if (!facts.simple_spectrum) return;
    ++r.cases;
    SearchOptions full;
    full.prune = false;
    full.probe = false;
    SearchOptions bare;
    bare.probe = false;
    const auto expected = decide_strong_uncontrollability(g, facts, full).status;
    if (decide_strong_uncontrollability(g, facts, {}).status != expected) fail("pruned sweep disagrees");
    if (decide_strong_uncontrollability(g, facts, bare).status != expected) fail("unprobed sweep disagrees");
  });
}

std::vector<SuiteResult> run_selftest(int max_n) {
  const auto graphs = connected_graphs_up_to(max_n);
  return {suite_aep_invariance(graphs), suite_twin_eigenvectors(graphs), suite_twin_bound(graphs),
          suite_twin_degree(graphs),    suite_regular_merge(graphs),     suite_pruned_sweep(graphs)};
}

}  // namespace suclab
