#include "doctest.h"

#include "example_graphs.hpp"
#include "suclab/canonical.hpp"
#include "suclab/controllability.hpp"
#include "suclab/error.hpp"
#include "suclab/graph6.hpp"
#include "suclab/linalg.hpp"
#include "suclab/selftest.hpp"
#include "suclab/twins.hpp"

using namespace suclab;

TEST_CASE("twin pairs of small graphs") {
  const SimpleGraph p3 = graph_from_edges(3, {{0, 1}, {1, 2}});
  const auto twins = twin_pairs(p3);
  REQUIRE(twins.size() == 1);
  CHECK(twins[0] == TwinPair{0, 2, false, 1});
  CHECK(is_twin_pair(p3, 2, 0));
  CHECK_FALSE(is_twin_pair(p3, 0, 1));
  // K3: every pair is a twin pair, and they overlap.
  CHECK(twin_pairs(graph_from_edges(3, {{0, 1}, {0, 2}, {1, 2}})).size() == 3);
}

TEST_CASE("twin pairs of the even example") {
  const auto twins = twin_pairs(fixtures::even_suc_example());
  REQUIRE(twins.size() == 3);
  CHECK(twins[0] == TwinPair{0, 1, true, 3});
  CHECK(twins[1] == TwinPair{2, 3, false, 2});
  CHECK(twins[2] == TwinPair{4, 5, false, 1});
}

TEST_CASE("Faria eigenvectors") {
  const SimpleGraph g = fixtures::even_suc_example();
  const IntMatrix l = laplacian(g);
  for (const auto& t : twin_pairs(g)) {
    const FariaEigenpair e = faria_vector(g, t);
    IntVector expected = e.vector;
    for (auto& x : expected) x *= e.eigenvalue;
    CHECK(l * e.vector == expected);
    CHECK(e.eigenvalue == g.degree(t.u) + g.weight(t.u, t.v));
  }
  CHECK_THROWS_AS(faria_vector(g, TwinPair{0, 2, false, 0}), PreconditionError);
}

TEST_CASE("twin bound values") {
  CHECK(max_twin_bound(1) == 0);
  CHECK(max_twin_bound(2) == 0);
  CHECK(max_twin_bound(3) == 1);
  CHECK(max_twin_bound(8) == 3);
  CHECK(max_twin_bound(11) == 5);
}

TEST_CASE("twin graph classification") {
  // P3 meets the literal definition: simple spectrum {0,1,3} and one pair.
  const auto p3 = is_twin_graph(graph_from_edges(3, {{0, 1}, {1, 2}}));
  CHECK(p3.is_twin_graph);
  CHECK(p3.twin_pair_count == 1);

  const auto k2 = is_twin_graph(graph_from_edges(2, {{0, 1}}));
  CHECK_FALSE(k2);
  CHECK(k2.reason == TwinGraphCheck::Reason::TwinCountAboveBound);
  CHECK_THROWS_AS(twin_partition(graph_from_edges(2, {{0, 1}})), PreconditionError);

  const auto k3 = is_twin_graph(graph_from_edges(3, {{0, 1}, {0, 2}, {1, 2}}));
  CHECK(k3.reason == TwinGraphCheck::Reason::NotSimpleSpectrum);

  CHECK(is_twin_graph(fixtures::even_suc_example()));
  CHECK(is_twin_graph(fixtures::odd_twin_example()));

  const auto p4 = is_twin_graph(graph_from_edges(4, {{0, 1}, {1, 2}, {2, 3}}));
  CHECK(p4.reason == TwinGraphCheck::Reason::TwinCountBelowBound);
}

TEST_CASE("twin partition ordering") {
  const TwinPartition tp = twin_partition(fixtures::odd_twin_example());
  CHECK(tp.twin_count() == 5);
  CHECK(tp.singletons() == std::vector<Vertex>{10});
  CHECK(tp.partition() == Partition({{0, 1}, {2, 3}, {4, 5}, {6, 7}, {8, 9}, {10}}, 11));
  CHECK(is_equitable(fixtures::odd_twin_example(), tp.partition()));
  CHECK(min_input_lower_bound(fixtures::odd_twin_example()) == 5);
  const TwinPartition even = twin_partition(fixtures::even_suc_example());
  CHECK(even.partition() == Partition({{0, 1}, {2, 3}, {4, 5}, {6}, {7}}, 8));
}

TEST_CASE("input sets missing a twin cell are uncontrollable") {
  const SimpleGraph g = fixtures::even_suc_example();
  const TwinPartition tp = twin_partition(g);
  int missing = 0;
  for (std::uint64_t mask = 1; mask < (1ULL << 8); ++mask) {
    std::vector<Vertex> inputs;
    for (Vertex v = 0; v < 8; ++v)
      if ((mask >> v) & 1U) inputs.push_back(v);
    if (uncontrollable_input_sets_missing_twin(g, inputs)) {
      ++missing;
    } else if (is_controllable(laplacian(g), input_matrix(8, inputs))) {
      CHECK(static_cast<int>(inputs.size()) >= tp.twin_count());
    }
  }
  // 255 nonempty sets, 3^3 * 2^2 of which meet every twin cell.
  CHECK(missing == 255 - 27 * 4);
}

TEST_CASE("twin properties over every graph on at most 7 vertices") {
  std::vector<SimpleGraph> graphs;
  for (int n = 1; n <= 7; ++n)
    for (auto& g : generate_all(n)) graphs.push_back(std::move(g));

  const SuiteResult eig = suite_twin_eigenvectors(graphs);
  CHECK(eig.counterexamples == 0);

  // The bound and the degree claim fail only for K2: with n = 2 the
  // vectors e_u - e_v and -e + n e_u coincide, so the extra eigenvector
  // that forces a repeated eigenvalue does not exist.
  const SuiteResult bound = suite_twin_bound(graphs);
  CHECK(bound.counterexamples == 1);
  REQUIRE(bound.samples.size() == 1);
  CHECK(bound.samples[0].rfind("A_:", 0) == 0);
  const SuiteResult degree = suite_twin_degree(graphs);
  CHECK(degree.counterexamples == 1);
  REQUIRE(degree.samples.size() == 1);
  CHECK(degree.samples[0].rfind("A_:", 0) == 0);
}

TEST_CASE("simple spectrum excludes overlapping twin pairs") {
  for (int n = 3; n <= 7; ++n) {
    for (const auto& g : generate_all(n)) {
      const LaplacianFacts facts = LaplacianFacts::of(g);
      if (!facts.simple_spectrum) continue;
      std::uint64_t used = 0;
      for (const auto& t : facts.twins) {
        const std::uint64_t both = (1ULL << t.u) | (1ULL << t.v);
        CHECK((used & both) == 0);
        used |= both;
      }
    }
  }
}

TEST_CASE("twin graph counts on small vertex counts") {
  // Frozen from an independent floating-point eigenvalue sweep.
  const std::vector<int> expected{1, 0, 1, 1, 1, 6, 12};
  for (int n = 1; n <= 7; ++n) {
    int count = 0;
    for (const auto& g : generate_all(n)) {
      const bool twin = is_twin_graph(g).is_twin_graph;
      count += twin;
      if (twin) CHECK(is_connected(g));
    }
    CHECK(count == expected[static_cast<std::size_t>(n - 1)]);
  }
}
