#include "doctest.h"

#include <set>

#include "example_graphs.hpp"
#include "suclab/canonical.hpp"
#include "suclab/error.hpp"
#include "suclab/partition.hpp"

using namespace suclab;

TEST_CASE("partition validation and accessors") {
  const Partition p({{2, 0}, {1}}, 3);
  CHECK(p.cells()[0] == std::vector<Vertex>{0, 2});
  CHECK(p.cell_of(2) == 0);
  CHECK(p.cell_of(1) == 1);
  CHECK(p.to_string() == "[[0,2],[1]]");
  CHECK_THROWS_AS(Partition({{0}, {0, 1}}, 2), PreconditionError);
  CHECK_THROWS_AS(Partition({{0}}, 2), PreconditionError);
  CHECK_THROWS_AS(Partition({{0, 2}}, 2), PreconditionError);
  CHECK_THROWS_AS(Partition({{0}, {}, {1}}, 2), PreconditionError);
  const std::vector<int> labels{1, 0, 1};
  CHECK(Partition::from_labels(labels) == Partition({{1}, {0, 2}}, 3));
  CHECK(Partition({{1}, {0}}, 2).sorted_by_min() == Partition::singletons(2));
}

TEST_CASE("characteristic matrix of the AEP example matches the printed transpose") {
  const IntMatrix expected{{1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0},
                           {0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0},
                           {0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0},
                           {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}};
  const IntMatrix p = characteristic_matrix(fixtures::aep_example_partition());
  CHECK(p.transpose() == expected);
  CHECK(p.transpose() * p == cell_size_matrix(fixtures::aep_example_partition()));
}

TEST_CASE("quotient of the AEP example matches the printed matrices") {
  const SimpleGraph g = fixtures::aep_example();
  const Partition pi = fixtures::aep_example_partition();
  REQUIRE(is_aep(g, pi));
  // Internal degrees differ: 0 has one neighbor in its cell, 2 has two.
  CHECK_FALSE(is_equitable(g, pi));
  CHECK(degree_in(g, 0, pi.cell(0)) == 1);
  CHECK(degree_in(g, 2, pi.cell(0)) == 2);
  const WeightedDigraph q = quotient(g, pi);
  CHECK(q.adjacency() == IntMatrix{{0, 1, 0, 0}, {2, 0, 2, 1}, {0, 1, 0, 1}, {0, 2, 4, 0}});
  CHECK(q.laplacian() == IntMatrix{{1, -1, 0, 0}, {-2, 5, -2, -1}, {0, -1, 2, -1}, {0, -2, -4, 6}});
  const IntMatrix l = laplacian(g);
  const IntMatrix p = characteristic_matrix(pi);
  CHECK(preserves_image(l, p));
  CHECK(l * p == p * q.laplacian());
}

TEST_CASE("non-AEP partitions are rejected by quotient") {
  const SimpleGraph p3 = graph_from_edges(3, {{0, 1}, {1, 2}});
  const Partition bad({{0, 1}, {2}}, 3);
  CHECK_FALSE(is_aep(p3, bad));
  CHECK_THROWS_AS(quotient(p3, bad), PreconditionError);
  CHECK(is_aep(p3, Partition({{0, 2}, {1}}, 3)));
  CHECK(is_aep(p3, Partition::whole(3)));
  CHECK(is_aep(p3, Partition::singletons(3)));
}

TEST_CASE("rho-merge and pi-regularity") {
  // Cells {0,1,2}, {3,4}, {5,6}, {7}; merge {C1,C4} and {C2,C3}.
  const Partition pi({{0, 1, 2}, {3, 4}, {5, 6}, {7}}, 8);
  const MetaPartition rho({{0, 3}, {1, 2}}, 4);
  CHECK(rho_merge(pi, rho) == Partition({{0, 1, 2, 7}, {3, 4, 5, 6}}, 8));
  CHECK_FALSE(is_pi_regular(pi, rho));
  const MetaPartition regular({{0}, {1, 2}, {3}}, 4);
  CHECK(is_pi_regular(pi, regular));
  const IntMatrix k = cell_size_matrix(pi);
  const IntMatrix kt = representative_size_matrix(pi, regular);
  CHECK(kt == IntMatrix{{3, 0, 0}, {0, 2, 0}, {0, 0, 1}});
  CHECK(k * characteristic_matrix(regular) == characteristic_matrix(regular) * kt);
}

TEST_CASE("invariance tests on explicit subspaces") {
  const IntMatrix m{{2, 0}, {0, 3}};
  CHECK(preserves_image(m, IntMatrix{{1}, {0}}));
  CHECK_FALSE(preserves_image(m, IntMatrix{{1}, {1}}));
  CHECK(preserves_kernel(m, IntMatrix{{1}, {0}}));
  const IntMatrix shear{{1, 1}, {0, 1}};
  CHECK(preserves_image(shear, IntMatrix{{1}, {0}}));
  CHECK_FALSE(preserves_kernel(shear, IntMatrix{{1}, {0}}));
}

namespace {

std::size_t bell(int k) {
  std::vector<std::vector<std::size_t>> t(static_cast<std::size_t>(k + 1));
  t[0] = {1};
  for (int i = 1; i <= k; ++i) {
    t[static_cast<std::size_t>(i)].push_back(t[static_cast<std::size_t>(i - 1)].back());
    for (int j = 0; j < i; ++j)
      t[static_cast<std::size_t>(i)].push_back(t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +
                                               t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)]);
  }
  return t[static_cast<std::size_t>(k)][0];
}

}  // namespace

TEST_CASE("restricted-growth strings enumerate each set partition once, in order") {
  for (int k = 0; k <= 8; ++k) {
    SetPartitionStream stream(k);
    std::set<std::vector<int>> seen;
    std::vector<int> previous;
    while (auto rgs = stream.next()) {
      CHECK(static_cast<int>(rgs->size()) == k);
      int top = -1;
      for (int x : *rgs) {
        CHECK(x <= top + 1);
        top = std::max(top, x);
      }
      if (!previous.empty()) CHECK(previous < *rgs);
      previous = *rgs;
      CHECK(seen.insert(*rgs).second);
    }
    CHECK(seen.size() == bell(k));
  }
}

TEST_CASE("meta-partition constraints") {
  std::size_t count = 0;
  MetaPartitionStream one_group(5, MetaConstraint::tail_as_one_group(2));
  while (auto rho = one_group.next()) {
    ++count;
    CHECK(rho->group_of(3) == rho->group_of(4));
    CHECK(rho->group(rho->group_of(3)).size() == 2);
    CHECK(rho->group_of(3) == rho->group_count() - 1);
  }
  CHECK(count == bell(3));

  count = 0;
  MetaPartitionStream singles(4, MetaConstraint::tail_as_singletons(1));
  while (auto rho = singles.next()) {
    ++count;
    CHECK(rho->group(rho->group_of(3)).size() == 1);
  }
  CHECK(count == bell(3));

  count = 0;
  MetaPartitionStream free(4);
  while (free.next()) ++count;
  CHECK(count == bell(4));
  CHECK_THROWS_AS(MetaPartitionStream(13), PreconditionError);
  CHECK_THROWS_AS(MetaPartitionStream(0), PreconditionError);
}

TEST_CASE("enumerate_aeps") {
  // Every partition of a complete graph is almost equitable.
  std::vector<Edge> edges;
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) edges.emplace_back(u, v);
  CHECK(enumerate_aeps(graph_from_edges(5, edges)).size() == bell(5));
  // The path on three vertices: singletons, whole, and {{0,2},{1}}.
  CHECK(enumerate_aeps(graph_from_edges(3, {{0, 1}, {1, 2}})).size() == 3);
  CHECK_THROWS_AS(enumerate_aeps(SimpleGraph(11)), PreconditionError);
}

TEST_CASE("quotient of an AEP quotient equals the quotient of the merge") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& g : generate_connected(n)) {
      for (const auto& pi : enumerate_aeps(g)) {
        const WeightedDigraph gq = quotient(g, pi);
        MetaPartitionStream stream(pi.cell_count());
        while (auto rho = stream.next()) {
          if (!is_aep(gq, rho->as_partition())) continue;
          const Partition merged = rho_merge(pi, *rho);
          // An AEP of the quotient lifts to an AEP of g.
          REQUIRE(is_aep(g, merged));
          CHECK(quotient(gq, rho->as_partition()) == quotient(g, merged));
        }
      }
    }
  }
}
