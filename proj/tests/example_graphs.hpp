#pragma once

// Reference example graphs, vertices v_1..v_n relabeled 0..n-1.

#include <string>

#include "suclab/graph.hpp"
#include "suclab/partition.hpp"

namespace fixtures {

/// 11 vertices with the almost equitable partition below.
inline suclab::SimpleGraph aep_example() {
  return suclab::graph_from_edges(11, {{0, 3}, {1, 2}, {2, 3}, {0, 4}, {2, 4}, {1, 5}, {3, 5},
                                       {4, 6}, {4, 8}, {5, 7}, {5, 9}, {6, 8}, {7, 8}, {7, 9},
                                       {4, 10}, {5, 10}, {6, 10}, {7, 10}, {8, 10}, {9, 10}});
}

inline suclab::Partition aep_example_partition() {
  return suclab::Partition({{0, 1, 2, 3}, {4, 5}, {6, 7, 8, 9}, {10}}, 11);
}

/// Odd twin graph on 11 vertices whose twin quotient has a merging AEP.
inline suclab::SimpleGraph odd_twin_example() {
  return suclab::graph_from_edges(11, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {2, 10}, {3, 10}, {4, 10},
                                       {5, 10}, {6, 10}, {7, 10}, {6, 8}, {6, 9}, {7, 8}, {7, 9}, {8, 9}});
}

/// Even strongly uncontrollable twin graph on 8 vertices; 6 and 7 are the hubs.
inline suclab::SimpleGraph even_suc_example() {
  return suclab::graph_from_edges(8, {{0, 1}, {0, 6}, {1, 6}, {2, 6}, {3, 6}, {2, 7}, {3, 7}, {4, 7}, {5, 7}});
}

#ifndef SUCLAB_FIXTURE_DIR
#define SUCLAB_FIXTURE_DIR "fixtures"
#endif

inline std::string fixture_path(const std::string& name) { return std::string(SUCLAB_FIXTURE_DIR) + "/" + name; }

}  // namespace fixtures
