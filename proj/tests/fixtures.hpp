#pragma once

#include "troplin/graph.hpp"
#include "troplin/model.hpp"

namespace troplin::fixtures {

// 1 -> 4 <- 2 -> 5 <- 3
inline Dag cassiopeia() { return Dag(5, {{1, 4}, {2, 4}, {2, 5}, {3, 5}}); }

// 1 -> 2, 1 -> 3, 2 -> 4, 3 -> 4
inline Dag diamond() { return Dag(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}}); }

// 1 -> 4 -> 5, 2 -> 3 -> 5
inline Dag reachability_example() { return Dag(5, {{1, 4}, {2, 3}, {3, 5}, {4, 5}}); }

// Three members of one equivalence class on seven nodes.
inline Dag seven_g() { return Dag(7, {{1, 4}, {2, 4}, {2, 5}, {3, 5}, {3, 6}, {6, 7}}); }
inline Dag seven_h() { return Dag(7, {{1, 4}, {2, 4}, {2, 5}, {3, 5}, {6, 3}, {6, 7}}); }
inline Dag seven_f() { return Dag(7, {{1, 4}, {2, 4}, {2, 5}, {3, 5}, {6, 3}, {7, 6}}); }

inline Dag chain(int n) {
  Dag g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline MaxLinearModel diamond_model(Rational c21, Rational c31, Rational c42, Rational c43) {
  const std::vector<WeightedEdge> edges{{{1, 2}, c21}, {{1, 3}, c31}, {{2, 4}, c42}, {{3, 4}, c43}};
  return MaxLinearModel::from_weighted_edges(4, edges);
}

}  // namespace troplin::fixtures
