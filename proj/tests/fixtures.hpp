// Shared labeled fixtures. Each one's structure is spelled out where it is
// first used; the graph6 strings are pinned in test_graph6.cpp.
#ifndef TESTS_FIXTURES_HPP
#define TESTS_FIXTURES_HPP

#include "orthospace/space.hpp"

namespace fixtures {

using orthospace::OrthoSpace;

// Rank 4, maximal orthogonal sets {0,1,2,3} and {0,1,4,5}: fulfills (L1)
// but not (L2). graph6 "E~rG".
inline OrthoSpace six() {
  return OrthoSpace::from_maximal_cliques(6, {{0, 1, 2, 3}, {0, 1, 4, 5}}).space;
}

// Rank 2 space fulfilling (L2) but not (L1); {1}⊥ = {2}⊥ = {5,6}, so it is
// not even irredundant. graph6 "F?`v?".
inline OrthoSpace seven() {
  return OrthoSpace::from_edges(7, {{0, 4}, {0, 6}, {1, 5}, {1, 6}, {2, 5}, {2, 6}, {3, 5}});
}

// Rank 3 space fulfilling (L2): one triangle {1,5,7} among six maximal
// orthogonal sets. graph6 "G?`aeG".
inline OrthoSpace eight() {
  return OrthoSpace::from_edges(8,
                                {{0, 4}, {0, 7}, {1, 5}, {1, 6}, {1, 7}, {2, 5}, {3, 6}, {5, 7}});
}

// Windmills: a hub orthogonal to everything over a perfect matching.
// graph6 "DQ{" for the 5-point one.
inline OrthoSpace w5() {
  return OrthoSpace::from_maximal_cliques(5, {{0, 2, 4}, {1, 3, 4}}).space;
}
inline OrthoSpace w7() {
  return OrthoSpace::from_maximal_cliques(7, {{0, 2, 5}, {1, 3, 5}, {4, 6, 5}}).space;
}
inline OrthoSpace w9() {
  return OrthoSpace::from_maximal_cliques(9, {{0, 2, 5}, {1, 3, 5}, {6, 7, 5}, {4, 8, 5}}).space;
}

// Path 0-1-2-3: fails (L1), strong irredundancy and the Dacey property.
// graph6 "Ch".
inline OrthoSpace p4() {
  return OrthoSpace::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
}

// Two disjoint edges 0-2, 1-3: the 4-point linear space. graph6 "CQ".
inline OrthoSpace m4() {
  return OrthoSpace::from_edges(4, {{0, 2}, {1, 3}});
}

inline OrthoSpace complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  return OrthoSpace::from_edges(n, edges);
}

inline OrthoSpace edgeless(int n) { return OrthoSpace::from_edges(n, {}); }

// Perfect matching on 2k points: i paired with i+k.
inline OrthoSpace matching(int k) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) edges.emplace_back(i, i + k);
  return OrthoSpace::from_edges(2 * k, edges);
}

inline OrthoSpace path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return OrthoSpace::from_edges(n, edges);
}

inline OrthoSpace cycle(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return OrthoSpace::from_edges(n, edges);
}

}  // namespace fixtures

#endif  // TESTS_FIXTURES_HPP
