#pragma once

#include <vector>

#include "rigidity/polytope.hpp"

namespace rigidity {

/// Cyclic facet sequence, normalized to start at its least facet with the
/// second entry below the last.
using Belt = std::vector<int>;

Belt normalize_cycle(std::vector<int> cycle);
bool is_belt(const SimplePolytope& p, const std::vector<int>& cycle);

/// All belts of length k (k = 0: every length), sorted by length then lexicographically.
std::vector<Belt> enumerate_belts(const SimplePolytope& p, int k = 0);
bool has_belt(const SimplePolytope& p, int k);

bool is_flag_polytope(const SimplePolytope& p);
bool is_pogorelov(const SimplePolytope& p);

/// Neighbours of f in cyclic order, and the cyclic sequence of facets around
/// the union of two adjacent facets.
std::vector<int> facets_around(const SimplePolytope& p, int f);
std::vector<int> facets_around_pair(const SimplePolytope& p, int a, int b);

/// Facet- and pair-surrounding criteria for flagness and the Pogorelov class.
bool every_facet_surrounded(const SimplePolytope& p);
bool every_adjacent_pair_surrounded(const SimplePolytope& p);

/// Shortest belt through i and j avoiding k; ties broken lexicographically.
/// Throws NotFound.
Belt find_separating_belt(const SimplePolytope& p, int i, int j, int k);

struct ComponentAvoidingBelt {
  Belt belt;
  int component = 0;           // 0: arc from i towards j in belt order, 1: the other arc
  std::vector<int> arcs[2];    // the two components of belt minus {i, j}
};

/// Shortest belt through i and j avoiding k whose arc `component` is disjoint from F_k.
/// Throws NotFound.
ComponentAvoidingBelt find_component_avoiding_belt(const SimplePolytope& p, int i, int j, int k);

struct SurfacePieceHomology {
  int r2 = 0, r1 = 0, r0 = 0;
  std::vector<std::vector<int>> components;
  std::vector<int> boundary_cycles;  // per component
};

SurfacePieceHomology surface_piece_homology(const SimplePolytope& p, Mask facets);

}  // namespace rigidity
