#pragma once

#include <utility>
#include <vector>

#include "rigidity/polytope.hpp"

namespace rigidity {

/// Gluing of the belts around two k-gonal facets F and G: the i-th neighbour
/// of F (in its oriented rotation) meets neighbour (start + i) of G for
/// forward alignment, (start - i) for reverse.
struct Alignment {
  int start = 0;
  bool reverse = false;
};

/// Connected sum at k-gonal facets surrounded by k-belts. The result keeps the
/// facets of P (F removed, later indices shifted down) followed by the facets
/// of Q off its belt, in order. The i-th belt facet of P absorbs its partner in Q.
/// Throws FacetNotBeltSurrounded.
SimplePolytope connected_sum(const SimplePolytope& p, int f, const SimplePolytope& q, int g, Alignment align);

/// Cuts off the s consecutive edges F∩g_1, ..., F∩g_s of facet F, where
/// g_1 sits at position `first` of rotation(F); s = 0 cuts the vertex F∩g_0∩g_1
/// with g_0 at position first-1. The new facet gets index m.
SimplePolytope cut_edges(const SimplePolytope& p, int f, int first, int s);

/// `vertex` is a facet triple.
SimplePolytope vertex_truncate(const SimplePolytope& p, Mask vertex);
/// Edge between adjacent facets a and b.
SimplePolytope edge_truncate(const SimplePolytope& p, int a, int b);

/// (s,k)-truncation: `run` lists the neighbours g_1..g_s of F across the cut
/// edges, consecutive in either direction; s >= 2. Throws MalformedEdgeRun.
SimplePolytope sk_truncate(const SimplePolytope& p, int f, const std::vector<int>& run);

/// All edges cut simultaneously. Old facets keep their indices; the facet of
/// edge e gets index m + (position of e in p.edges()).
SimplePolytope edge_cut_all(const SimplePolytope& p);

/// Truncate a vertex (edge) in each polytope and sum along the new facets.
SimplePolytope vertex_connected_sum(const SimplePolytope& p, Mask v, const SimplePolytope& q, Mask w,
                                    Alignment align);
SimplePolytope edge_connected_sum(const SimplePolytope& p, std::pair<int, int> e, const SimplePolytope& q,
                                  std::pair<int, int> e2, Alignment align);

}  // namespace rigidity
