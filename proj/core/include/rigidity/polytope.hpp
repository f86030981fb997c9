#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rigidity/complex.hpp"
#include "rigidity/subset.hpp"

namespace rigidity {

/// Combinatorial simple 3-polytope given by the cyclic order of neighbours
/// around every facet. Facets are 0-based. Rotations are normalized to one
/// coherent orientation of the boundary sphere, keeping facet 0 as given.
class SimplePolytope {
 public:
  /// Validates the Steinitz conditions; throws NonSimple, NotSphere or BadIntersection.
  static SimplePolytope from_rotation_system(std::vector<std::vector<int>> rotations);

  int m() const { return static_cast<int>(rotation_.size()); }
  const std::vector<std::vector<int>>& rotation() const { return rotation_; }
  const std::vector<int>& rotation(int f) const { return rotation_[f]; }
  int facet_size(int f) const { return static_cast<int>(rotation_[f].size()); }

  bool adjacent(int a, int b) const { return contains(neighbours_[a], b); }
  Mask neighbours(int f) const { return neighbours_[f]; }

  /// Neighbour of f following / preceding g in the oriented rotation of f.
  int successor(int f, int g) const;
  int predecessor(int f, int g) const;
  /// Position of g in rotation(f), or -1.
  int position(int f, int g) const;

  /// Vertices as facet triples, sorted by mask value.
  const std::vector<Mask>& vertices() const { return vertices_; }
  bool is_vertex(Mask triple) const;
  /// Edges as facet pairs (a < b), sorted.
  std::vector<std::pair<int, int>> edges() const;

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const;

  friend bool operator==(const SimplePolytope& a, const SimplePolytope& b) {
    return a.rotation_ == b.rotation_;
  }

 private:
  std::vector<std::vector<int>> rotation_;
  std::vector<Mask> neighbours_;
  std::vector<Mask> vertices_;
};

/// Vertex-facet incidence data shared by 3-polytopes and polygons (n = 2).
struct CombinatorialBase {
  int n = 3;
  int m = 0;
  std::vector<Mask> vertices;  // sorted
  std::optional<SimplePolytope> polytope;

  bool is_vertex(Mask s) const;
  /// Lexicographically least vertex, as a sorted facet list.
  std::vector<int> base_vertex() const;
  /// Cyclic facet order around a vertex (3-polytopes) or along the polygon.
  std::vector<int> oriented_vertex(Mask v) const;
};

CombinatorialBase base_of(const SimplePolytope& p);
CombinatorialBase polygon(int m);

/// All facet bijections sigma (sigma[i] = image of facet i) between combinatorially
/// equivalent bases, reflections included, in lexicographic order.
std::vector<std::vector<int>> base_isomorphisms(const CombinatorialBase& a, const CombinatorialBase& b);

SimplicialComplex dual_complex(const SimplePolytope& p);

struct PkVector {
  std::map<int, int> p;  // k -> number of k-gonal facets
  int f0 = 0, f1 = 0, f2 = 0;
  int at(int k) const {
    auto it = p.find(k);
    return it == p.end() ? 0 : it->second;
  }
};

/// Throws InvariantViolation if the facet-count identity or Euler relation fails.
PkVector pk_vector(const SimplePolytope& p);

/// Canonical code of the planar map; equal codes iff combinatorially equivalent.
std::string canonical_code(const SimplePolytope& p);

std::optional<std::vector<int>> is_isomorphic(const SimplePolytope& a, const SimplePolytope& b);
std::vector<std::vector<int>> isomorphisms(const SimplePolytope& a, const SimplePolytope& b);

/// Relabels facets: facet i of p becomes facet perm[i].
SimplePolytope relabel(const SimplePolytope& p, const std::vector<int>& perm);

/// Named polytopes. Facet numbering:
///   simplex: 4 facets; cube: opposite pairs (0,3), (1,4), (2,5);
///   prism(k): 0 top, 1 bottom, 2..k+1 sides in cyclic order;
///   barrel(k): 0 top, 1 bottom, 2..k+1 upper belt, k+2..2k+1 lower belt.
SimplePolytope simplex();
SimplePolytope cube();
SimplePolytope prism(int k);
SimplePolytope barrel(int k);
SimplePolytope dodecahedron();

/// "m=<int>" then "i: j1 j2 ..." per facet, 1-based.
std::string to_text(const SimplePolytope& p);
SimplePolytope polytope_from_text(const std::string& text);
std::string to_json(const SimplePolytope& p);
SimplePolytope polytope_from_json(const std::string& text);

}  // namespace rigidity
