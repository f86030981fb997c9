#pragma once

#include <functional>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "rigidity/linalg.hpp"
#include "rigidity/subset.hpp"

namespace rigidity {

/// Abstract simplicial complex on vertices 0..m-1, stored by maximal faces.
/// The empty face and every singleton are always present.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  SimplicialComplex(int m, const std::vector<Mask>& maximal_faces);

  int m() const { return m_; }
  const std::vector<Mask>& maximal_faces() const { return maximal_; }

  /// All faces including the empty one, ordered by size then mask value.
  const std::vector<Mask>& faces() const { return faces_; }
  bool is_face(Mask s) const { return face_set_.count(s) != 0; }
  int dimension() const;

  /// Vertices joined to v by an edge.
  Mask neighbours(int v) const { return adjacency_[v]; }
  bool has_edge(int a, int b) const { return contains(adjacency_[a], b); }

  /// Alternating sum of nonempty face counts.
  int euler_characteristic() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.m_ == b.m_ && a.maximal_ == b.maximal_;
  }

 private:
  int m_ = 0;
  std::vector<Mask> maximal_;
  std::vector<Mask> faces_;
  std::unordered_set<Mask> face_set_;
  std::vector<Mask> adjacency_;
};

/// Complex K_J re-indexed to 0..|J|-1; `vertices[k]` is the original label of vertex k.
struct FullSubcomplex {
  SimplicialComplex complex;
  std::vector<int> vertices;
};

FullSubcomplex full_subcomplex(const SimplicialComplex& k, Mask j);

/// Inclusion-minimal non-faces.
std::vector<Mask> missing_faces(const SimplicialComplex& k);
bool is_flag(const SimplicialComplex& k);

struct HomologyGroup {
  int rank = 0;
  std::vector<std::int64_t> torsion;
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// Reduced cohomology in degrees -1..dim.
struct GradedHomology {
  Coefficients coeffs = Coefficients::Z;
  std::vector<HomologyGroup> groups;  // groups[d + 1]

  HomologyGroup at(int d) const;
  int top_degree() const { return static_cast<int>(groups.size()) - 2; }
};

GradedHomology reduced_cohomology(const SimplicialComplex& k, Coefficients c);

/// Faces of size `size` within `within`, in the order of `faces()`.
std::vector<Mask> faces_within(const SimplicialComplex& k, Mask within, int size);

/// Augmented simplicial coboundary C^{d} -> C^{d+1} between the given face
/// lists (sizes d+1 and d+2); removing the i-th smallest vertex carries (-1)^i.
Matrix simplicial_coboundary(const std::vector<Mask>& lower, const std::vector<Mask>& upper, Coefficients c);

struct CycleQuery {
  std::optional<std::pair<int, int>> through;
  Mask avoid = 0;
  int min_len = 4;
  int max_len = 0;  // 0: unbounded
};

/// Induced cycles of the 1-skeleton. Each cycle is reported once, starting at
/// its least vertex and oriented so the second entry is below the last.
/// The visitor returns false to stop.
void for_each_chordless_cycle(const SimplicialComplex& k, const CycleQuery& q,
                              const std::function<bool(const std::vector<int>&)>& visit);

std::vector<std::vector<int>> chordless_cycles(const SimplicialComplex& k, const CycleQuery& q = {});

/// "m=<int>" then one maximal face per line, 1-based.
std::string to_text(const SimplicialComplex& k);
SimplicialComplex complex_from_text(const std::string& text);

}  // namespace rigidity
