#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rigidity/linalg.hpp"
#include "rigidity/polytope.hpp"

namespace rigidity {

/// n x m characteristic matrix; column i belongs to facet i.
struct CharMatrix {
  Matrix entries;
  Coefficients coeffs = Coefficients::Z;

  int n() const { return entries.rows(); }
  int m() const { return entries.cols(); }
  std::vector<std::int64_t> column(int i) const { return entries.column(i); }
  /// n x k matrix of the given columns, in order.
  Matrix columns(const std::vector<int>& facets) const;

  friend bool operator==(const CharMatrix&, const CharMatrix&) = default;
};

CharMatrix make_char_matrix(const std::vector<std::vector<std::int64_t>>& rows, Coefficients c);

struct CharacteristicCheck {
  bool ok = true;
  std::vector<int> violating_vertex;  // sorted facets of the first failing vertex
  std::int64_t determinant = 0;       // at the failing vertex
};

/// Determinant condition at every vertex (+-1 over Z, 1 over Z2). Throws DimensionMismatch.
CharacteristicCheck is_characteristic(const CombinatorialBase& base, const CharMatrix& l);

/// Proper 4-colouring: colour[i] in 0..3 for facet i.
using Colouring = std::vector<int>;

std::vector<Colouring> enumerate_colourings(const SimplePolytope& p);
/// Colourings up to permutation of colours and combinatorial symmetries of P;
/// one representative per class, each with colours in order of first use.
std::vector<Colouring> colouring_class_representatives(const SimplePolytope& p);
int colouring_classes(const SimplePolytope& p);
/// Colours 0, 1, 2 go to e1, e2, e3 and colour 3 to e1 + e2 + e3.
CharMatrix colouring_to_matrix(const Colouring& chi);

/// Re-reads a Z2 characteristic matrix as a 0/1 integer matrix. Throws LiftFailed.
CharMatrix lift_mod2(const CombinatorialBase& base, const CharMatrix& l2);
CharMatrix reduce_mod2(const CharMatrix& l);

/// Witness for Lambda' = A Lambda B after moving column i to sigma[i]:
/// lambda'_{sigma(i)} = signs[i] * A lambda_i.
struct PairEquivalence {
  std::vector<int> sigma;
  Matrix a;
  std::vector<int> signs;
};

std::optional<PairEquivalence> pairs_equivalent(const CombinatorialBase& pa, const CharMatrix& la,
                                                const CombinatorialBase& pb, const CharMatrix& lb);

/// Applies a witness to (base, la); true iff the result equals lb column by column.
bool verify_pair_equivalence(const CharMatrix& la, const CharMatrix& lb, const PairEquivalence& w);

struct CharZ2Census {
  long count = 0;    // Z2-characteristic matrices
  long classes = 0;  // up to GL(3, Z2) and symmetries of P
};

/// Exhaustive; throws SizeGuard for m > 14.
CharZ2Census enumerate_char_z2(const SimplePolytope& p);

/// n rows of m integers.
std::string to_text(const CharMatrix& l);
CharMatrix char_matrix_from_text(const std::string& text, Coefficients c);

}  // namespace rigidity
