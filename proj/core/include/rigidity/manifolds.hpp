#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rigidity/characteristic.hpp"

namespace rigidity {

/// Cohomology ring of a quasitoric manifold (over Z) or small cover (over Z2)
/// generated by the facet classes v_i, stored as evaluation data.
///
/// Orientation convention: the base vertex evaluates to +1; every other vertex
/// evaluates to that sign times det of its columns in oriented order.
struct ToricRing {
  CombinatorialBase base;
  CharMatrix lambda;
  std::vector<int> base_vertex;   // facets whose classes are eliminated
  std::vector<int> free_facets;   // basis of degree 2 (degree 1 for small covers)
  std::vector<std::vector<std::int64_t>> expr;  // expr[i]: v_i in the free basis
  std::map<std::vector<int>, std::int64_t> evaluation;  // sorted n-multisets of facets

  int n() const { return base.n; }
  int m() const { return base.m; }
  Coefficients coeffs() const { return lambda.coeffs; }
  std::int64_t eval(std::vector<int> facets) const;
  /// Top evaluation of a product of n classes given by facet coefficients.
  std::int64_t evaluate(const std::vector<std::vector<std::int64_t>>& classes) const;
};

using QtRing = ToricRing;
using SmallCoverRing = ToricRing;

/// Throws NotCharacteristic.
QtRing qt_ring(const CombinatorialBase& base, const CharMatrix& lambda);
SmallCoverRing sc_ring(const CombinatorialBase& base, const CharMatrix& lambda2);

struct CharacteristicClasses {
  /// <p1 v_j, [M]> for every facet j (n = 3); empty for n = 2.
  std::vector<std::int64_t> p1_pairing;
  /// <p1, [M]> for n = 2.
  std::optional<std::int64_t> p1_number;
  /// w_2 (w_1 for small covers) in the free basis, mod 2.
  std::vector<std::int64_t> w_low;
  /// Top Stiefel-Whitney number mod 2.
  std::int64_t w_top = 0;
};

CharacteristicClasses pontryagin_w(const ToricRing& r);

enum class IsoMode { PairEquivalence, GeneratorRestricted, Lattice };

std::string to_string(IsoMode m);

/// phi(v_i) = signs[i] * v'_{sigma(i)}, with phi[M] = orientation * [M'].
struct GeneratorWitness {
  std::vector<int> sigma;
  std::vector<int> signs;
  int orientation = 1;
};

struct RingIsoResult {
  bool isomorphic = false;
  IsoMode mode = IsoMode::PairEquivalence;
  /// False when a negative verdict carries no ring-level meaning (non-Pogorelov base).
  bool conclusive = true;
  std::optional<PairEquivalence> pair;
  std::optional<GeneratorWitness> generator;
  std::optional<Matrix> lattice;  // free-basis matrix of phi in lattice mode
};

/// Lattice mode searches all degree-2 maps with entries in [-3, 3] that carry the
/// evaluation form to itself up to sign; it needs free rank <= 2 over Z.
/// Throws ModeUnsupported for mixed dimensions or an oversized lattice search.
RingIsoResult ring_isomorphic(const ToricRing& a, const ToricRing& b, IsoMode mode);

/// Z2 decision; pair equivalence and the generator search must agree (InternalMismatch).
RingIsoResult sc_isomorphic(const SmallCoverRing& a, const SmallCoverRing& b);

/// Checks phi against evaluations and linear relations.
bool verify_generator_witness(const ToricRing& a, const ToricRing& b, const GeneratorWitness& w);
/// <(sum v_i^2) x> = orientation * <(sum v'_j^2) phi(x)> for every x in degree 2 (n = 3),
/// or the Pontryagin numbers match up to orientation (n = 2).
bool witness_preserves_p1(const ToricRing& a, const ToricRing& b, const GeneratorWitness& w);

}  // namespace rigidity
